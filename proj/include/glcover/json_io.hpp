#pragma once

// JSON encodings of the exact types. Integers and rationals travel as decimal
// strings ("-3", "5/6"); polynomials as ascending coefficient arrays; rational
// functions as {"num": [...], "den": [...]}.

#include "glcover/exactalg.hpp"

#include <json.hpp>

namespace glcover {

using Json = nlohmann::json;

Json to_json(const BigInt& x);
Json to_json(const BigRational& x);
Json to_json(const IntPolynomial& p);
Json to_json(const RationalFunction& f);

BigInt bigint_from_json(const Json& j);
BigRational rational_from_json(const Json& j);
IntPolynomial poly_from_json(const Json& j);
RationalFunction rf_from_json(const Json& j);

} // namespace glcover
