#include "glcover/json_io.hpp"

#include "glcover/error.hpp"

namespace glcover {

Json to_json(const BigInt& x) { return x.get_str(); }

Json to_json(const BigRational& x) { return x.get_str(); }

Json to_json(const IntPolynomial& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

Json to_json(const RationalFunction& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long>());
    if (!j.is_string()) throw DomainError("expected an integer as a decimal string");
    BigInt x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw DomainError("malformed integer '" + j.get<std::string>() + "'");
    return x;
}

BigRational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return BigRational(j.get<long>());
    if (!j.is_string()) throw DomainError("expected a rational as a decimal string");
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return BigRational(bigint_from_json(s));
    return make_rational(bigint_from_json(s.substr(0, slash)), bigint_from_json(s.substr(slash + 1)));
}

IntPolynomial poly_from_json(const Json& j) {
    if (!j.is_array()) throw DomainError("expected a coefficient array");
    std::vector<BigInt> c;
    for (const auto& e : j) c.push_back(bigint_from_json(e));
    return IntPolynomial(std::move(c));
}

RationalFunction rf_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw DomainError("expected {num, den}");
    return RationalFunction(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

} // namespace glcover
