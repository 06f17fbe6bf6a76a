#pragma once

// Exact arithmetic substrate: big rationals, integer polynomials in the formal
// symbol q, and reduced rational functions of q.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace glcover {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Canonical num/den; throws DivisionByZero when den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

/// Dense polynomial with integer coefficients; index = degree in q.
/// The zero polynomial has an empty coefficient list.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    explicit IntPolynomial(const BigInt& constant);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial monomial(const BigInt& coeff, std::size_t degree);
    /// The polynomial q.
    static IntPolynomial symbol() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    const BigInt& leading() const;
    /// Largest power of q dividing the polynomial (0 for the zero polynomial).
    std::size_t valuation() const;

    /// Non-negative gcd of all coefficients (0 for the zero polynomial).
    BigInt content() const;
    /// this / content, with positive leading coefficient.
    IntPolynomial primitive_part() const;
    BigInt max_norm() const;

    BigInt eval(const BigInt& x) const;
    BigRational eval(const BigRational& x) const;

    IntPolynomial pow(unsigned e) const;
    IntPolynomial shifted(std::size_t k) const; ///< this * q^k
    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const IntPolynomial& o);
    IntPolynomial& operator*=(const BigInt& c);
    /// Divides every coefficient by c; c must divide all of them.
    IntPolynomial& divide_exact(const BigInt& c);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Human-readable form, e.g. "q^2 + q + 1".
    std::string to_string() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Quotient a / b when b divides a in Z[q]; nullopt otherwise. b must be nonzero.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Greatest common divisor over Q[q], returned primitive with positive
/// leading coefficient. gcd(0, 0) = 0.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

namespace detail {
/// Primitive polynomial remainder sequence. Inputs nonzero.
IntPolynomial gcd_prs(IntPolynomial a, IntPolynomial b);
/// Heuristic evaluation/interpolation gcd; a result is returned only after it
/// has been verified to divide both inputs. Inputs primitive and nonzero.
std::optional<IntPolynomial> gcd_heuristic(const IntPolynomial& a, const IntPolynomial& b);
} // namespace detail

/// num/den in lowest terms: gcd(num, den) = 1 over Q[q], joint integer content
/// of num and den is 1, and den has a positive leading coefficient. Two equal
/// functions therefore have identical representations.
class RationalFunction {
public:
    RationalFunction() : den_(BigInt(1)) {}
    RationalFunction(IntPolynomial p); // NOLINT(google-explicit-constructor)
    RationalFunction(IntPolynomial num, IntPolynomial den);
    explicit RationalFunction(const BigRational& c);
    RationalFunction(long c) : RationalFunction(BigRational(c)) {} // NOLINT

    const IntPolynomial& num() const { return num_; }
    const IntPolynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    /// The function as an integer polynomial, if it is one.
    std::optional<IntPolynomial> as_int_polynomial() const;

    RationalFunction inverse() const;
    RationalFunction pow(int e) const;
    RationalFunction operator-() const;
    BigRational eval(const BigRational& q0) const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    RationalFunction& operator*=(const BigRational& c);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const;

private:
    struct Coprime {};
    RationalFunction(IntPolynomial num, IntPolynomial den, Coprime);
    void normalize_content();

    IntPolynomial num_;
    IntPolynomial den_;
};

enum class ArithOp { add, sub, mul, div };

RationalFunction rf_arith(const RationalFunction& lhs, const RationalFunction& rhs, ArithOp op);

/// Exact value at q0; throws PoleError when the denominator vanishes there.
BigRational rf_eval(const RationalFunction& f, const BigRational& q0);

/// prod_{i=1..d} (1 - q^{-i}).
RationalFunction phi_d(unsigned d);

/// Decimal rendering of a rational with `digits` fractional digits, truncated
/// toward -infinity. Display only.
std::string to_decimal(const BigRational& x, unsigned digits);

} // namespace glcover
