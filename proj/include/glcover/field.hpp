#pragma once

// Small finite fields F_q (q = p^e <= 256) by lookup tables, and dense
// polynomials over them.

#include <cstdint>
#include <string>
#include <vector>

namespace glcover {

using FqElem = std::uint8_t;

/// Polynomial over F_q, ascending coefficients, no trailing zeros.
struct FqPoly {
    std::vector<FqElem> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    friend bool operator==(const FqPoly&, const FqPoly&) = default;
};

/// F_q with elements encoded 0..q-1 as base-p coefficient vectors modulo the
/// lexicographically least monic irreducible of degree e over F_p.
class Field {
public:
    /// Throws DomainError unless q is a prime power <= 256.
    explicit Field(unsigned q);

    unsigned q() const { return q_; }
    unsigned p() const { return p_; }
    unsigned e() const { return e_; }
    /// Modulus over F_p, ascending, monic of degree e (just "t" when e = 1).
    const std::vector<unsigned>& modulus() const { return modulus_; }

    FqElem add(FqElem a, FqElem b) const { return add_[a * q_ + b]; }
    FqElem sub(FqElem a, FqElem b) const { return add_[a * q_ + neg_[b]]; }
    FqElem mul(FqElem a, FqElem b) const { return mul_[a * q_ + b]; }
    FqElem neg(FqElem a) const { return neg_[a]; }
    /// a must be nonzero.
    FqElem inv(FqElem a) const { return inv_[a]; }
    const FqElem* add_table() const { return add_.data(); }
    const FqElem* mul_table() const { return mul_.data(); }

    /// Element from an integer in the prime field (reduced mod p).
    FqElem from_int(long v) const;

    // Polynomial arithmetic over this field.
    FqPoly normalize(std::vector<FqElem> c) const;
    FqPoly poly_add(const FqPoly& a, const FqPoly& b) const;
    FqPoly poly_sub(const FqPoly& a, const FqPoly& b) const;
    FqPoly poly_mul(const FqPoly& a, const FqPoly& b) const;
    FqPoly poly_pow(const FqPoly& a, unsigned e) const;
    /// Remainder of a by nonzero b.
    FqPoly poly_mod(const FqPoly& a, const FqPoly& b) const;
    bool poly_divides(const FqPoly& d, const FqPoly& a) const;
    bool is_irreducible(const FqPoly& f) const;
    /// All monic irreducible polynomials of the given degree, in encoding order.
    std::vector<FqPoly> monic_irreducibles(unsigned degree) const;
    std::string poly_to_string(const FqPoly& f) const;

private:
    unsigned q_ = 0, p_ = 0, e_ = 0;
    std::vector<unsigned> modulus_;
    std::vector<FqElem> add_, mul_, neg_, inv_;
};

} // namespace glcover
