#pragma once

// The abelian-cover census of GL_n(q): labels of the classes in the covering
// family, their normalizer orders, b_n, and the |A_n(q)| polynomials.

#include "glcover/exactalg.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace glcover {

/// One (d, m) label with its multiplicity.
struct MuEntry {
    unsigned d = 1;
    unsigned m = 1;
    unsigned mult = 1;
    auto operator<=>(const MuEntry&) const = default;
};

/// Finitely supported map (d, m) -> multiplicity with sum d*m*mult = n.
/// Support is kept sorted by (d, m); zero multiplicities are absent.
class MuFunction {
public:
    MuFunction() = default;
    /// Entries may come in any order; duplicates are merged, zeros dropped.
    explicit MuFunction(std::vector<MuEntry> entries);

    const std::vector<MuEntry>& support() const { return entries_; }
    unsigned operator()(unsigned d, unsigned m) const;
    unsigned weight() const;
    std::string to_string() const;

    auto operator<=>(const MuFunction&) const = default;

private:
    std::vector<MuEntry> entries_;
};

/// All of Phi_n, in canonical order (lexicographic by sorted support).
std::vector<MuFunction> enumerate_phi(unsigned n);

/// |N(A_mu) ∩ Stab(V, mu)| as a polynomial in q.
RationalFunction normalizer_order(const MuFunction& mu);

/// b_n = sum over Phi_n of 1 / normalizer_order(mu).
RationalFunction b_coefficient(unsigned n);

/// |GL_n(q)| = prod_{i<n} (q^n - q^i).
IntPolynomial gl_order(unsigned n);

/// b_n * |GL_n(q)|; the exact |A_n(q)| for q > 2 and an upper bound at q = 2.
/// Throws ConsistencyError if the product is not an integer polynomial.
IntPolynomial a_polynomial(unsigned n);

struct CensusRow {
    unsigned n = 0;
    RationalFunction b_n;
    IntPolynomial a_poly;
    std::size_t class_count = 0;
};

CensusRow census_row(unsigned n);

bool is_prime_power(std::uint64_t q);

/// Exact clique number of the non-commuting graph of GL_n(q) in the two
/// regimes with a closed formula: q > n, and q = n > 2. UnsupportedRegime
/// otherwise.
BigInt omega_closed(unsigned n, std::uint64_t q);

/// Leading floor(n/2) coefficients of prod_{k>=1} (1 - x^k)^{-k(k+1)/2}.
std::vector<BigInt> stabilized_prefix(unsigned n);

} // namespace glcover
