#pragma once

// Certified rational enclosures of l(q) = prod_{k>=1} (1 - q^-k)^{-k(k+1)/2 - 1}
// and exact checks of the numeric estimates on it.

#include "glcover/exactalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace glcover {

/// Closed interval [lo, hi] with lo <= hi.
struct RatInterval {
    BigRational lo;
    BigRational hi;

    BigRational width() const { return hi - lo; }
    bool contains(const RatInterval& inner) const { return lo <= inner.lo && inner.hi <= hi; }
};

/// lo is the partial product over k <= terms; hi multiplies it by a rational
/// bound on the tail. Throws DomainError for q <= 1 (the product diverges) and
/// when the tail bound is not below 1 (raise `terms`).
RatInterval l_of_q(const BigRational& q, unsigned terms = 30);

/// Rational bound on sum_{k>K} (k(k+1)/2 + 1) * (-log(1 - q^-k)).
BigRational l_tail_log_bound(const BigRational& q, unsigned terms);

enum class Verdict { holds, fails, inconclusive, not_applicable };

std::string to_string(Verdict v);

struct EstimateCheck {
    std::string id;          ///< "a", "b", "c" or "d"
    std::string statement;
    Verdict verdict = Verdict::inconclusive;
};

struct EstimateReport {
    BigRational q;
    unsigned terms = 0;
    RatInterval l;
    std::vector<EstimateCheck> checks;

    /// True when every applicable check holds.
    bool all_hold() const;
};

/// Decides the four estimates on l(q) by exact comparison with the interval.
EstimateReport check_estimates(const BigRational& q, unsigned terms = 30);

/// exp(x) enclosure for rational x >= 0 via a Taylor polynomial of degree
/// `degree` plus a geometric remainder bound.
RatInterval exp_enclosure(const BigRational& x, unsigned degree = 60);

struct ConvergenceRow {
    unsigned n = 0;
    BigRational scaled_b;  ///< q^n b_n
    RatInterval gap;       ///< l(q) - q^n b_n
    bool below_hi = false; ///< q^n b_n < hi(l(q))
    bool positive = false; ///< gap.lo > 0
};

/// q^n b_n against the l(q) interval for n = 1..max_n.
std::vector<ConvergenceRow> convergence_report(std::uint64_t q, unsigned max_n, unsigned terms = 30);

} // namespace glcover
