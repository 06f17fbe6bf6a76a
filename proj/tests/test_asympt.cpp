#include "glcover/asympt.hpp"
#include "glcover/census.hpp"
#include "glcover/error.hpp"

#include <doctest.h>

#include <cmath>

using namespace glcover;

namespace {

// Floating-point l(q) with many factors; used only as a loose cross-check.
long double float_l(long double q, int factors) {
    long double log_l = 0;
    for (int k = 1; k <= factors; ++k) {
        log_l -= (k * (k + 1) / 2.0L + 1) * std::log1p(-std::pow(q, -static_cast<long double>(k)));
    }
    return std::exp(log_l);
}

Verdict verdict_of(const EstimateReport& r, const std::string& id) {
    for (const auto& c : r.checks) {
        if (c.id == id) return c.verdict;
    }
    FAIL("missing check " << id);
    return Verdict::fails;
}

} // namespace

TEST_CASE("l(2) enclosure") {
    const RatInterval l = l_of_q(BigRational(2), 30);
    CHECK(l.lo <= l.hi);
    CHECK(l.lo > BigRational(27898, 100));
    CHECK(l.hi < BigRational(3950005, 10000));
}

TEST_CASE("enclosures contain a floating-point estimate") {
    for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L}) {
        const RatInterval l = l_of_q(BigRational(q), 30);
        const long double f = float_l(static_cast<long double>(q), 400);
        CHECK(l.lo.get_d() <= static_cast<double>(f) * (1 + 1e-12));
        CHECK(static_cast<double>(f) <= l.hi.get_d() * (1 + 1e-12));
    }
}

TEST_CASE("enclosures shrink as terms grow") {
    for (long q : {3L, 5L}) {
        RatInterval prev = l_of_q(BigRational(q), 4);
        for (unsigned K = 5; K <= 30; ++K) {
            const RatInterval cur = l_of_q(BigRational(q), K);
            CHECK(prev.contains(cur));
            CHECK(cur.width() < prev.width());
            prev = cur;
        }
    }
}

TEST_CASE("lower estimate at K = 30 for several q") {
    for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L}) {
        const BigRational x(1, q);
        CHECK(1 + 2 * x + 7 * x * x + 19 * x * x * x < l_of_q(BigRational(q), 30).lo);
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(l_of_q(BigRational(1), 30), DomainError);
    CHECK_THROWS_AS(l_of_q(BigRational(2), 0), DomainError);
    CHECK_THROWS_AS(check_estimates(BigRational(3, 2)), DomainError);
    CHECK_THROWS_AS(l_of_q(BigRational(3), 1), DomainError); // tail bound above 1
}

TEST_CASE("estimates") {
    const EstimateReport two = check_estimates(BigRational(2));
    CHECK(verdict_of(two, "a") == Verdict::holds);
    CHECK(verdict_of(two, "b") == Verdict::holds);
    CHECK(verdict_of(two, "c") == Verdict::not_applicable);
    CHECK(verdict_of(two, "d") == Verdict::holds);
    CHECK(two.all_hold());

    const EstimateReport five = check_estimates(BigRational(5));
    CHECK(verdict_of(five, "a") == Verdict::holds);
    CHECK(verdict_of(five, "b") == Verdict::holds);
    CHECK(verdict_of(five, "c") == Verdict::holds);
    CHECK(verdict_of(five, "d") == Verdict::not_applicable);

    const EstimateReport coarse = check_estimates(BigRational(3), 2);
    CHECK(verdict_of(coarse, "c") == Verdict::inconclusive);
    CHECK_FALSE(coarse.all_hold());
    CHECK(check_estimates(BigRational(3), 30).all_hold());
    CHECK(verdict_of(check_estimates(BigRational(3), 1), "a") == Verdict::inconclusive);
}

TEST_CASE("exp enclosure") {
    const RatInterval e = exp_enclosure(BigRational(1));
    CHECK(e.lo.get_d() <= std::exp(1.0));
    CHECK(std::exp(1.0) <= e.hi.get_d() * (1 + 1e-15));
    CHECK(e.width() < BigRational(1, 1000000));
    const RatInterval z = exp_enclosure(BigRational(0));
    CHECK(z.lo == 1);
    CHECK(z.hi == 1);
    CHECK_THROWS_AS(exp_enclosure(BigRational(-1)), DomainError);
}

TEST_CASE("convergence of q^n b_n") {
    const auto three = convergence_report(3, 10);
    CHECK(three[0].scaled_b == BigRational(3, 2));
    const RatInterval l3 = l_of_q(BigRational(3), 30);
    BigRational q3n = 1;
    for (std::size_t i = 0; i < three.size(); ++i) {
        q3n *= 3;
        CHECK(three[i].scaled_b == q3n * rf_eval(b_coefficient(three[i].n), BigRational(3)));
        CHECK(three[i].positive);
        CHECK(three[i].gap.hi == l3.hi - three[i].scaled_b);
        if (i > 0) CHECK(three[i].gap.hi < three[i - 1].gap.hi);
    }
    for (const auto& row : convergence_report(2, 12)) {
        CHECK(row.below_hi);
        CHECK(row.scaled_b < BigRational(3950005, 10000));
    }
    CHECK_THROWS_AS(convergence_report(3, 0), DomainError);
}
