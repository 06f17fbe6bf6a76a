#include "glcover/census.hpp"
#include "glcover/error.hpp"
#include "glcover/qseries.hpp"

#include <doctest.h>

using namespace glcover;

namespace {

const IntPolynomial q = IntPolynomial::symbol();

PowerSeries rf_series(std::vector<RationalFunction> c) { return PowerSeries(std::move(c)); }

// prod_{e=1..U} (1 - u^e t)^{-1} as a dense [t][u] table of integers,
// by multiplying in one geometric series at a time.
std::vector<std::vector<long>> brute_f1_product(unsigned T, unsigned U) {
    std::vector<std::vector<long>> c(T + 1, std::vector<long>(U + 1, 0));
    c[0][0] = 1;
    for (unsigned e = 1; e <= U; ++e) {
        // multiply by 1/(1 - u^e t): c[k][j] += c[k-1][j-e], in increasing k
        for (unsigned k = 1; k <= T; ++k) {
            for (unsigned j = e; j <= U; ++j) c[k][j] += c[k - 1][j - e];
        }
    }
    return c;
}

} // namespace

TEST_CASE("u-series expansion") {
    const USeries s = rf_to_useries(RationalFunction(IntPolynomial{-1, 1}).inverse(), 6);
    for (unsigned k = 0; k <= 6; ++k) CHECK(s[k] == (k == 0 ? 0 : 1));
    CHECK_THROWS_AS(rf_to_useries(RationalFunction(IntPolynomial{1, 1, 1}), 6), PoleError);
    const RationalFunction g = (RationalFunction(1) - RationalFunction(q).inverse()) * RationalFunction(q);
    CHECK(rf_to_useries(g.inverse(), 6) == s);
    CHECK_THROWS_AS(USeries(3) + USeries(4), RingMismatch);
    CHECK_THROWS_AS(USeries(3).inverse(), DivisionByZero);
}

TEST_CASE("series product") {
    const PowerSeries a = rf_series({1, 1, 0});
    CHECK(ps_mul(a, rf_series({1, -1, 0})) == rf_series({1, 0, -1}));
    CHECK(ps_mul(a, PowerSeries::one(2, CoeffRing::ratfunc)) == a);
    CHECK_THROWS_AS(ps_mul(a, rf_series({1, 1})), RingMismatch);
    CHECK_THROWS_AS(ps_mul(a, PowerSeries::one(2, CoeffRing::useries, 5)), RingMismatch);
    CHECK_THROWS_AS((void)a.u_coeffs(), RingMismatch);
    const PowerSeries b = rf_series({2, RationalFunction(q), RationalFunction(IntPolynomial{1, 1}).inverse(), 0});
    CHECK(ps_mul(ps_inverse(b), b) == PowerSeries::one(3, CoeffRing::ratfunc));
}

TEST_CASE("exp and log") {
    CHECK(ps_exp(PowerSeries::zero(4, CoeffRing::ratfunc)) == PowerSeries::one(4, CoeffRing::ratfunc));
    CHECK(ps_exp(rf_series({0, 1, 0, 0})) ==
          rf_series({1, 1, RationalFunction(BigRational(1, 2)), RationalFunction(BigRational(1, 6))}));
    const PowerSeries geo = ps_exp(ps_scale(ps_log(rf_series({1, -1, 0, 0, 0})), -1));
    CHECK(geo == rf_series({1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(ps_exp(rf_series({1, 1})), DomainError);
    CHECK_THROWS_AS(ps_log(rf_series({2, 1})), DomainError);
    // exp(a + b) = exp(a) exp(b)
    const PowerSeries x = rf_series({0, RationalFunction(q), RationalFunction(IntPolynomial{-1, 1}).inverse(), 3, 0});
    const PowerSeries y = rf_series({0, 1, RationalFunction(q).pow(2), 0, RationalFunction(q).inverse()});
    CHECK(ps_exp(ps_add(x, y)) == ps_mul(ps_exp(x), ps_exp(y)));
    CHECK(ps_log(ps_exp(x)) == x);
}

TEST_CASE("F1 low coefficients and forms") {
    const PowerSeries s = build_F1(6, SeriesForm::sum);
    CHECK(s.rf_coeffs()[0] == RationalFunction(1));
    CHECK(s.rf_coeffs()[1] == RationalFunction(IntPolynomial{-1, 1}).inverse());
    CHECK(s == build_F1(6, SeriesForm::exp));
    CHECK_THROWS_AS(build_F1(4, SeriesForm::product, CoeffRing::ratfunc, 8), DomainError);
}

TEST_CASE("F1 product form against a direct expansion") {
    const unsigned T = 5, U = 16;
    const auto brute = brute_f1_product(T, U);
    const PowerSeries p = build_F1(T, SeriesForm::product, CoeffRing::useries, U);
    for (unsigned k = 0; k <= T; ++k) {
        for (unsigned j = 0; j <= U; ++j) CHECK(p.u_coeffs()[k][j] == brute[k][j]);
    }
}

TEST_CASE("F2 coefficients and forms") {
    const PowerSeries f = build_F2(6, SeriesForm::exp);
    CHECK(f.rf_coeffs()[1].is_zero());
    // 1/((1 - q^-1)^2 q^3) = 1/(q (q-1)^2)
    CHECK(f.rf_coeffs()[2] == RationalFunction(IntPolynomial{0, 1} * IntPolynomial{1, -2, 1}).inverse());
    CHECK_THROWS_AS(build_F2(4, SeriesForm::sum), DomainError);
    CHECK(build_F2(10, SeriesForm::exp, CoeffRing::useries, 40) == build_F2(10, SeriesForm::product, CoeffRing::useries, 40));
}

TEST_CASE("Fbar reproduces the small rows of the census") {
    const PowerSeries f = build_Fbar(3);
    CHECK(f.rf_coeffs()[0] == RationalFunction(1));
    CHECK(f.rf_coeffs()[2] * RationalFunction(gl_order(2)) == RationalFunction(IntPolynomial{1, 1, 1}));
    CHECK(f.rf_coeffs()[3] * RationalFunction(gl_order(3)) == RationalFunction(IntPolynomial{-1, -1, 1, 3, 3, 1, 1}));
}
