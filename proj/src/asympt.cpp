#include "glcover/asympt.hpp"

#include "glcover/error.hpp"
#include "glcover/qseries.hpp"

namespace glcover {

namespace {

BigRational rpow(const BigRational& x, unsigned e) {
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), x.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), x.get_den().get_mpz_t(), e);
    return BigRational(n, d); // already canonical
}

BigRational geometric_from(const BigRational& x) { return x / (1 - x); }

} // namespace

BigRational l_tail_log_bound(const BigRational& q, unsigned terms) {
    const BigRational x = 1 / q;
    // Full sums: sum_{k>=1} k(k+1)/2 x^k = x/(1-x)^3 and sum_{k>=1} x^k = x/(1-x).
    const BigRational one_minus = 1 - x;
    BigRational tail = x / (one_minus * one_minus * one_minus) + geometric_from(x);
    BigRational xk = 1;
    for (unsigned k = 1; k <= terms; ++k) {
        xk *= x;
        tail -= BigRational(k * (k + 1) / 2 + 1) * xk;
    }
    // -log(1 - y) <= y / (1 - y) <= y / (1 - x^(K+1)) for y = x^k, k > K.
    return tail / (1 - xk * x);
}

RatInterval l_of_q(const BigRational& q, unsigned terms) {
    if (q <= 1) throw DomainError("l(q) diverges for q <= 1");
    if (terms == 0) throw DomainError("l_of_q needs at least one term");
    const BigRational x = 1 / q;
    // (1 - x^k)^{-e} = (q^k / (q^k - 1))^e computed on numerator and denominator.
    BigInt num = 1, den = 1;
    const BigInt& qn = q.get_num();
    const BigInt& qd = q.get_den();
    for (unsigned k = 1; k <= terms; ++k) {
        const unsigned long e = k * (k + 1) / 2 + 1;
        BigInt a, b;
        mpz_pow_ui(a.get_mpz_t(), qn.get_mpz_t(), k);
        mpz_pow_ui(b.get_mpz_t(), qd.get_mpz_t(), k);
        // 1 - x^k = (a - b) / a
        BigInt f_num, f_den;
        mpz_pow_ui(f_num.get_mpz_t(), a.get_mpz_t(), e);
        BigInt diff = a - b;
        mpz_pow_ui(f_den.get_mpz_t(), diff.get_mpz_t(), e);
        num *= f_num;
        den *= f_den;
    }
    RatInterval out;
    out.lo = make_rational(num, den);
    const BigRational tail = l_tail_log_bound(q, terms);
    if (tail >= 1) {
        throw DomainError("tail bound " + to_decimal(tail, 6) + " is not below 1; increase the number of terms");
    }
    // exp(t) <= 1 / (1 - t) for 0 <= t < 1.
    out.hi = out.lo / (1 - tail);
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::not_applicable: return "not_applicable";
    }
    return "unknown";
}

bool EstimateReport::all_hold() const {
    for (const auto& c : checks) {
        if (c.verdict != Verdict::holds && c.verdict != Verdict::not_applicable) return false;
    }
    return true;
}

RatInterval exp_enclosure(const BigRational& x, unsigned degree) {
    if (x < 0) throw DomainError("exp_enclosure needs x >= 0");
    BigRational term = 1, sum = 1;
    for (unsigned r = 1; r <= degree; ++r) {
        term *= x;
        term /= r;
        sum += term;
    }
    // Remainder: sum_{r>R} x^r/r! <= x^(R+1)/(R+1)! / (1 - x/(R+2)).
    const BigRational next = term * x / (degree + 1);
    const BigRational ratio = x / (degree + 2);
    if (ratio >= 1) throw DomainError("exp_enclosure degree too small for x");
    return {sum, sum + next / (1 - ratio)};
}

EstimateReport check_estimates(const BigRational& q, unsigned terms) {
    if (q < 2) throw DomainError("check_estimates needs q >= 2");
    EstimateReport rep;
    rep.q = q;
    rep.terms = terms;
    const BigRational x = 1 / q;
    const BigRational x2 = x * x, x3 = x2 * x;

    bool have_interval = true;
    try {
        rep.l = l_of_q(q, terms);
    } catch (const DomainError&) {
        have_interval = false;
    }
    auto decide_lower = [&](const BigRational& bound) {
        // l(q) > bound
        if (!have_interval) return Verdict::inconclusive;
        if (rep.l.lo > bound) return Verdict::holds;
        if (rep.l.hi <= bound) return Verdict::fails;
        return Verdict::inconclusive;
    };
    auto decide_upper = [&](const BigRational& bound_lo, const BigRational& bound_hi) {
        // l(q) < bound, where bound is only known to lie in [bound_lo, bound_hi]
        if (!have_interval) return Verdict::inconclusive;
        if (rep.l.hi < bound_lo) return Verdict::holds;
        if (rep.l.lo >= bound_hi) return Verdict::fails;
        return Verdict::inconclusive;
    };

    rep.checks.push_back({"a", "l(q) > 1 + 2/q + 7/q^2 + 19/q^3", decide_lower(1 + 2 * x + 7 * x2 + 19 * x3)});

    {
        const BigRational y1 = x / rpow(1 - x, 3);
        const BigRational y2 = x2 * (1 + x) / (2 * rpow(1 - x2, 4));
        const BigRational pre = 1 / (1 - x - x2);
        const RatInterval e1 = exp_enclosure(y1), e2 = exp_enclosure(y2);
        rep.checks.push_back({"b",
                              "l(q) < (1 - 1/q - 1/q^2)^-1 exp(q^-1/(1-q^-1)^3) exp(q^-2 (1+q^-1) / 2(1-q^-2)^4)",
                              decide_upper(pre * e1.lo * e2.lo, pre * e1.hi * e2.hi)});
    }

    if (q > 2) {
        const BigRational c = 1 + 2 * x + 7 * x2 + 114 * x3;
        rep.checks.push_back({"c", "l(q) < 1 + 2/q + 7/q^2 + 114/q^3", decide_upper(c, c)});
    } else {
        rep.checks.push_back({"c", "l(q) < 1 + 2/q + 7/q^2 + 114/q^3 (q > 2 only)", Verdict::not_applicable});
    }

    if (q == 2) {
        const BigRational lower(27898, 100), upper(3950005, 10000);
        Verdict v = Verdict::inconclusive;
        if (have_interval) {
            if (rep.l.lo > lower && rep.l.hi < upper) {
                v = Verdict::holds;
            } else if (rep.l.hi <= lower || rep.l.lo >= upper) {
                v = Verdict::fails;
            }
        }
        rep.checks.push_back({"d", "395.0005 > l(2) > 278.98", v});
    } else {
        rep.checks.push_back({"d", "395.0005 > l(2) > 278.98 (q = 2 only)", Verdict::not_applicable});
    }
    return rep;
}

std::vector<ConvergenceRow> convergence_report(std::uint64_t q, unsigned max_n, unsigned terms) {
    if (max_n == 0) throw DomainError("convergence_report needs max_n >= 1");
    if (q < 2) throw DomainError("convergence_report needs q >= 2");
    const BigRational qr(static_cast<unsigned long>(q));
    const RatInterval l = l_of_q(qr, terms);
    const PowerSeries fbar = build_Fbar(max_n);
    std::vector<ConvergenceRow> rows;
    BigRational qn = 1;
    for (unsigned n = 1; n <= max_n; ++n) {
        qn *= qr;
        ConvergenceRow row;
        row.n = n;
        row.scaled_b = qn * rf_eval(fbar.rf_coeffs()[n], qr);
        row.gap = {l.lo - row.scaled_b, l.hi - row.scaled_b};
        row.below_hi = row.scaled_b < l.hi;
        row.positive = row.gap.lo > 0;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace glcover
