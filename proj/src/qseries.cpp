#include "glcover/qseries.hpp"

#include "glcover/error.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace glcover {

// ---------------------------------------------------------------------------
// USeries

USeries::USeries(unsigned order, const BigRational& constant) : USeries(order) { c_[0] = constant; }

USeries::USeries(unsigned order, std::vector<BigRational> coeffs) : order_(order), c_(std::move(coeffs)) {
    c_.resize(order + 1);
}

USeries USeries::monomial(unsigned order, const BigRational& c, unsigned k) {
    USeries s(order);
    if (k <= order) s.c_[k] = c;
    return s;
}

bool USeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigRational& x) { return x == 0; });
}

void USeries::check_same(const USeries& o) const {
    if (order_ != o.order_) {
        throw RingMismatch("u-series truncation orders differ: " + std::to_string(order_) + " vs " +
                           std::to_string(o.order_));
    }
}

USeries USeries::inverse() const {
    if (c_[0] == 0) throw DivisionByZero();
    USeries r(order_);
    r.c_[0] = 1 / c_[0];
    for (unsigned k = 1; k <= order_; ++k) {
        BigRational acc = 0;
        for (unsigned j = 1; j <= k; ++j) {
            if (c_[j] != 0) acc += c_[j] * r.c_[k - j];
        }
        r.c_[k] = -acc * r.c_[0];
    }
    return r;
}

USeries USeries::operator-() const {
    USeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

USeries& USeries::operator+=(const USeries& o) {
    check_same(o);
    for (unsigned i = 0; i <= order_; ++i) c_[i] += o.c_[i];
    return *this;
}

USeries& USeries::operator-=(const USeries& o) {
    check_same(o);
    for (unsigned i = 0; i <= order_; ++i) c_[i] -= o.c_[i];
    return *this;
}

USeries operator*(const USeries& a, const USeries& b) {
    a.check_same(b);
    USeries r(a.order_);
    for (unsigned i = 0; i <= a.order_; ++i) {
        if (a.c_[i] == 0) continue;
        for (unsigned j = 0; i + j <= a.order_; ++j) {
            if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

USeries& USeries::operator*=(const USeries& o) { return *this = *this * o; }

USeries& USeries::operator*=(const BigRational& c) {
    for (auto& x : c_) x *= c;
    return *this;
}

USeries rf_to_useries(const RationalFunction& f, unsigned order) {
    if (f.is_zero()) return USeries(order);
    const int dn = f.num().degree();
    const int dd = f.den().degree();
    if (dn > dd) {
        throw PoleError("f has a pole at u = 0 (numerator degree " + std::to_string(dn) +
                        " exceeds denominator degree " + std::to_string(dd) + ")");
    }
    // f(1/u) = u^(dd-dn) * rev(num)(u) / rev(den)(u).
    const auto shift = static_cast<unsigned>(dd - dn);
    if (shift > order) return USeries(order);
    const unsigned inner = order - shift;
    std::vector<BigRational> nrev(inner + 1), drev(inner + 1);
    for (int i = 0; i <= dn && static_cast<unsigned>(i) <= inner; ++i) {
        nrev[static_cast<unsigned>(i)] = f.num().coeffs()[static_cast<unsigned>(dn - i)];
    }
    for (int i = 0; i <= dd && static_cast<unsigned>(i) <= inner; ++i) {
        drev[static_cast<unsigned>(i)] = f.den().coeffs()[static_cast<unsigned>(dd - i)];
    }
    USeries quotient = USeries(inner, std::move(nrev)) * USeries(inner, std::move(drev)).inverse();
    std::vector<BigRational> out(order + 1);
    for (unsigned i = 0; i <= inner; ++i) out[i + shift] = quotient[i];
    return USeries(order, std::move(out));
}

// ---------------------------------------------------------------------------
// PowerSeries

PowerSeries PowerSeries::zero(unsigned order, CoeffRing ring, unsigned u_order) {
    PowerSeries s;
    s.order_ = order;
    s.ring_ = ring;
    if (ring == CoeffRing::ratfunc) {
        s.coeffs_ = std::vector<RationalFunction>(order + 1);
    } else {
        s.u_order_ = u_order;
        s.coeffs_ = std::vector<USeries>(order + 1, USeries(u_order));
    }
    return s;
}

PowerSeries PowerSeries::one(unsigned order, CoeffRing ring, unsigned u_order) {
    PowerSeries s = zero(order, ring, u_order);
    if (ring == CoeffRing::ratfunc) {
        s.rf_coeffs()[0] = RationalFunction(1);
    } else {
        s.u_coeffs()[0] = USeries(u_order, BigRational(1));
    }
    return s;
}

PowerSeries::PowerSeries(std::vector<RationalFunction> coeffs) {
    if (coeffs.empty()) throw DomainError("power series needs at least one coefficient");
    order_ = static_cast<unsigned>(coeffs.size() - 1);
    ring_ = CoeffRing::ratfunc;
    coeffs_ = std::move(coeffs);
}

PowerSeries::PowerSeries(std::vector<USeries> coeffs, unsigned u_order) {
    if (coeffs.empty()) throw DomainError("power series needs at least one coefficient");
    for (const auto& c : coeffs) {
        if (c.order() != u_order) throw RingMismatch("coefficient u-order differs from series u-order");
    }
    order_ = static_cast<unsigned>(coeffs.size() - 1);
    ring_ = CoeffRing::useries;
    u_order_ = u_order;
    coeffs_ = std::move(coeffs);
}

const std::vector<RationalFunction>& PowerSeries::rf_coeffs() const {
    if (ring_ != CoeffRing::ratfunc) throw RingMismatch("series is over the u-series ring");
    return std::get<0>(coeffs_);
}
const std::vector<USeries>& PowerSeries::u_coeffs() const {
    if (ring_ != CoeffRing::useries) throw RingMismatch("series is over the rational-function ring");
    return std::get<1>(coeffs_);
}
std::vector<RationalFunction>& PowerSeries::rf_coeffs() {
    if (ring_ != CoeffRing::ratfunc) throw RingMismatch("series is over the u-series ring");
    return std::get<0>(coeffs_);
}
std::vector<USeries>& PowerSeries::u_coeffs() {
    if (ring_ != CoeffRing::useries) throw RingMismatch("series is over the rational-function ring");
    return std::get<1>(coeffs_);
}

namespace {

void check_compatible(const PowerSeries& a, const PowerSeries& b) {
    if (a.ring() != b.ring()) throw RingMismatch("power series over different coefficient rings");
    if (a.order() != b.order()) {
        throw RingMismatch("power series truncation orders differ: " + std::to_string(a.order()) + " vs " +
                           std::to_string(b.order()));
    }
    if (a.u_order() != b.u_order()) throw RingMismatch("power series u-orders differ");
}

bool is_zero_coeff(const RationalFunction& x) { return x.is_zero(); }
bool is_zero_coeff(const USeries& x) { return x.is_zero(); }

template <typename C>
std::vector<C> mul_coeffs(const std::vector<C>& a, const std::vector<C>& b) {
    std::vector<C> r(a.size(), a[0] - a[0]);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (is_zero_coeff(a[i])) continue;
        for (std::size_t j = 0; i + j < a.size(); ++j) {
            if (!is_zero_coeff(b[j])) r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

template <typename C>
std::vector<C> exp_coeffs(const std::vector<C>& a, const C& one) {
    // b' = a' b  =>  k b_k = sum_{j=1..k} j a_j b_{k-j}
    std::vector<C> b(a.size(), a[0] - a[0]);
    b[0] = one;
    for (std::size_t k = 1; k < a.size(); ++k) {
        C acc = a[0] - a[0];
        for (std::size_t j = 1; j <= k; ++j) {
            if (is_zero_coeff(a[j]) || is_zero_coeff(b[k - j])) continue;
            C term = a[j] * b[k - j];
            term *= BigRational(static_cast<long>(j));
            acc += term;
        }
        acc *= BigRational(1, static_cast<long>(k));
        b[k] = std::move(acc);
    }
    return b;
}

template <typename C>
std::vector<C> inverse_coeffs(const std::vector<C>& a, const C& inv0) {
    std::vector<C> r(a.size(), a[0] - a[0]);
    r[0] = inv0;
    for (std::size_t k = 1; k < a.size(); ++k) {
        C acc = a[0] - a[0];
        for (std::size_t j = 1; j <= k; ++j) {
            if (!is_zero_coeff(a[j])) acc += a[j] * r[k - j];
        }
        r[k] = -(acc * inv0);
    }
    return r;
}

template <typename C>
std::vector<C> log_coeffs(const std::vector<C>& a, const std::vector<C>& inv) {
    // log a = integral of a'/a
    const std::size_t n = a.size();
    std::vector<C> deriv(n, a[0] - a[0]);
    for (std::size_t k = 1; k < n; ++k) {
        deriv[k - 1] = a[k];
        deriv[k - 1] *= BigRational(static_cast<long>(k));
    }
    std::vector<C> q = mul_coeffs(deriv, inv);
    std::vector<C> r(n, a[0] - a[0]);
    for (std::size_t k = 1; k < n; ++k) {
        r[k] = q[k - 1];
        r[k] *= BigRational(1, static_cast<long>(k));
    }
    return r;
}

} // namespace

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) {
    check_compatible(a, b);
    PowerSeries r = a;
    if (a.ring() == CoeffRing::ratfunc) {
        for (unsigned i = 0; i <= a.order(); ++i) r.rf_coeffs()[i] += b.rf_coeffs()[i];
    } else {
        for (unsigned i = 0; i <= a.order(); ++i) r.u_coeffs()[i] += b.u_coeffs()[i];
    }
    return r;
}

PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b) { return ps_add(a, ps_scale(b, -1)); }

PowerSeries ps_scale(const PowerSeries& a, const BigRational& c) {
    PowerSeries r = a;
    if (a.ring() == CoeffRing::ratfunc) {
        for (auto& x : r.rf_coeffs()) x *= c;
    } else {
        for (auto& x : r.u_coeffs()) x *= c;
    }
    return r;
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
    check_compatible(a, b);
    if (a.ring() == CoeffRing::ratfunc) return PowerSeries(mul_coeffs(a.rf_coeffs(), b.rf_coeffs()));
    return PowerSeries(mul_coeffs(a.u_coeffs(), b.u_coeffs()), a.u_order());
}

PowerSeries ps_exp(const PowerSeries& a) {
    if (a.ring() == CoeffRing::ratfunc) {
        if (!a.rf_coeffs()[0].is_zero()) throw DomainError("exp needs a series with zero constant term");
        return PowerSeries(exp_coeffs(a.rf_coeffs(), RationalFunction(1)));
    }
    if (!a.u_coeffs()[0].is_zero()) throw DomainError("exp needs a series with zero constant term");
    return PowerSeries(exp_coeffs(a.u_coeffs(), USeries(a.u_order(), BigRational(1))), a.u_order());
}

PowerSeries ps_inverse(const PowerSeries& a) {
    if (a.ring() == CoeffRing::ratfunc) {
        return PowerSeries(inverse_coeffs(a.rf_coeffs(), a.rf_coeffs()[0].inverse()));
    }
    return PowerSeries(inverse_coeffs(a.u_coeffs(), a.u_coeffs()[0].inverse()), a.u_order());
}

PowerSeries ps_log(const PowerSeries& a) {
    if (a.ring() == CoeffRing::ratfunc) {
        if (!(a.rf_coeffs()[0] == RationalFunction(1))) throw DomainError("log needs constant term 1");
        return PowerSeries(log_coeffs(a.rf_coeffs(), ps_inverse(a).rf_coeffs()));
    }
    if (!(a.u_coeffs()[0] == USeries(a.u_order(), BigRational(1)))) throw DomainError("log needs constant term 1");
    return PowerSeries(log_coeffs(a.u_coeffs(), ps_inverse(a).u_coeffs()), a.u_order());
}

PowerSeries ps_to_useries(const PowerSeries& a, unsigned u_order) {
    std::vector<USeries> out;
    out.reserve(a.order() + 1);
    for (const auto& c : a.rf_coeffs()) out.push_back(rf_to_useries(c, u_order));
    return PowerSeries(std::move(out), u_order);
}

// ---------------------------------------------------------------------------
// F1, F2, Fbar

namespace {

RationalFunction q_pow(unsigned k) { return RationalFunction(IntPolynomial::monomial(1, k)); }

RationalFunction q_pow_minus_one(unsigned k) {
    return RationalFunction(IntPolynomial::monomial(1, k) - IntPolynomial(BigInt(1)));
}

/// Multiplies s in place by (1 - c t^m)^{-1}: b_k = a_k + c b_{k-m}.
void mul_geometric(std::vector<USeries>& s, const USeries& c, unsigned m) {
    for (std::size_t k = m; k < s.size(); ++k) s[k] += c * s[k - m];
}

PowerSeries F1_product(unsigned order, unsigned u_order) {
    PowerSeries s = PowerSeries::one(order, CoeffRing::useries, u_order);
    auto& c = s.u_coeffs();
    // Factor (1 - u^(i+1) t)^{-1}; factors with i + 1 > u_order are 1 mod u^(u_order+1).
    for (unsigned e = 1; e <= u_order; ++e) mul_geometric(c, USeries::monomial(u_order, 1, e), 1);
    return s;
}

PowerSeries F2_product(unsigned order, unsigned u_order) {
    PowerSeries s = PowerSeries::one(order, CoeffRing::useries, u_order);
    auto& c = s.u_coeffs();
    for (unsigned m = 2; m <= order; ++m) {
        // (1 - u^(i+j+2m-1) t^m)^{-1} over i, j >= 0: exponent e occurs (e - 2m + 2) times.
        for (unsigned e = 2 * m - 1; e <= u_order; ++e) {
            const unsigned mult = e - (2 * m - 1) + 1;
            const USeries factor = USeries::monomial(u_order, 1, e);
            for (unsigned r = 0; r < mult; ++r) mul_geometric(c, factor, m);
        }
    }
    return s;
}

PowerSeries to_ring(PowerSeries s, CoeffRing ring, unsigned u_order) {
    if (ring == CoeffRing::ratfunc) return s;
    return ps_to_useries(s, u_order);
}

} // namespace

PowerSeries build_F1(unsigned order, SeriesForm form, CoeffRing ring, unsigned u_order) {
    switch (form) {
    case SeriesForm::exp: {
        // log F1 = sum_d t^d / (d (1 - q^-d) q^d) = sum_d t^d / (d (q^d - 1))
        std::vector<RationalFunction> a(order + 1);
        for (unsigned d = 1; d <= order; ++d) {
            a[d] = q_pow_minus_one(d).inverse();
            a[d] *= BigRational(1, d);
        }
        return to_ring(ps_exp(PowerSeries(std::move(a))), ring, u_order);
    }
    case SeriesForm::sum: {
        std::vector<RationalFunction> a(order + 1);
        for (unsigned d = 0; d <= order; ++d) a[d] = (q_pow(d) * phi_d(d)).inverse();
        return to_ring(PowerSeries(std::move(a)), ring, u_order);
    }
    case SeriesForm::product:
        if (ring == CoeffRing::ratfunc) {
            throw DomainError("the product form of F1 has infinite q^-1 series as coefficients; use the u-series ring");
        }
        return F1_product(order, u_order);
    }
    throw DomainError("unknown series form");
}

PowerSeries build_F1(unsigned order, SeriesForm form) {
    return build_F1(order, form, form == SeriesForm::product ? CoeffRing::useries : CoeffRing::ratfunc);
}

PowerSeries build_F2(unsigned order, SeriesForm form, CoeffRing ring, unsigned u_order) {
    switch (form) {
    case SeriesForm::exp: {
        // log F2 = sum_{m>=2, d>=1} t^(dm) / (d (1 - q^-d)^2 q^(2dm-d))
        //        = sum t^(dm) / (d (q^d - 1)^2 q^(2dm-3d))
        std::vector<RationalFunction> a(order + 1);
        for (unsigned m = 2; m <= order; ++m) {
            for (unsigned d = 1; d * m <= order; ++d) {
                RationalFunction den = q_pow_minus_one(d).pow(2) * q_pow(2 * d * m - 3 * d);
                RationalFunction term = den.inverse();
                term *= BigRational(1, d);
                a[d * m] += term;
            }
        }
        return to_ring(ps_exp(PowerSeries(std::move(a))), ring, u_order);
    }
    case SeriesForm::sum:
        throw DomainError("F2 has no sum form; use exp or product");
    case SeriesForm::product:
        if (ring == CoeffRing::ratfunc) {
            throw DomainError("the product form of F2 has infinite q^-1 series as coefficients; use the u-series ring");
        }
        return F2_product(order, u_order);
    }
    throw DomainError("unknown series form");
}

PowerSeries build_F2(unsigned order, SeriesForm form) {
    return build_F2(order, form, form == SeriesForm::product ? CoeffRing::useries : CoeffRing::ratfunc);
}

PowerSeries build_Fbar(unsigned order) {
    return ps_mul(build_F1(order, SeriesForm::exp), build_F2(order, SeriesForm::exp));
}

} // namespace glcover
