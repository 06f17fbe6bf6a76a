#pragma once

// Truncated power series in t over two exact coefficient rings: rational
// functions of q, and truncated series in u = 1/q with rational coefficients.

#include "glcover/exactalg.hpp"

#include <variant>
#include <vector>

namespace glcover {

/// Truncated power series in u = q^{-1}; coefficients of u^0..u^order.
class USeries {
public:
    USeries() : USeries(0) {}
    explicit USeries(unsigned order) : order_(order), c_(order + 1) {}
    USeries(unsigned order, const BigRational& constant);
    USeries(unsigned order, std::vector<BigRational> coeffs);

    /// c * u^k, truncated.
    static USeries monomial(unsigned order, const BigRational& c, unsigned k);

    unsigned order() const { return order_; }
    const std::vector<BigRational>& coeffs() const { return c_; }
    const BigRational& operator[](std::size_t i) const { return c_[i]; }
    bool is_zero() const;

    USeries inverse() const; ///< requires a nonzero constant term
    USeries operator-() const;
    USeries& operator+=(const USeries& o);
    USeries& operator-=(const USeries& o);
    USeries& operator*=(const USeries& o);
    USeries& operator*=(const BigRational& c);

    friend USeries operator+(USeries a, const USeries& b) { return a += b; }
    friend USeries operator-(USeries a, const USeries& b) { return a -= b; }
    friend USeries operator*(const USeries& a, const USeries& b);
    friend bool operator==(const USeries& a, const USeries& b) { return a.order_ == b.order_ && a.c_ == b.c_; }

private:
    void check_same(const USeries& o) const;
    unsigned order_;
    std::vector<BigRational> c_;
};

/// Expansion of f(q) in powers of u = 1/q up to u^order. Throws PoleError when
/// f has a pole at u = 0 (deg num > deg den).
USeries rf_to_useries(const RationalFunction& f, unsigned order);

enum class CoeffRing { ratfunc, useries };

/// Truncated series sum_{k<=order} c_k t^k over one of the two rings.
class PowerSeries {
public:
    static PowerSeries zero(unsigned order, CoeffRing ring, unsigned u_order = 0);
    static PowerSeries one(unsigned order, CoeffRing ring, unsigned u_order = 0);
    explicit PowerSeries(std::vector<RationalFunction> coeffs);
    PowerSeries(std::vector<USeries> coeffs, unsigned u_order);

    unsigned order() const { return order_; }
    CoeffRing ring() const { return ring_; }
    unsigned u_order() const { return u_order_; }

    const std::vector<RationalFunction>& rf_coeffs() const;
    const std::vector<USeries>& u_coeffs() const;
    std::vector<RationalFunction>& rf_coeffs();
    std::vector<USeries>& u_coeffs();

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.order_ == b.order_ && a.ring_ == b.ring_ && a.u_order_ == b.u_order_ && a.coeffs_ == b.coeffs_;
    }

private:
    PowerSeries() = default;
    unsigned order_ = 0;
    CoeffRing ring_ = CoeffRing::ratfunc;
    unsigned u_order_ = 0;
    std::variant<std::vector<RationalFunction>, std::vector<USeries>> coeffs_;
};

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b);
/// Cauchy product truncated at t^order. Ring and order must match.
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_scale(const PowerSeries& a, const BigRational& c);
/// exp of a series with zero constant term.
PowerSeries ps_exp(const PowerSeries& a);
/// log of a series with constant term 1.
PowerSeries ps_log(const PowerSeries& a);
/// Multiplicative inverse; constant term must be invertible.
PowerSeries ps_inverse(const PowerSeries& a);
/// Coefficientwise rf_to_useries.
PowerSeries ps_to_useries(const PowerSeries& a, unsigned u_order);

enum class SeriesForm { exp, sum, product };

/// F1(t). EXP and SUM forms are built over RATFUNC; PRODUCT only exists over
/// USERIES. Asking for a RATFUNC product throws DomainError; asking for EXP or
/// SUM over USERIES builds the rational form and expands it.
PowerSeries build_F1(unsigned order, SeriesForm form, CoeffRing ring, unsigned u_order = 40);
PowerSeries build_F1(unsigned order, SeriesForm form);

/// F2(t); forms EXP and PRODUCT only.
PowerSeries build_F2(unsigned order, SeriesForm form, CoeffRing ring, unsigned u_order = 40);
PowerSeries build_F2(unsigned order, SeriesForm form);

/// F1 * F2 from the exponential forms; the t^n coefficient is b_n.
PowerSeries build_Fbar(unsigned order);

} // namespace glcover
