#include "glcover/exactalg.hpp"

#include "glcover/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace glcover {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero();
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(const BigInt& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::monomial(const BigInt& coeff, std::size_t degree) {
    if (coeff == 0) return {};
    std::vector<BigInt> c(degree + 1);
    c[degree] = coeff;
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

std::size_t IntPolynomial::valuation() const {
    std::size_t v = 0;
    while (v < coeffs_.size() && coeffs_[v] == 0) ++v;
    return coeffs_.empty() ? 0 : v;
}

BigInt IntPolynomial::content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    IntPolynomial p = *this;
    BigInt g = content();
    if (leading() < 0) g = -g;
    return p.divide_exact(g);
}

BigInt IntPolynomial::max_norm() const {
    BigInt m = 0;
    for (const auto& c : coeffs_) {
        if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
    }
    return m;
}

BigInt IntPolynomial::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

BigRational IntPolynomial::eval(const BigRational& x) const {
    // Horner over the common denominator: sum c_i n^i d^(deg-i).
    if (is_zero()) return 0;
    const BigInt& n = x.get_num();
    const BigInt& d = x.get_den();
    BigInt acc = 0;
    BigInt dpow = 1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= n;
        acc += *it * dpow;
        dpow *= d;
    }
    BigInt den;
    mpz_pow_ui(den.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(degree()));
    return make_rational(acc, den);
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
    IntPolynomial result(BigInt(1));
    IntPolynomial base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return result;
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> c(k);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) { return *this = *this * o; }

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

IntPolynomial& IntPolynomial::divide_exact(const BigInt& c) {
    if (c == 0) throw DivisionByZero();
    for (auto& x : coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return *this;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        BigInt a = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || a != 1) os << a.get_str();
        if (i >= 1) os << 'q';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Division and gcd

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return IntPolynomial{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<BigInt> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const BigInt& lb = bc.back();
    std::vector<BigInt> quot(r.size() - db);
    BigInt qi;
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigInt& top = r[k + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        mpz_divexact(qi.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j) {
            mpz_submul(r[k + j].get_mpz_t(), qi.get_mpz_t(), bc[j].get_mpz_t());
        }
        quot[k] = qi;
    }
    for (std::size_t j = 0; j < db; ++j) {
        if (r[j] != 0) return std::nullopt;
    }
    return IntPolynomial(std::move(quot));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return a;
    std::vector<BigInt> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const BigInt& lb = bc.back();
    for (std::size_t top = r.size(); top-- > db;) {
        BigInt lead = r[top];
        for (auto& x : r) x *= lb;
        if (lead != 0) {
            const std::size_t shift = top - db;
            for (std::size_t j = 0; j <= db; ++j) {
                mpz_submul(r[shift + j].get_mpz_t(), lead.get_mpz_t(), bc[j].get_mpz_t());
            }
        }
        r.pop_back();
    }
    return IntPolynomial(std::move(r));
}

namespace detail {

IntPolynomial gcd_prs(IntPolynomial a, IntPolynomial b) {
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.primitive_part();
    }
    return a.primitive_part();
}

std::optional<IntPolynomial> gcd_heuristic(const IntPolynomial& a, const IntPolynomial& b) {
    const int max_deg = std::max(a.degree(), b.degree());
    BigInt xi = 2 * std::min(a.max_norm(), b.max_norm()) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        // Give up before the evaluations become unreasonably large.
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) * static_cast<std::size_t>(max_deg + 1) > 4'000'000) break;
        BigInt gamma;
        const BigInt av = a.eval(xi);
        const BigInt bv = b.eval(xi);
        mpz_gcd(gamma.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());

        std::vector<BigInt> h;
        BigInt half = xi / 2;
        while (gamma != 0) {
            BigInt r;
            mpz_fdiv_r(r.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
            if (r > half) r -= xi;
            h.push_back(r);
            gamma -= r;
            mpz_divexact(gamma.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
        }
        IntPolynomial cand = IntPolynomial(std::move(h)).primitive_part();
        if (!cand.is_zero() && cand.degree() <= std::min(a.degree(), b.degree()) &&
            exact_quotient(a, cand) && exact_quotient(b, cand)) {
            return cand;
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

} // namespace detail

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    const std::size_t va = a.valuation();
    const std::size_t vb = b.valuation();
    const std::size_t v = std::min(va, vb);
    // Strip powers of q; they contribute q^min(va, vb) to the gcd.
    auto strip = [](const IntPolynomial& p, std::size_t k) {
        std::vector<BigInt> c(p.coeffs().begin() + static_cast<std::ptrdiff_t>(k), p.coeffs().end());
        return IntPolynomial(std::move(c)).primitive_part();
    };
    IntPolynomial A = strip(a, va);
    IntPolynomial B = strip(b, vb);
    IntPolynomial g;
    if (A.degree() == 0 || B.degree() == 0) {
        g = IntPolynomial(BigInt(1));
    } else if (A == B) {
        g = A;
    } else if (auto h = detail::gcd_heuristic(A, B)) {
        g = std::move(*h);
    } else {
        g = detail::gcd_prs(A, B);
    }
    return g.shifted(v);
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(IntPolynomial p) : num_(std::move(p)), den_(BigInt(1)) {
    normalize_content();
}

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) {
        den_ = IntPolynomial(BigInt(1));
        return;
    }
    IntPolynomial g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = *exact_quotient(num, g);
        den = *exact_quotient(den, g);
    }
    num_ = std::move(num);
    den_ = std::move(den);
    normalize_content();
}

RationalFunction::RationalFunction(const BigRational& c)
    : num_(c.get_num()), den_(c.get_den()) {
    normalize_content();
}

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den, Coprime)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) den_ = IntPolynomial(BigInt(1));
    normalize_content();
}

void RationalFunction::normalize_content() {
    if (num_.is_zero()) {
        den_ = IntPolynomial(BigInt(1));
        return;
    }
    BigInt g;
    const BigInt cn = num_.content();
    const BigInt cd = den_.content();
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den_.leading() < 0) g = -g;
    if (g != 1) {
        num_.divide_exact(g);
        den_.divide_exact(g);
    }
}

std::optional<IntPolynomial> RationalFunction::as_int_polynomial() const {
    if (den_.degree() == 0 && den_.leading() == 1) return num_;
    return std::nullopt;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return RationalFunction(den_, num_, Coprime{});
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Coprime{});
}

RationalFunction RationalFunction::operator-() const {
    return RationalFunction(-num_, den_, Coprime{});
}

BigRational RationalFunction::eval(const BigRational& q0) const {
    const BigRational d = den_.eval(q0);
    if (d == 0) throw PoleError("rational function has a pole at q = " + q0.get_str());
    return num_.eval(q0) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    IntPolynomial g = poly_gcd(den_, o.den_);
    if (g.degree() == 0) {
        *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_, Coprime{});
        return *this;
    }
    IntPolynomial b1 = *exact_quotient(den_, g);
    IntPolynomial d1 = *exact_quotient(o.den_, g);
    IntPolynomial num = num_ * d1 + o.num_ * b1;
    IntPolynomial den = den_ * d1;
    if (num.is_zero()) return *this = RationalFunction();
    // Any common factor of num and den divides g.
    IntPolynomial h = poly_gcd(num, g);
    if (h.degree() > 0) {
        num = *exact_quotient(num, h);
        den = *exact_quotient(den, h);
    }
    *this = RationalFunction(std::move(num), std::move(den), Coprime{});
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero() || o.is_zero()) return *this = RationalFunction();
    IntPolynomial a = num_, b = den_, c = o.num_, d = o.den_;
    IntPolynomial g1 = poly_gcd(a, d);
    if (g1.degree() > 0) {
        a = *exact_quotient(a, g1);
        d = *exact_quotient(d, g1);
    }
    IntPolynomial g2 = poly_gcd(c, b);
    if (g2.degree() > 0) {
        c = *exact_quotient(c, g2);
        b = *exact_quotient(b, g2);
    }
    *this = RationalFunction(a * c, b * d, Coprime{});
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction& RationalFunction::operator*=(const BigRational& c) {
    if (c == 0) return *this = RationalFunction();
    num_ *= c.get_num();
    den_ *= c.get_den();
    normalize_content();
    return *this;
}

std::string RationalFunction::to_string() const {
    if (den_.degree() == 0 && den_.leading() == 1) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction rf_arith(const RationalFunction& lhs, const RationalFunction& rhs, ArithOp op) {
    switch (op) {
    case ArithOp::add: return lhs + rhs;
    case ArithOp::sub: return lhs - rhs;
    case ArithOp::mul: return lhs * rhs;
    case ArithOp::div: return lhs / rhs;
    }
    throw DomainError("unknown arithmetic operation");
}

BigRational rf_eval(const RationalFunction& f, const BigRational& q0) { return f.eval(q0); }

RationalFunction phi_d(unsigned d) {
    IntPolynomial num(BigInt(1));
    for (unsigned i = 1; i <= d; ++i) {
        num *= IntPolynomial::monomial(1, i) - IntPolynomial(BigInt(1));
    }
    return RationalFunction(std::move(num), IntPolynomial::monomial(1, d * (d + 1) / 2));
}

std::string to_decimal(const BigRational& x, unsigned digits) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    BigInt scaled;
    BigInt numer = x.get_num() * scale;
    mpz_fdiv_q(scaled.get_mpz_t(), numer.get_mpz_t(), x.get_den().get_mpz_t());
    const bool neg = scaled < 0;
    BigInt mag = abs(scaled);
    std::string s = mag.get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    return neg ? "-" + s : s;
}

} // namespace glcover
