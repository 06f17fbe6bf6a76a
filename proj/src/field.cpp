#include "glcover/field.hpp"

#include "glcover/error.hpp"

#include <sstream>

namespace glcover {

namespace {

using PrimePoly = std::vector<unsigned>; // ascending, over F_p

void trim(PrimePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PrimePoly prime_mod(PrimePoly a, const PrimePoly& b, unsigned p) {
    // b monic
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const unsigned lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + p * p - lead * b[j] % p) % p;
        trim(a);
    }
    return a;
}

PrimePoly from_code(unsigned code, unsigned base, unsigned len) {
    PrimePoly c(len);
    for (unsigned i = 0; i < len; ++i) {
        c[i] = code % base;
        code /= base;
    }
    return c;
}

bool prime_irreducible(const PrimePoly& f, unsigned p) {
    const unsigned deg = static_cast<unsigned>(f.size() - 1);
    for (unsigned dd = 1; 2 * dd <= deg; ++dd) {
        unsigned count = 1;
        for (unsigned i = 0; i < dd; ++i) count *= p;
        for (unsigned code = 0; code < count; ++code) {
            PrimePoly g = from_code(code, p, dd);
            g.push_back(1);
            if (prime_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

Field::Field(unsigned q) : q_(q) {
    if (q < 2 || q > 256) throw DomainError("field size must be a prime power in [2, 256]");
    unsigned p = 2;
    while (q % p != 0) ++p;
    unsigned rest = q, e = 0;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw DomainError(std::to_string(q) + " is not a prime power");
    p_ = p;
    e_ = e;

    // Least monic irreducible of degree e over F_p, ordered by the base-p code
    // of its lower coefficients.
    if (e == 1) {
        modulus_ = {0, 1};
    } else {
        for (unsigned code = 0; code < q; ++code) {
            PrimePoly f = from_code(code, p, e);
            f.push_back(1);
            if (prime_irreducible(f, p)) {
                modulus_ = f;
                break;
            }
        }
    }

    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.resize(q);
    for (unsigned a = 0; a < q; ++a) {
        const PrimePoly pa = from_code(a, p, e);
        for (unsigned b = 0; b < q; ++b) {
            const PrimePoly pb = from_code(b, p, e);
            unsigned sum = 0, scale = 1;
            for (unsigned i = 0; i < e; ++i) {
                sum += ((pa[i] + pb[i]) % p) * scale;
                scale *= p;
            }
            add_[a * q + b] = static_cast<FqElem>(sum);

            PrimePoly prod(2 * e, 0);
            for (unsigned i = 0; i < e; ++i) {
                for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
            }
            PrimePoly r = e == 1 ? (trim(prod), prod) : prime_mod(prod, modulus_, p);
            unsigned code = 0;
            scale = 1;
            for (unsigned i = 0; i < e; ++i) {
                code += (i < r.size() ? r[i] % p : 0) * scale;
                scale *= p;
            }
            mul_[a * q + b] = static_cast<FqElem>(code);
        }
    }
    for (unsigned a = 0; a < q; ++a) {
        for (unsigned b = 0; b < q; ++b) {
            if (add_[a * q + b] == 0) neg_[a] = static_cast<FqElem>(b);
            if (mul_[a * q + b] == 1) inv_[a] = static_cast<FqElem>(b);
        }
    }
}

FqElem Field::from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<FqElem>(r);
}

FqPoly Field::normalize(std::vector<FqElem> c) const {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return FqPoly{std::move(c)};
}

FqPoly Field::poly_add(const FqPoly& a, const FqPoly& b) const {
    std::vector<FqElem> c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = add(i < a.c.size() ? a.c[i] : 0, i < b.c.size() ? b.c[i] : 0);
    }
    return normalize(std::move(c));
}

FqPoly Field::poly_sub(const FqPoly& a, const FqPoly& b) const {
    std::vector<FqElem> c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = sub(i < a.c.size() ? a.c[i] : 0, i < b.c.size() ? b.c[i] : 0);
    }
    return normalize(std::move(c));
}

FqPoly Field::poly_mul(const FqPoly& a, const FqPoly& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<FqElem> c(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] = add(c[i + j], mul(a.c[i], b.c[j]));
    }
    return normalize(std::move(c));
}

FqPoly Field::poly_pow(const FqPoly& a, unsigned e) const {
    FqPoly r{{1}};
    for (unsigned i = 0; i < e; ++i) r = poly_mul(r, a);
    return r;
}

FqPoly Field::poly_mod(const FqPoly& a, const FqPoly& b) const {
    if (b.is_zero()) throw DivisionByZero();
    std::vector<FqElem> r = a.c;
    const std::size_t db = b.c.size() - 1;
    const FqElem lead_inv = inv(b.c.back());
    while (!r.empty() && r.size() > db) {
        const FqElem f = mul(r.back(), lead_inv);
        const std::size_t shift = r.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) r[shift + j] = sub(r[shift + j], mul(f, b.c[j]));
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return normalize(std::move(r));
}

bool Field::poly_divides(const FqPoly& d, const FqPoly& a) const { return poly_mod(a, d).is_zero(); }

bool Field::is_irreducible(const FqPoly& f) const {
    if (f.degree() < 1) return false;
    const auto deg = static_cast<unsigned>(f.degree());
    for (unsigned dd = 1; 2 * dd <= deg; ++dd) {
        for (const FqPoly& g : [&] {
                 // all monic polynomials of degree dd
                 std::vector<FqPoly> out;
                 unsigned count = 1;
                 for (unsigned i = 0; i < dd; ++i) count *= q_;
                 for (unsigned code = 0; code < count; ++code) {
                     std::vector<FqElem> c(dd + 1);
                     unsigned x = code;
                     for (unsigned i = 0; i < dd; ++i) {
                         c[i] = static_cast<FqElem>(x % q_);
                         x /= q_;
                     }
                     c[dd] = 1;
                     out.push_back(FqPoly{std::move(c)});
                 }
                 return out;
             }()) {
            if (poly_divides(g, f)) return false;
        }
    }
    return true;
}

std::vector<FqPoly> Field::monic_irreducibles(unsigned degree) const {
    std::vector<FqPoly> out;
    unsigned count = 1;
    for (unsigned i = 0; i < degree; ++i) count *= q_;
    for (unsigned code = 0; code < count; ++code) {
        std::vector<FqElem> c(degree + 1);
        unsigned x = code;
        for (unsigned i = 0; i < degree; ++i) {
            c[i] = static_cast<FqElem>(x % q_);
            x /= q_;
        }
        c[degree] = 1;
        FqPoly f{std::move(c)};
        if (is_irreducible(f)) out.push_back(std::move(f));
    }
    return out;
}

std::string Field::poly_to_string(const FqPoly& f) const {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const unsigned c = f.c[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i >= 1) os << 't';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

} // namespace glcover
