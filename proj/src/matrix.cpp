#include "glcover/matrix.hpp"

#include "glcover/error.hpp"

#include <sstream>
#include <utility>

namespace glcover {

FqMatrix::FqMatrix(unsigned size, std::vector<FqElem> entries) : n(size), a(std::move(entries)) {
    if (a.size() != static_cast<std::size_t>(n) * n) throw DomainError("matrix entry count does not match n*n");
}

FqMatrix FqMatrix::identity(unsigned size) {
    FqMatrix m(size);
    for (unsigned i = 0; i < size; ++i) m.at(i, i) = 1;
    return m;
}

namespace {

void require_same(const FqMatrix& x, const FqMatrix& y) {
    if (x.n != y.n) throw DomainError("matrix dimensions differ");
}

} // namespace

FqMatrix mat_mul(const Field& F, const FqMatrix& x, const FqMatrix& y) {
    require_same(x, y);
    const unsigned n = x.n;
    FqMatrix r(n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned k = 0; k < n; ++k) {
            const FqElem xik = x(i, k);
            if (xik == 0) continue;
            for (unsigned j = 0; j < n; ++j) r.at(i, j) = F.add(r(i, j), F.mul(xik, y(k, j)));
        }
    }
    return r;
}

FqMatrix mat_add(const Field& F, const FqMatrix& x, const FqMatrix& y) {
    require_same(x, y);
    FqMatrix r(x.n);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.add(x.a[i], y.a[i]);
    return r;
}

FqMatrix mat_sub(const Field& F, const FqMatrix& x, const FqMatrix& y) {
    require_same(x, y);
    FqMatrix r(x.n);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.sub(x.a[i], y.a[i]);
    return r;
}

FqMatrix mat_scale(const Field& F, FqElem c, const FqMatrix& x) {
    FqMatrix r(x.n);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.mul(c, x.a[i]);
    return r;
}

unsigned mat_rank(const Field& F, FqMatrix x) {
    const unsigned n = x.n;
    unsigned rank = 0;
    for (unsigned col = 0; col < n && rank < n; ++col) {
        unsigned piv = rank;
        while (piv < n && x(piv, col) == 0) ++piv;
        if (piv == n) continue;
        for (unsigned j = 0; j < n; ++j) std::swap(x.at(piv, j), x.at(rank, j));
        const FqElem inv = F.inv(x(rank, col));
        for (unsigned i = rank + 1; i < n; ++i) {
            const FqElem f = F.mul(x(i, col), inv);
            if (f == 0) continue;
            for (unsigned j = col; j < n; ++j) x.at(i, j) = F.sub(x(i, j), F.mul(f, x(rank, j)));
        }
        ++rank;
    }
    return rank;
}

std::optional<FqMatrix> mat_inverse(const Field& F, const FqMatrix& x) {
    const unsigned n = x.n;
    FqMatrix a = x;
    FqMatrix b = FqMatrix::identity(n);
    for (unsigned col = 0; col < n; ++col) {
        unsigned piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) return std::nullopt;
        for (unsigned j = 0; j < n; ++j) {
            std::swap(a.at(piv, j), a.at(col, j));
            std::swap(b.at(piv, j), b.at(col, j));
        }
        const FqElem inv = F.inv(a(col, col));
        for (unsigned j = 0; j < n; ++j) {
            a.at(col, j) = F.mul(a(col, j), inv);
            b.at(col, j) = F.mul(b(col, j), inv);
        }
        for (unsigned i = 0; i < n; ++i) {
            if (i == col) continue;
            const FqElem f = a(i, col);
            if (f == 0) continue;
            for (unsigned j = 0; j < n; ++j) {
                a.at(i, j) = F.sub(a(i, j), F.mul(f, a(col, j)));
                b.at(i, j) = F.sub(b(i, j), F.mul(f, b(col, j)));
            }
        }
    }
    return b;
}

bool mat_commute(const Field& F, const FqMatrix& x, const FqMatrix& y) {
    return mat_mul(F, x, y) == mat_mul(F, y, x);
}

FqPoly min_poly(const Field& F, const FqMatrix& m) {
    const unsigned n = m.n;
    const std::size_t len = static_cast<std::size_t>(n) * n;
    // Echelon basis of the span of I, M, ..., M^(k-1), each row tracking the
    // combination of powers that produced it.
    std::vector<std::vector<FqElem>> rows, combos;
    std::vector<std::size_t> pivots;
    FqMatrix power = FqMatrix::identity(n);
    for (unsigned k = 0; k <= n; ++k) {
        std::vector<FqElem> v = power.a;
        std::vector<FqElem> c(n + 1, 0);
        c[k] = 1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const FqElem f = v[pivots[r]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < len; ++j) v[j] = F.sub(v[j], F.mul(f, rows[r][j]));
            for (unsigned j = 0; j <= n; ++j) c[j] = F.sub(c[j], F.mul(f, combos[r][j]));
        }
        std::size_t piv = 0;
        while (piv < len && v[piv] == 0) ++piv;
        if (piv == len) {
            // c(M) = 0 with c monic of degree k.
            c.resize(k + 1);
            return F.normalize(std::move(c));
        }
        const FqElem inv = F.inv(v[piv]);
        for (auto& e : v) e = F.mul(e, inv);
        for (auto& e : c) e = F.mul(e, inv);
        rows.push_back(std::move(v));
        combos.push_back(std::move(c));
        pivots.push_back(piv);
        power = mat_mul(F, power, m);
    }
    throw ConsistencyError("minimal polynomial degree exceeds n");
}

FqPoly char_poly(const Field& F, const FqMatrix& m) {
    const unsigned n = m.n;
    FqMatrix h = m;
    // Similarity transforms to upper Hessenberg form.
    for (unsigned j = 0; j + 2 < n; ++j) {
        unsigned piv = j + 1;
        while (piv < n && h(piv, j) == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            for (unsigned c = 0; c < n; ++c) std::swap(h.at(piv, c), h.at(j + 1, c));
            for (unsigned r = 0; r < n; ++r) std::swap(h.at(r, piv), h.at(r, j + 1));
        }
        const FqElem inv = F.inv(h(j + 1, j));
        for (unsigned k = j + 2; k < n; ++k) {
            const FqElem u = F.mul(h(k, j), inv);
            if (u == 0) continue;
            for (unsigned c = 0; c < n; ++c) h.at(k, c) = F.sub(h(k, c), F.mul(u, h(j + 1, c)));
            for (unsigned r = 0; r < n; ++r) h.at(r, j + 1) = F.add(h(r, j + 1), F.mul(u, h(r, k)));
        }
    }
    // p_k = (t - h_kk) p_{k-1} - sum_{i<k} h_ik (h_{i+1,i} ... h_{k,k-1}) p_{i-1}
    std::vector<FqPoly> p(n + 1);
    p[0] = FqPoly{{1}};
    for (unsigned k = 1; k <= n; ++k) {
        const FqPoly lin = F.normalize({F.neg(h(k - 1, k - 1)), 1});
        FqPoly acc = F.poly_mul(lin, p[k - 1]);
        FqElem prod = 1;
        for (unsigned i = k - 1; i >= 1; --i) {
            prod = F.mul(prod, h(i, i - 1));
            const FqElem coef = F.mul(h(i - 1, k - 1), prod);
            if (coef != 0) acc = F.poly_sub(acc, F.poly_mul(FqPoly{{coef}}, p[i - 1]));
        }
        p[k] = std::move(acc);
    }
    return p[n];
}

bool is_cyclic(const Field& F, const FqMatrix& m) { return min_poly(F, m).degree() == static_cast<int>(m.n); }

FqMatrix poly_eval(const Field& F, const FqPoly& f, const FqMatrix& m) {
    FqMatrix r(m.n);
    for (int i = f.degree(); i >= 0; --i) {
        r = mat_mul(F, r, m);
        const FqElem c = f.c[static_cast<std::size_t>(i)];
        for (unsigned d = 0; d < m.n; ++d) r.at(d, d) = F.add(r(d, d), c);
    }
    return r;
}

FqMatrix companion(const Field& F, const FqPoly& f) {
    if (f.degree() < 1 || f.c.back() != 1) throw DomainError("companion matrix needs a monic polynomial of degree >= 1");
    const auto d = static_cast<unsigned>(f.degree());
    FqMatrix m(d);
    for (unsigned i = 0; i + 1 < d; ++i) m.at(i, i + 1) = 1;
    for (unsigned j = 0; j < d; ++j) m.at(d - 1, j) = F.neg(f.c[j]);
    return m;
}

FqMatrix jm_block(const Field& F, const FqPoly& f, unsigned m) {
    if (m == 0) throw DomainError("jm_block needs m >= 1");
    const FqMatrix j = companion(F, f);
    const unsigned d = j.n;
    FqMatrix out(d * m);
    for (unsigned b = 0; b < m; ++b) {
        for (unsigned r = 0; r < d; ++r) {
            for (unsigned c = 0; c < d; ++c) out.at(b * d + r, b * d + c) = j(r, c);
            if (b + 1 < m) out.at(b * d + r, (b + 1) * d + r) = 1;
        }
    }
    return out;
}

FqMatrix regular_unipotent(const Field& F, unsigned n) {
    // t - 1
    return jm_block(F, F.normalize({F.neg(1), 1}), n);
}

std::string mat_to_string(const FqMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.a.size(); ++i) {
        if (i) os << ' ';
        os << static_cast<unsigned>(m.a[i]);
    }
    return os.str();
}

} // namespace glcover
