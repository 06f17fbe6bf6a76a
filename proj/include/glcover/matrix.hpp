#pragma once

// Dense square matrices over a small finite field.

#include "glcover/field.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace glcover {

struct FqMatrix {
    unsigned n = 0;
    std::vector<FqElem> a; // row-major, n*n

    FqMatrix() = default;
    explicit FqMatrix(unsigned size) : n(size), a(static_cast<std::size_t>(size) * size, 0) {}
    FqMatrix(unsigned size, std::vector<FqElem> entries);

    static FqMatrix identity(unsigned size);

    FqElem operator()(unsigned i, unsigned j) const { return a[i * n + j]; }
    FqElem& at(unsigned i, unsigned j) { return a[i * n + j]; }

    friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
    friend auto operator<=>(const FqMatrix&, const FqMatrix&) = default;
};

FqMatrix mat_mul(const Field& F, const FqMatrix& x, const FqMatrix& y);
FqMatrix mat_add(const Field& F, const FqMatrix& x, const FqMatrix& y);
FqMatrix mat_sub(const Field& F, const FqMatrix& x, const FqMatrix& y);
FqMatrix mat_scale(const Field& F, FqElem c, const FqMatrix& x);
unsigned mat_rank(const Field& F, FqMatrix x);
/// nullopt when singular.
std::optional<FqMatrix> mat_inverse(const Field& F, const FqMatrix& x);
bool mat_commute(const Field& F, const FqMatrix& x, const FqMatrix& y);

/// Monic minimal polynomial, from the first linear dependency among I, M, M^2, ...
FqPoly min_poly(const Field& F, const FqMatrix& m);
/// Characteristic polynomial det(tI - M) via reduction to upper Hessenberg form.
FqPoly char_poly(const Field& F, const FqMatrix& m);
/// deg(min_poly) == n.
bool is_cyclic(const Field& F, const FqMatrix& m);
/// f(M) for a polynomial f.
FqMatrix poly_eval(const Field& F, const FqPoly& f, const FqMatrix& m);

/// Companion matrix J(f): ones on the superdiagonal, last row (a_1, ..., a_d)
/// where f = t^d - sum a_i t^(i-1). f must be monic of degree >= 1.
FqMatrix companion(const Field& F, const FqPoly& f);
/// dm x dm matrix with m diagonal blocks J(f) and identity blocks above them.
FqMatrix jm_block(const Field& F, const FqPoly& f, unsigned m);
/// Single Jordan block with eigenvalue 1.
FqMatrix regular_unipotent(const Field& F, unsigned n);

std::string mat_to_string(const FqMatrix& m);

} // namespace glcover
