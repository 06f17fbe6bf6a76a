#pragma once

// Brute-force ground truth over small GL_n(q): full enumeration, cyclic
// elements, centralizers and normalizers by exhaustive scan.

#include "glcover/exactalg.hpp"
#include "glcover/field.hpp"
#include "glcover/matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace glcover {

struct Budget {
    std::uint64_t max_elements = 200000;
    std::uint64_t max_scan_steps = 1000000000;
    unsigned threads = 1;
};

/// GL_n(q) with every element stored, in increasing order of the base-q code
/// of its row-major entries.
class GLGroup {
public:
    /// Throws BudgetExceeded when |GL_n(q)| exceeds budget.max_elements.
    static GLGroup enumerate(unsigned n, unsigned q, const Budget& budget = {});

    const Field& field() const { return field_; }
    unsigned n() const { return n_; }
    std::size_t size() const { return codes_.size(); }
    const Budget& budget() const { return budget_; }

    FqMatrix element(std::size_t i) const;
    const FqElem* entries(std::size_t i) const { return data_.data() + i * n_ * n_; }
    std::optional<std::size_t> index_of(const FqMatrix& m) const;
    /// Throws ConsistencyError if m is not in the group.
    std::size_t require_index(const FqMatrix& m) const;
    std::size_t identity_index() const { return identity_; }

    std::size_t multiply(std::size_t i, std::size_t j) const;
    std::size_t inverse(std::size_t i) const;
    bool commute(std::size_t i, std::size_t j) const;
    bool is_cyclic(std::size_t i) const { return cyclic_[i] != 0; }
    std::uint64_t cyclic_count() const;
    /// Scalar matrices, as sorted indices.
    std::vector<std::uint32_t> center() const;

private:
    GLGroup(unsigned n, unsigned q, const Budget& budget) : field_(q), n_(n), budget_(budget) {}
    std::uint64_t code_of(const FqElem* e) const;

    Field field_;
    unsigned n_;
    Budget budget_;
    std::vector<FqElem> data_;
    std::vector<std::uint64_t> codes_;
    std::vector<std::uint8_t> cyclic_;
    std::size_t identity_ = 0;
};

/// Sorted member indices of a subgroup.
struct CentralizerSet {
    std::vector<std::uint32_t> members;

    std::size_t order() const { return members.size(); }
    bool contains(std::uint32_t i) const;
    friend bool operator==(const CentralizerSet&, const CentralizerSet&) = default;
};

CentralizerSet centralizer(const GLGroup& G, std::size_t element);
bool is_abelian(const GLGroup& G, const CentralizerSet& C);

struct ProportionReport {
    std::uint64_t cyclic = 0;
    std::uint64_t total = 0;
    BigRational proportion;
    BigRational bound_ratio; ///< (1 - q^-5)/(1 + q^-3) - 1/(q^n (q-1))
    BigRational bound_poly;  ///< 1 - q^-3 - q^-5 + q^-6 - q^-n
    bool ratio_holds = false; ///< proportion >= bound_ratio
    bool poly_holds = false;  ///< proportion > bound_poly
};

ProportionReport cyclic_proportion(const GLGroup& G);

struct CentralizerCount {
    std::uint64_t count = 0;
    /// Least cyclic element of each distinct set, in increasing order.
    std::vector<std::uint32_t> representatives;
    std::vector<CentralizerSet> sets;
    std::uint64_t cyclic_total = 0;
    /// Cyclic elements inside each set, summed over sets.
    std::uint64_t cyclic_in_sets = 0;
    bool partition = false;     ///< every cyclic element lies in exactly one set
    bool all_abelian = false;
    bool orders_bounded = false; ///< every set has order <= q^n
};

/// Distinct centralizers of cyclic elements. Throws BudgetExceeded when
/// |G|^2 exceeds budget.max_scan_steps.
CentralizerCount count_cyclic_centralizers(const GLGroup& G);

/// |{g : g C g^-1 = C}|.
std::uint64_t normalizer_order(const GLGroup& G, const CentralizerSet& C);

/// Centralizer and normalizer of J_m(f) against the closed forms for an
/// indecomposable module: |C| = (q^d - 1) q^(d(m-1)); |N| = d(q^d - 1) if m = 1,
/// otherwise d (q^d - 1)^2 q^(2dm - 3d).
struct BlockCheck {
    FqPoly f;
    unsigned m = 0;
    std::uint64_t centralizer_order = 0, expected_centralizer = 0;
    std::uint64_t normalizer_order = 0, expected_normalizer = 0;
    bool abelian = false;
    bool cyclic = false;
    bool pass() const {
        return cyclic && abelian && centralizer_order == expected_centralizer && normalizer_order == expected_normalizer;
    }
};

BlockCheck indecomposable_check(const GLGroup& G, const FqPoly& f, unsigned m);

struct RemarkCheck {
    FqMatrix x;
    std::uint64_t centralizer_order = 0;
    std::uint64_t cyclic_members = 0;
    bool shape_matches = false; ///< every member is [[1,0,0,a],[b,1,c,d],[0,0,1,c],[0,0,0,1]]
    bool in_cyclic_centralizer = false;
};

/// The 4x4 unipotent example over F_2 whose centralizer has no cyclic element.
RemarkCheck remark_matrix_check(const GLGroup& G);

struct JmCheck {
    unsigned q = 0;
    FqPoly f;
    unsigned m = 0;
    FqPoly min_poly;
    FqPoly expected; ///< f^m
    bool char_matches = false;
    bool pass() const { return min_poly == expected && char_matches; }
};

/// min_poly(J_m(f)) against f^m for every monic irreducible f with
/// deg f <= max_degree and m <= max_m.
std::vector<JmCheck> jm_checks(unsigned q, unsigned max_degree = 3, unsigned max_m = 3);

} // namespace glcover
