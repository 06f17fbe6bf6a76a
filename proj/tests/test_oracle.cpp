#include "glcover/census.hpp"
#include "glcover/error.hpp"
#include "glcover/oracle.hpp"

#include <doctest.h>

using namespace glcover;

namespace {

// Cyclic iff some vector v has v, Mv, ..., M^(n-1) v spanning F^n; checked by
// trying every v.
bool has_cyclic_vector(const Field& F, const FqMatrix& m) {
    const unsigned n = m.n, q = F.q();
    unsigned total = 1;
    for (unsigned i = 0; i < n; ++i) total *= q;
    for (unsigned code = 1; code < total; ++code) {
        std::vector<FqElem> v(n);
        unsigned x = code;
        for (unsigned i = 0; i < n; ++i) {
            v[i] = static_cast<FqElem>(x % q);
            x /= q;
        }
        FqMatrix krylov(n);
        for (unsigned r = 0; r < n; ++r) {
            for (unsigned c = 0; c < n; ++c) krylov.at(r, c) = v[c];
            std::vector<FqElem> w(n, 0);
            for (unsigned i = 0; i < n; ++i) {
                for (unsigned k = 0; k < n; ++k) w[i] = F.add(w[i], F.mul(m(i, k), v[k]));
            }
            v = w;
        }
        if (mat_rank(F, krylov) == n) return true;
    }
    return false;
}

FqPoly t_minus_one(const Field& F) { return F.normalize({F.neg(1), 1}); }

} // namespace

TEST_CASE("enumeration") {
    CHECK(GLGroup::enumerate(2, 2).size() == 6);
    CHECK(GLGroup::enumerate(2, 3).size() == 48);
    CHECK(GLGroup::enumerate(2, 4).size() == 180);
    CHECK(GLGroup::enumerate(3, 2).size() == 168);
    const GLGroup G = GLGroup::enumerate(3, 3);
    CHECK(G.size() == 11232);
    CHECK(BigInt(static_cast<unsigned long>(G.size())) == gl_order(3).eval(BigInt(3)));
    for (std::size_t i = 1; i < G.size(); ++i) CHECK(G.element(i - 1) < G.element(i));
}

TEST_CASE("group operations agree with matrix arithmetic") {
    const GLGroup G = GLGroup::enumerate(2, 4);
    const Field& F = G.field();
    for (std::size_t i = 0; i < G.size(); i += 7) {
        CHECK(G.index_of(G.element(i)) == i);
        for (std::size_t j = 0; j < G.size(); j += 11) {
            CHECK(G.element(G.multiply(i, j)) == mat_mul(F, G.element(i), G.element(j)));
            CHECK(G.commute(i, j) == mat_commute(F, G.element(i), G.element(j)));
        }
        CHECK(G.multiply(i, G.inverse(i)) == G.identity_index());
    }
    CHECK_FALSE(G.index_of(FqMatrix(2)).has_value());
    CHECK_THROWS_AS(G.require_index(FqMatrix(2)), ConsistencyError);
    CHECK(G.center().size() == 3);
}

TEST_CASE("budgets") {
    CHECK_THROWS_AS(GLGroup::enumerate(4, 3), BudgetExceeded);
    try {
        GLGroup::enumerate(4, 3);
    } catch (const BudgetExceeded& e) {
        CHECK(std::string(e.what()).find("24261120") != std::string::npos);
    }
    const GLGroup G = GLGroup::enumerate(2, 3, Budget{200000, 1000, 1});
    CHECK_THROWS_AS(count_cyclic_centralizers(G), BudgetExceeded);
    CHECK_THROWS_AS(GLGroup::enumerate(3, 3, Budget{1000, 1000000000, 1}), BudgetExceeded);
}

TEST_CASE("cyclic elements against cyclic vectors") {
    for (auto [n, q] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {2, 5}}) {
        const GLGroup G = GLGroup::enumerate(n, q);
        std::uint64_t count = 0;
        for (std::size_t i = 0; i < G.size(); ++i) {
            const bool c = has_cyclic_vector(G.field(), G.element(i));
            CHECK(c == G.is_cyclic(i));
            count += c;
        }
        CHECK(count == G.cyclic_count());
    }
}

TEST_CASE("cyclic proportion") {
    const ProportionReport p = cyclic_proportion(GLGroup::enumerate(2, 2));
    CHECK(p.proportion == BigRational(5, 6));
    CHECK(p.ratio_holds);
    CHECK(p.poly_holds);
    for (auto [n, q] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 2}, {2, 4}}) {
        const ProportionReport r = cyclic_proportion(GLGroup::enumerate(n, q));
        const BigRational x(1, q);
        BigRational xn = 1;
        for (unsigned i = 0; i < n; ++i) xn *= x;
        CHECK(r.proportion > 1 - x * x * x - x * x * x * x * x + x * x * x * x * x * x - xn);
        CHECK(r.ratio_holds);
    }
}

TEST_CASE("centralizers by scan match matrix-level commutation") {
    const GLGroup G = GLGroup::enumerate(3, 2);
    const Field& F = G.field();
    for (std::size_t g = 0; g < G.size(); g += 5) {
        const CentralizerSet C = centralizer(G, g);
        std::size_t direct = 0;
        for (std::size_t h = 0; h < G.size(); ++h) direct += mat_commute(F, G.element(g), G.element(h));
        CHECK(C.order() == direct);
        CHECK(C.contains(static_cast<std::uint32_t>(G.identity_index())));
        CHECK(G.size() % C.order() == 0);
        // closed under products
        for (auto a : C.members) {
            for (auto b : C.members) CHECK(C.contains(static_cast<std::uint32_t>(G.multiply(a, b))));
        }
    }
}

TEST_CASE("distinct cyclic centralizers") {
    for (auto [n, q] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}}) {
        const GLGroup G = GLGroup::enumerate(n, q);
        const CentralizerCount cc = count_cyclic_centralizers(G);
        const BigInt a = a_polynomial(n).eval(BigInt(q));
        const BigInt N(static_cast<unsigned long>(cc.count));
        if (q > n) {
            CHECK(N == a);
        } else {
            CHECK(N < a);
        }
        CHECK(cc.partition);
        CHECK(cc.all_abelian);
        CHECK(cc.orders_bounded);
        CHECK(cc.cyclic_in_sets == cc.cyclic_total);
        CHECK(cc.representatives.size() == cc.count);
        for (std::size_t s = 0; s < cc.sets.size(); ++s) {
            CHECK(G.is_cyclic(cc.representatives[s]));
            CHECK(centralizer(G, cc.representatives[s]) == cc.sets[s]);
        }
        const BigRational x(1, q);
        BigRational xn = 1;
        for (unsigned i = 0; i < n; ++i) xn *= x;
        const BigRational lower =
            xn * BigRational(gl_order(n).eval(BigInt(q))) * (1 - x * x * x - x * x * x * x * x + x * x * x * x * x * x - xn);
        CHECK(BigRational(N) >= lower);
    }
    CHECK(count_cyclic_centralizers(GLGroup::enumerate(2, 2)).count == 4);
    CHECK(count_cyclic_centralizers(GLGroup::enumerate(3, 2)).count == 57);
}

TEST_CASE("results do not depend on the thread count") {
    const GLGroup one = GLGroup::enumerate(3, 2, Budget{200000, 1000000000, 1});
    const GLGroup three = GLGroup::enumerate(3, 2, Budget{200000, 1000000000, 3});
    const CentralizerCount a = count_cyclic_centralizers(one);
    const CentralizerCount b = count_cyclic_centralizers(three);
    CHECK(a.representatives == b.representatives);
    CHECK(a.sets == b.sets);
    CHECK(normalizer_order(one, a.sets[0]) == normalizer_order(three, b.sets[0]));
}

TEST_CASE("regular unipotent centralizers and normalizers") {
    struct Case {
        unsigned n, q;
        std::uint64_t centralizer, normalizer;
    };
    for (const Case& c : {Case{2, 2, 2, 2}, Case{2, 3, 6, 12}, Case{3, 2, 4, 8}}) {
        const GLGroup G = GLGroup::enumerate(c.n, c.q);
        const BlockCheck b = indecomposable_check(G, t_minus_one(G.field()), c.n);
        CHECK(b.cyclic);
        CHECK(b.abelian);
        CHECK(b.centralizer_order == c.centralizer);
        CHECK(b.normalizer_order == c.normalizer);
        CHECK(b.pass());
    }
}

TEST_CASE("Singer cycle and a (2,2) block") {
    const GLGroup G = GLGroup::enumerate(2, 3);
    const BlockCheck singer = indecomposable_check(G, G.field().monic_irreducibles(2).front(), 1);
    CHECK(singer.centralizer_order == 8);
    CHECK(singer.normalizer_order == 16);
    CHECK(singer.pass());

    const GLGroup H = GLGroup::enumerate(4, 2);
    const BlockCheck b = indecomposable_check(H, FqPoly{{1, 1, 1}}, 2);
    CHECK(b.centralizer_order == 12);
    CHECK(b.normalizer_order == 72);
    CHECK(b.pass());
    CHECK_THROWS_AS(indecomposable_check(H, FqPoly{{1, 1, 1}}, 1), DomainError);
}

TEST_CASE("the unipotent GL_4(2) example") {
    const GLGroup G = GLGroup::enumerate(4, 2);
    const RemarkCheck r = remark_matrix_check(G);
    CHECK(r.centralizer_order == 16);
    CHECK(r.cyclic_members == 0);
    CHECK(r.shape_matches);
    CHECK_FALSE(r.in_cyclic_centralizer);
    CHECK_FALSE(G.is_cyclic(G.require_index(r.x)));
    CHECK_THROWS_AS(remark_matrix_check(GLGroup::enumerate(2, 2)), DomainError);
}

TEST_CASE("J_m(f) minimal polynomials") {
    for (unsigned q : {2U, 3U}) {
        const auto checks = jm_checks(q);
        CHECK(checks.size() == (q == 2 ? 12U : 39U));
        for (const auto& c : checks) CHECK(c.pass());
    }
    const Field F2(2);
    CHECK(jm_block(F2, t_minus_one(F2), 3) == regular_unipotent(F2, 3));
}
