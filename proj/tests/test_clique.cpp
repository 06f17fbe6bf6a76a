#include "glcover/census.hpp"
#include "glcover/clique.hpp"
#include "glcover/error.hpp"

#include <doctest.h>

using namespace glcover;

namespace {

// Largest pairwise non-commuting subset by trying all subsets (tiny groups only).
std::size_t brute_omega(const GLGroup& G) {
    const std::size_t n = G.size();
    std::size_t best = 1;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::uint32_t> s;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) s.push_back(static_cast<std::uint32_t>(i));
        }
        if (s.size() > best && verify_noncommuting(G, s)) best = s.size();
    }
    return best;
}

} // namespace

TEST_CASE("graph construction") {
    struct Case {
        unsigned n, q;
        std::size_t vertices;
    };
    for (const Case& c : {Case{2, 2, 5}, Case{2, 3, 46}, Case{2, 4, 177}}) {
        const GLGroup G = GLGroup::enumerate(c.n, c.q);
        const NonComGraph g = build_graph(G);
        CHECK(g.vertex_count() == c.vertices);
        CHECK(g.center_order + g.vertex_count() == G.size());
        for (std::size_t u = 0; u < g.vertex_count(); ++u) {
            CHECK_FALSE(g.adjacent(u, u));
            for (std::size_t v = 0; v < g.vertex_count(); ++v) {
                CHECK(g.adjacent(u, v) == g.adjacent(v, u));
                if (u != v) CHECK(g.adjacent(u, v) == !G.commute(g.element_of[u], g.element_of[v]));
            }
        }
        // Degeneracy order: vertex i has minimum degree inside vertices 0..i.
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            auto deg = [&](std::size_t v) {
                std::size_t d = 0;
                for (std::size_t w = 0; w <= i; ++w) d += g.adjacent(v, w);
                return d;
            };
            const std::size_t di = deg(i);
            for (std::size_t w = 0; w < i; ++w) CHECK(di <= deg(w));
        }
    }
}

TEST_CASE("seed cliques") {
    for (auto [n, q, size] : std::vector<std::tuple<unsigned, unsigned, std::size_t>>{{2, 3, 13}, {2, 4, 21}, {3, 2, 57}}) {
        const GLGroup G = GLGroup::enumerate(n, q);
        const auto seed = seed_clique(G, count_cyclic_centralizers(G));
        CHECK(seed.size() == size);
        CHECK(verify_noncommuting(G, seed));
    }
}

TEST_CASE("covering bound") {
    CHECK(covering_upper_bound(2, 5) == 31);
    CHECK(covering_upper_bound(3, 3) == 1067);
    CHECK_THROWS_AS(covering_upper_bound(3, 2), UnsupportedRegime);
    CHECK_THROWS_AS(covering_upper_bound(2, 2), UnsupportedRegime);
}

TEST_CASE("seed meets cover without search") {
    const GLGroup G = GLGroup::enumerate(2, 3);
    const NonComGraph g = build_graph(G);
    const CliqueResult r = max_clique(g, seed_clique(G, count_cyclic_centralizers(G)), 13);
    CHECK(r.size == 13);
    CHECK(r.optimal);
    CHECK_FALSE(r.searched);
    CHECK(verify_noncommuting(G, r.witness));
}

TEST_CASE("exhaustive search") {
    const GLGroup G = GLGroup::enumerate(2, 2);
    const CliqueResult r = max_clique(build_graph(G), {}, std::nullopt);
    CHECK(r.size == 4);
    CHECK(r.size == brute_omega(G));
    CHECK(r.optimal);
    CHECK(verify_noncommuting(G, r.witness));
}

TEST_CASE("search without a seed reaches the covering bound") {
    const GLGroup G = GLGroup::enumerate(2, 4);
    const NonComGraph g = build_graph(G);
    const CliqueResult r = max_clique(g, {}, std::nullopt);
    CHECK(r.optimal);
    CHECK(r.size == 21);
    CHECK(verify_noncommuting(G, r.witness));
}

TEST_CASE("GL_3(2) is certified, with or without the seed") {
    const GLGroup G = GLGroup::enumerate(3, 2);
    const NonComGraph g = build_graph(G);
    const auto seed = seed_clique(G, count_cyclic_centralizers(G));
    const CliqueResult a = max_clique(g, seed, std::nullopt);
    const CliqueResult b = max_clique(g, {}, std::nullopt);
    CHECK(a.optimal);
    CHECK(b.optimal);
    CHECK(a.size == b.size);
    CHECK(a.size >= seed.size());
    CHECK(BigInt(static_cast<unsigned long>(a.size)) < a_polynomial(3).eval(BigInt(2)));
    CHECK(verify_noncommuting(G, b.witness));
    // identical inputs give identical witnesses
    CHECK(max_clique(g, {}, std::nullopt).witness == b.witness);
}

TEST_CASE("step budget") {
    const GLGroup G = GLGroup::enumerate(3, 2);
    const CliqueResult r = max_clique(build_graph(G), {}, std::nullopt, CliqueBudget{60.0, 3});
    CHECK_FALSE(r.optimal);
}

TEST_CASE("witness verification") {
    const GLGroup G = GLGroup::enumerate(2, 3);
    const NonComGraph g = build_graph(G);
    CHECK(verify_clique(g, {}));
    CHECK(verify_clique(g, {0}));
    const std::uint32_t d1 = static_cast<std::uint32_t>(G.require_index(FqMatrix(2, {1, 0, 0, 2})));
    const std::uint32_t d2 = static_cast<std::uint32_t>(G.require_index(FqMatrix(2, {2, 0, 0, 1})));
    CHECK_FALSE(verify_noncommuting(G, {d1, d2}));
    CHECK_FALSE(verify_clique(g, {*g.vertex_of(d1), *g.vertex_of(d2)}));
    CHECK_THROWS_AS(max_clique(g, {d1, d2}, std::nullopt), DomainError);
}

TEST_CASE("abelian groups") {
    const GLGroup G = GLGroup::enumerate(1, 5);
    const NonComGraph g = build_graph(G);
    CHECK(g.vertex_count() == 0);
    const CliqueResult r = max_clique(g, seed_clique(G, count_cyclic_centralizers(G)), std::nullopt);
    CHECK(r.size == 1);
    CHECK(r.optimal);
}
