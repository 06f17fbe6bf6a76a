#pragma once

// Non-commuting graph of GL_n(q) and an exact maximum clique solver
// (bitset branch and bound with greedy colouring bounds).

#include "glcover/oracle.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace glcover {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    std::size_t count() const;
    bool none() const;
    /// Lowest set bit at or after `from`, or size().
    std::size_t next(std::size_t from) const;
    Bitset& operator&=(const Bitset& o);
    Bitset& subtract(const Bitset& o);
    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Vertices are the non-central elements; vertex v stands for group element
/// element_of[v]. Vertex numbering follows the degeneracy order (vertex 0 is
/// removed last when repeatedly deleting a minimum-degree vertex).
struct NonComGraph {
    unsigned n = 0, q = 0;
    std::size_t group_order = 0;
    std::size_t center_order = 0;
    std::vector<std::uint32_t> element_of;
    std::vector<Bitset> adj;

    std::size_t vertex_count() const { return element_of.size(); }
    bool adjacent(std::size_t u, std::size_t v) const { return adj[u].test(v); }
    std::optional<std::size_t> vertex_of(std::uint32_t element) const;
};

NonComGraph build_graph(const GLGroup& G);

/// One cyclic element per distinct cyclic centralizer (group element indices).
/// Throws ConsistencyError if two of them commute.
std::vector<std::uint32_t> seed_clique(const GLGroup& G, const CentralizerCount& census);

/// Upper bound on the clique number from the abelian covering: a_n(q) for
/// q > n, the refined value for q = n > 2. UnsupportedRegime otherwise.
BigInt covering_upper_bound(unsigned n, unsigned q);

struct CliqueBudget {
    double seconds = 60.0;
    std::uint64_t steps = 1000000000;
};

struct CliqueResult {
    std::uint64_t size = 0;
    /// Group element indices, increasing.
    std::vector<std::uint32_t> witness;
    bool optimal = false;
    std::optional<std::uint64_t> upper_bound_used;
    std::uint64_t seed_size = 0;
    std::uint64_t steps = 0;
    bool searched = false;
};

/// Exact clique number of the full group. `seed` holds group elements and must
/// be pairwise non-commuting (DomainError otherwise). Returns at once with
/// optimal = true when the seed already meets `upper`.
CliqueResult max_clique(const NonComGraph& graph, const std::vector<std::uint32_t>& seed,
                        std::optional<std::uint64_t> upper, const CliqueBudget& budget = {});

/// True iff the vertices are pairwise adjacent.
bool verify_clique(const NonComGraph& graph, const std::vector<std::size_t>& vertices);
/// Same test on group elements, straight from matrix products.
bool verify_noncommuting(const GLGroup& G, const std::vector<std::uint32_t>& elements);

} // namespace glcover
