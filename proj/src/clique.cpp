#include "glcover/clique.hpp"

#include "glcover/census.hpp"
#include "glcover/error.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

namespace glcover {

std::size_t Bitset::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool Bitset::none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Bitset::next(std::size_t from) const {
    if (from >= bits_) return bits_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (w != 0) return std::min(bits_, (wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        if (++wi == words_.size()) return bits_;
        w = words_[wi];
    }
}

Bitset& Bitset::operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

Bitset& Bitset::subtract(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

std::optional<std::size_t> NonComGraph::vertex_of(std::uint32_t element) const {
    for (std::size_t v = 0; v < element_of.size(); ++v) {
        if (element_of[v] == element) return v;
    }
    return std::nullopt;
}

NonComGraph build_graph(const GLGroup& G) {
    const std::uint64_t steps = static_cast<std::uint64_t>(G.size()) * G.size();
    if (steps > G.budget().max_scan_steps) {
        throw BudgetExceeded("graph construction needs " + std::to_string(steps) + " commutation checks, over the budget of " +
                             std::to_string(G.budget().max_scan_steps));
    }
    NonComGraph g;
    g.n = G.n();
    g.q = G.field().q();
    g.group_order = G.size();
    const auto center = G.center();
    g.center_order = center.size();

    std::vector<std::uint32_t> elems;
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (!std::binary_search(center.begin(), center.end(), static_cast<std::uint32_t>(i))) {
            elems.push_back(static_cast<std::uint32_t>(i));
        }
    }
    const std::size_t V = elems.size();
    std::vector<Bitset> raw(V, Bitset(V));
    for (std::size_t i = 0; i < V; ++i) {
        for (std::size_t j = i + 1; j < V; ++j) {
            if (!G.commute(elems[i], elems[j])) {
                raw[i].set(j);
                raw[j].set(i);
            }
        }
    }

    // Degeneracy order: repeatedly remove a minimum-degree vertex (least
    // element index on ties); the last one removed becomes vertex 0.
    std::vector<std::size_t> degree(V);
    for (std::size_t i = 0; i < V; ++i) degree[i] = raw[i].count();
    std::vector<char> removed(V, 0);
    std::vector<std::size_t> removal;
    removal.reserve(V);
    for (std::size_t step = 0; step < V; ++step) {
        std::size_t best = V;
        for (std::size_t i = 0; i < V; ++i) {
            if (!removed[i] && (best == V || degree[i] < degree[best])) best = i;
        }
        removed[best] = 1;
        removal.push_back(best);
        for (std::size_t j = raw[best].next(0); j < V; j = raw[best].next(j + 1)) {
            if (!removed[j]) --degree[j];
        }
    }
    std::reverse(removal.begin(), removal.end());
    std::vector<std::size_t> new_index(V);
    for (std::size_t v = 0; v < V; ++v) new_index[removal[v]] = v;

    g.element_of.resize(V);
    g.adj.assign(V, Bitset(V));
    for (std::size_t v = 0; v < V; ++v) {
        const std::size_t old = removal[v];
        g.element_of[v] = elems[old];
        for (std::size_t j = raw[old].next(0); j < V; j = raw[old].next(j + 1)) g.adj[v].set(new_index[j]);
    }
    return g;
}

std::vector<std::uint32_t> seed_clique(const GLGroup& G, const CentralizerCount& census) {
    std::vector<std::uint32_t> seed = census.representatives;
    if (!verify_noncommuting(G, seed)) {
        throw ConsistencyError("cyclic centralizer representatives are not pairwise non-commuting");
    }
    return seed;
}

BigInt covering_upper_bound(unsigned n, unsigned q) { return omega_closed(n, q); }

namespace {

class Solver {
public:
    Solver(const NonComGraph& g, const CliqueBudget& budget, std::optional<std::uint64_t> upper)
        : g_(g), budget_(budget), upper_(upper), start_(std::chrono::steady_clock::now()) {}

    void run(std::vector<std::size_t> incumbent) {
        best_ = std::move(incumbent);
        Bitset all(g_.vertex_count());
        for (std::size_t v = 0; v < g_.vertex_count(); ++v) all.set(v);
        std::vector<std::size_t> current;
        expand(current, all);
    }

    const std::vector<std::size_t>& best() const { return best_; }
    bool aborted() const { return aborted_; }
    std::uint64_t steps() const { return steps_; }

private:
    bool out_of_budget() {
        if (steps_ >= budget_.steps) return true;
        if ((steps_ & 1023) == 0) {
            const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
            if (el.count() > budget_.seconds) return true;
        }
        return false;
    }

    void expand(std::vector<std::size_t>& current, Bitset P) {
        if (done_) return;
        ++steps_;
        if (out_of_budget()) {
            aborted_ = done_ = true;
            return;
        }
        // Greedy colouring into independent (pairwise commuting) classes.
        std::vector<std::size_t> order;
        std::vector<std::size_t> colour;
        Bitset uncoloured = P;
        std::size_t k = 0;
        const std::size_t V = g_.vertex_count();
        while (!uncoloured.none()) {
            ++k;
            Bitset Q = uncoloured;
            for (std::size_t v = Q.next(0); v < V; v = Q.next(v + 1)) {
                Q.subtract(g_.adj[v]);
                uncoloured.reset(v);
                order.push_back(v);
                colour.push_back(k);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current.size() + colour[i] <= best_.size()) return;
            const std::size_t v = order[i];
            current.push_back(v);
            Bitset NP = P;
            NP &= g_.adj[v];
            if (NP.none()) {
                if (current.size() > best_.size()) {
                    best_ = current;
                    if (upper_ && best_.size() >= *upper_) done_ = true;
                }
            } else {
                expand(current, std::move(NP));
            }
            current.pop_back();
            if (done_) return;
            P.reset(v);
        }
    }

    const NonComGraph& g_;
    CliqueBudget budget_;
    std::optional<std::uint64_t> upper_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::size_t> best_;
    std::uint64_t steps_ = 0;
    bool aborted_ = false;
    bool done_ = false;
};

} // namespace

CliqueResult max_clique(const NonComGraph& graph, const std::vector<std::uint32_t>& seed,
                        std::optional<std::uint64_t> upper, const CliqueBudget& budget) {
    CliqueResult r;
    r.seed_size = seed.size();
    r.upper_bound_used = upper;

    std::vector<std::size_t> seed_vertices;
    for (std::uint32_t e : seed) {
        auto v = graph.vertex_of(e);
        if (!v) {
            if (seed.size() > 1) throw DomainError("seed contains a central element");
            continue;
        }
        seed_vertices.push_back(*v);
    }
    if (!verify_clique(graph, seed_vertices)) throw DomainError("seed is not a clique");

    if (graph.vertex_count() == 0) {
        // Abelian group: any single element is a maximum non-commuting set.
        r.size = 1;
        r.witness = seed.empty() ? std::vector<std::uint32_t>{0} : std::vector<std::uint32_t>{seed.front()};
        r.optimal = true;
        return r;
    }
    if (upper && seed.size() >= *upper) {
        r.size = seed.size();
        r.witness = seed;
        std::sort(r.witness.begin(), r.witness.end());
        r.optimal = true;
        return r;
    }

    Solver s(graph, budget, upper);
    s.run(seed_vertices);
    r.searched = true;
    r.steps = s.steps();
    r.optimal = !s.aborted();
    for (std::size_t v : s.best()) r.witness.push_back(graph.element_of[v]);
    std::sort(r.witness.begin(), r.witness.end());
    r.size = r.witness.size();
    if (r.size == 0) {
        // Non-abelian group but no seed and no search progress: one vertex is a clique.
        r.witness = {graph.element_of[0]};
        r.size = 1;
    }
    return r;
}

bool verify_clique(const NonComGraph& graph, const std::vector<std::size_t>& vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= graph.vertex_count()) return false;
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (vertices[i] == vertices[j] || !graph.adjacent(vertices[i], vertices[j])) return false;
        }
    }
    return true;
}

bool verify_noncommuting(const GLGroup& G, const std::vector<std::uint32_t>& elements) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] >= G.size()) return false;
        const FqMatrix a = G.element(elements[i]);
        for (std::size_t j = i + 1; j < elements.size(); ++j) {
            if (mat_commute(G.field(), a, G.element(elements[j]))) return false;
        }
    }
    return true;
}

} // namespace glcover
