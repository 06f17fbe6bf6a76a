#include "glcover/oracle.hpp"

#include "glcover/error.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

namespace glcover {

namespace {

std::uint64_t checked_pow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > UINT64_MAX / b) return UINT64_MAX;
        r *= b;
    }
    return r;
}

// Runs body(i) for i in [begin, end) on up to `threads` workers. Each index is
// handled exactly once, so results written per index do not depend on the
// thread count.
template <class Body>
void parallel_for(std::size_t begin, std::size_t end, unsigned threads, Body body) {
    if (threads <= 1 || end - begin < 256) {
        for (std::size_t i = begin; i < end; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (end - begin + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = begin + t * chunk;
        const std::size_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace

GLGroup GLGroup::enumerate(unsigned n, unsigned q, const Budget& budget) {
    if (n == 0) throw DomainError("enumerate_gl needs n >= 1");
    GLGroup G(n, q, budget);
    std::uint64_t order = 1;
    for (unsigned i = 0; i < n; ++i) {
        const std::uint64_t qn = checked_pow(q, n), qi = checked_pow(q, i);
        if (qn == UINT64_MAX || order > UINT64_MAX / (qn - qi)) {
            order = UINT64_MAX;
            break;
        }
        order *= qn - qi;
    }
    if (order > budget.max_elements) {
        throw BudgetExceeded("|GL_" + std::to_string(n) + "(" + std::to_string(q) + ")| = " +
                             (order == UINT64_MAX ? std::string("overflow") : std::to_string(order)) +
                             " exceeds the element budget " + std::to_string(budget.max_elements) +
                             "; a budget of at least that many elements is required");
    }
    const std::uint64_t candidates = checked_pow(q, n * n);
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    G.data_.reserve(order * nn);
    G.codes_.reserve(order);

    FqMatrix m(n);
    for (std::uint64_t code = 0; code < candidates; ++code) {
        if (code != 0) {
            // increment the base-q digit string, last entry least significant
            for (std::size_t k = nn; k-- > 0;) {
                if (++m.a[k] < q) break;
                m.a[k] = 0;
            }
        }
        if (mat_rank(G.field_, m) == n) {
            G.data_.insert(G.data_.end(), m.a.begin(), m.a.end());
            G.codes_.push_back(code);
        }
    }
    if (G.codes_.size() != order) throw ConsistencyError("enumerated element count does not match |GL_n(q)|");

    G.identity_ = G.require_index(FqMatrix::identity(n));
    G.cyclic_.assign(G.size(), 0);
    parallel_for(0, G.size(), budget.threads, [&G](std::size_t i) {
        G.cyclic_[i] = ::glcover::is_cyclic(G.field_, G.element(i)) ? 1 : 0;
    });
    return G;
}

std::uint64_t GLGroup::code_of(const FqElem* e) const {
    std::uint64_t code = 0;
    const unsigned q = field_.q();
    for (std::size_t k = 0; k < static_cast<std::size_t>(n_) * n_; ++k) code = code * q + e[k];
    return code;
}

FqMatrix GLGroup::element(std::size_t i) const {
    const std::size_t nn = static_cast<std::size_t>(n_) * n_;
    const FqElem* e = entries(i);
    return FqMatrix(n_, std::vector<FqElem>(e, e + nn));
}

std::optional<std::size_t> GLGroup::index_of(const FqMatrix& m) const {
    if (m.n != n_) return std::nullopt;
    for (FqElem e : m.a) {
        if (e >= field_.q()) return std::nullopt;
    }
    const std::uint64_t code = code_of(m.a.data());
    auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    if (it == codes_.end() || *it != code) return std::nullopt;
    return static_cast<std::size_t>(it - codes_.begin());
}

std::size_t GLGroup::require_index(const FqMatrix& m) const {
    auto i = index_of(m);
    if (!i) throw ConsistencyError("matrix is not an element of the enumerated group");
    return *i;
}

std::size_t GLGroup::multiply(std::size_t i, std::size_t j) const {
    const unsigned n = n_;
    const FqElem* x = entries(i);
    const FqElem* y = entries(j);
    FqElem buf[256];
    for (unsigned r = 0; r < n; ++r) {
        for (unsigned c = 0; c < n; ++c) {
            FqElem s = 0;
            for (unsigned k = 0; k < n; ++k) s = field_.add(s, field_.mul(x[r * n + k], y[k * n + c]));
            buf[r * n + c] = s;
        }
    }
    const std::uint64_t code = code_of(buf);
    auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    if (it == codes_.end() || *it != code) throw ConsistencyError("product left the group");
    return static_cast<std::size_t>(it - codes_.begin());
}

std::size_t GLGroup::inverse(std::size_t i) const {
    auto inv = mat_inverse(field_, element(i));
    if (!inv) throw ConsistencyError("group element is singular");
    return require_index(*inv);
}

bool GLGroup::commute(std::size_t i, std::size_t j) const {
    const unsigned n = n_;
    const FqElem* x = entries(i);
    const FqElem* y = entries(j);
    for (unsigned r = 0; r < n; ++r) {
        for (unsigned c = 0; c < n; ++c) {
            FqElem s = 0, t = 0;
            for (unsigned k = 0; k < n; ++k) {
                s = field_.add(s, field_.mul(x[r * n + k], y[k * n + c]));
                t = field_.add(t, field_.mul(y[r * n + k], x[k * n + c]));
            }
            if (s != t) return false;
        }
    }
    return true;
}

std::uint64_t GLGroup::cyclic_count() const {
    return static_cast<std::uint64_t>(std::count(cyclic_.begin(), cyclic_.end(), std::uint8_t{1}));
}

std::vector<std::uint32_t> GLGroup::center() const {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
        const FqMatrix m = element(i);
        bool scalar = true;
        for (unsigned r = 0; r < n_ && scalar; ++r) {
            for (unsigned c = 0; c < n_; ++c) {
                if ((r == c && m(r, c) != m(0, 0)) || (r != c && m(r, c) != 0)) {
                    scalar = false;
                    break;
                }
            }
        }
        if (scalar) out.push_back(static_cast<std::uint32_t>(i));
    }
    return out;
}

bool CentralizerSet::contains(std::uint32_t i) const { return std::binary_search(members.begin(), members.end(), i); }

CentralizerSet centralizer(const GLGroup& G, std::size_t element) {
    CentralizerSet C;
    for (std::size_t h = 0; h < G.size(); ++h) {
        if (G.commute(element, h)) C.members.push_back(static_cast<std::uint32_t>(h));
    }
    return C;
}

bool is_abelian(const GLGroup& G, const CentralizerSet& C) {
    for (std::size_t i = 0; i < C.members.size(); ++i) {
        for (std::size_t j = i + 1; j < C.members.size(); ++j) {
            if (!G.commute(C.members[i], C.members[j])) return false;
        }
    }
    return true;
}

ProportionReport cyclic_proportion(const GLGroup& G) {
    ProportionReport r;
    r.cyclic = G.cyclic_count();
    r.total = G.size();
    r.proportion = make_rational(BigInt(static_cast<unsigned long>(r.cyclic)), BigInt(static_cast<unsigned long>(r.total)));
    const BigRational q(G.field().q());
    const BigRational x = 1 / q;
    BigRational xn = 1;
    for (unsigned i = 0; i < G.n(); ++i) xn *= x;
    const BigRational x3 = x * x * x, x5 = x3 * x * x, x6 = x5 * x;
    r.bound_ratio = (1 - x5) / (1 + x3) - xn / (q - 1);
    r.bound_poly = 1 - x3 - x5 + x6 - xn;
    r.ratio_holds = r.proportion >= r.bound_ratio;
    r.poly_holds = r.proportion > r.bound_poly;
    return r;
}

CentralizerCount count_cyclic_centralizers(const GLGroup& G) {
    const std::uint64_t steps = static_cast<std::uint64_t>(G.size()) * G.size();
    if (steps > G.budget().max_scan_steps) {
        throw BudgetExceeded("centralizer scan needs " + std::to_string(steps) + " steps, over the budget of " +
                             std::to_string(G.budget().max_scan_steps));
    }
    CentralizerCount out;
    out.cyclic_total = G.cyclic_count();

    std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_hash;
    const std::size_t block = 1024;
    std::vector<CentralizerSet> pending;
    for (std::size_t start = 0; start < G.size(); start += block) {
        const std::size_t end = std::min(G.size(), start + block);
        pending.assign(end - start, {});
        parallel_for(start, end, G.budget().threads, [&](std::size_t g) {
            if (G.is_cyclic(g)) pending[g - start] = centralizer(G, g);
        });
        // Sequential merge in element order.
        for (std::size_t g = start; g < end; ++g) {
            if (!G.is_cyclic(g)) continue;
            CentralizerSet& C = pending[g - start];
            std::uint64_t h = 1469598103934665603ULL;
            for (std::uint32_t v : C.members) h = (h ^ v) * 1099511628211ULL;
            auto& bucket = by_hash[h];
            bool found = false;
            for (std::size_t id : bucket) {
                if (out.sets[id] == C) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                bucket.push_back(out.sets.size());
                out.sets.push_back(std::move(C));
            }
        }
    }

    std::vector<std::uint32_t> owner_count(G.size(), 0);
    const std::uint64_t qn = checked_pow(G.field().q(), G.n());
    out.all_abelian = true;
    out.orders_bounded = true;
    std::vector<std::pair<std::uint32_t, std::size_t>> reps;
    for (std::size_t s = 0; s < out.sets.size(); ++s) {
        const auto& C = out.sets[s];
        std::uint32_t rep = UINT32_MAX;
        for (std::uint32_t v : C.members) {
            if (!G.is_cyclic(v)) continue;
            ++owner_count[v];
            ++out.cyclic_in_sets;
            rep = std::min(rep, v);
        }
        reps.emplace_back(rep, s);
        if (C.order() > qn) out.orders_bounded = false;
        if (!is_abelian(G, C)) out.all_abelian = false;
    }
    out.partition = out.cyclic_in_sets == out.cyclic_total;
    for (std::size_t g = 0; g < G.size(); ++g) {
        if (G.is_cyclic(g) && owner_count[g] != 1) out.partition = false;
    }
    std::sort(reps.begin(), reps.end());
    std::vector<CentralizerSet> sorted;
    sorted.reserve(out.sets.size());
    for (const auto& [rep, s] : reps) {
        out.representatives.push_back(rep);
        sorted.push_back(std::move(out.sets[s]));
    }
    out.sets = std::move(sorted);
    out.count = out.sets.size();
    return out;
}

std::uint64_t normalizer_order(const GLGroup& G, const CentralizerSet& C) {
    std::vector<std::uint8_t> member(G.size(), 0);
    for (std::uint32_t v : C.members) member[v] = 1;
    std::vector<std::uint8_t> normalizes(G.size(), 0);
    parallel_for(0, G.size(), G.budget().threads, [&](std::size_t g) {
        const std::size_t ginv = G.inverse(g);
        for (std::uint32_t c : C.members) {
            if (!member[G.multiply(G.multiply(g, c), ginv)]) return;
        }
        normalizes[g] = 1;
    });
    return static_cast<std::uint64_t>(std::count(normalizes.begin(), normalizes.end(), std::uint8_t{1}));
}

BlockCheck indecomposable_check(const GLGroup& G, const FqPoly& f, unsigned m) {
    const unsigned d = static_cast<unsigned>(f.degree());
    if (f.degree() < 1 || d * m != G.n()) throw DomainError("indecomposable_check needs deg(f) * m == n");
    BlockCheck r;
    r.f = f;
    r.m = m;
    const std::size_t g = G.require_index(jm_block(G.field(), f, m));
    r.cyclic = G.is_cyclic(g);
    const CentralizerSet C = centralizer(G, g);
    r.centralizer_order = C.order();
    r.abelian = is_abelian(G, C);
    r.normalizer_order = normalizer_order(G, C);
    const std::uint64_t q = G.field().q();
    const std::uint64_t qd1 = checked_pow(q, d) - 1;
    r.expected_centralizer = qd1 * checked_pow(q, d * (m - 1));
    r.expected_normalizer = m == 1 ? d * qd1 : d * qd1 * qd1 * checked_pow(q, 2 * d * m - 3 * d);
    return r;
}

RemarkCheck remark_matrix_check(const GLGroup& G) {
    if (G.n() != 4 || G.field().q() != 2) throw DomainError("the remark matrix lives in GL_4(2)");
    RemarkCheck r;
    r.x = FqMatrix(4, {1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1});
    const std::size_t x = G.require_index(r.x);
    const CentralizerSet C = centralizer(G, x);
    r.centralizer_order = C.order();
    r.shape_matches = true;
    for (std::uint32_t v : C.members) {
        if (G.is_cyclic(v)) ++r.cyclic_members;
        const FqMatrix c = G.element(v);
        const bool fixed = c(0, 0) == 1 && c(0, 1) == 0 && c(0, 2) == 0 && c(1, 1) == 1 && c(2, 0) == 0 &&
                           c(2, 1) == 0 && c(2, 2) == 1 && c(3, 0) == 0 && c(3, 1) == 0 && c(3, 2) == 0 &&
                           c(3, 3) == 1 && c(1, 2) == c(2, 3);
        if (!fixed) r.shape_matches = false;
    }
    for (std::size_t g = 0; g < G.size(); ++g) {
        if (G.is_cyclic(g) && G.commute(g, x)) {
            r.in_cyclic_centralizer = true;
            break;
        }
    }
    return r;
}

std::vector<JmCheck> jm_checks(unsigned q, unsigned max_degree, unsigned max_m) {
    const Field F(q);
    std::vector<JmCheck> out;
    for (unsigned d = 1; d <= max_degree; ++d) {
        for (const FqPoly& f : F.monic_irreducibles(d)) {
            if (d == 1 && f.c[0] == 0) continue; // t is singular
            for (unsigned m = 1; m <= max_m; ++m) {
                JmCheck c;
                c.q = q;
                c.f = f;
                c.m = m;
                const FqMatrix J = jm_block(F, f, m);
                c.min_poly = min_poly(F, J);
                c.expected = F.poly_pow(f, m);
                c.char_matches = char_poly(F, J) == c.expected;
                out.push_back(std::move(c));
            }
        }
    }
    return out;
}

} // namespace glcover
