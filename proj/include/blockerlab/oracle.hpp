#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "blockerlab/colouring.hpp"
#include "blockerlab/enumerate.hpp"
#include "blockerlab/graph.hpp"
#include "blockerlab/instances.hpp"
#include "blockerlab/parameters.hpp"

namespace blockerlab {

enum class Operation { contract, delete_vertices, delete_edges };

inline std::string to_string(Operation op) {
    switch (op) {
        case Operation::contract: return "contract";
        case Operation::delete_vertices: return "delete-vertices";
        case Operation::delete_edges: return "delete-edges";
    }
    return "?";
}

inline Operation parse_operation(const std::string& s) {
    if (s == "contract") return Operation::contract;
    if (s == "delete-vertices") return Operation::delete_vertices;
    if (s == "delete-edges") return Operation::delete_edges;
    throw InvalidInput("unknown operation '" + s + "'");
}

/// Does the operation act on edges (contract, delete-edges) or vertices?
inline bool acts_on_edges(Operation op) { return op != Operation::delete_vertices; }

struct BlockerQuery {
    Graph graph;
    Operation op = Operation::contract;
    Param param = Param::alpha;
    int k = 0;
    int d = 1;
};

/// Result of an exhaustive blocker search. The witness sits in `edges` or
/// `vertices` depending on the operation and is a minimum-size success,
/// first in size-then-lexicographic order.
struct OracleAnswer {
    bool yes = false;
    EdgeSet edges;
    VertexSet vertices;
    int before = 0;
    int after = 0;
    bool minimal = false;
};

inline void require_blocker_param(Param p) {
    if (p != Param::alpha && p != Param::omega && p != Param::chi)
        throw InvalidInput("blocker parameter must be alpha, omega or chi");
}

/// The graph after applying the operation to a set of edges or vertices.
inline Graph apply_operation(const Graph& g, Operation op, const EdgeSet& edges, const VertexSet& vertices) {
    switch (op) {
        case Operation::contract: return contract_edges(g, edges).graph;
        case Operation::delete_edges: return delete_edges(g, edges);
        case Operation::delete_vertices: return delete_vertices(g, vertices).graph;
    }
    return g;
}

namespace detail {

inline int mask_param(const std::vector<std::uint64_t>& adj, Param p) {
    switch (p) {
        case Param::alpha: return mask_alpha(adj);
        case Param::omega: return mask_omega(adj);
        default: return mask_chi(adj);
    }
}

/// Evaluates the parameter after applying the operation to an index subset,
/// on word masks. Stateless, so one evaluator serves all threads.
class MaskEvaluator {
public:
    MaskEvaluator(const Graph& g, Operation op, Param p) : op_(op), param_(p), edges_(g.edges()), adj_(g.adjacency_masks()) {}

    int operator()(const std::vector<int>& chosen) const {
        const int n = static_cast<int>(adj_.size());
        std::vector<std::uint64_t> work;
        if (op_ == Operation::delete_edges) {
            work = adj_;
            for (int i : chosen) {
                const auto& e = edges_[static_cast<std::size_t>(i)];
                work[static_cast<std::size_t>(e.u)] &= ~(std::uint64_t{1} << e.v);
                work[static_cast<std::size_t>(e.v)] &= ~(std::uint64_t{1} << e.u);
            }
            return mask_param(work, param_);
        }
        if (op_ == Operation::delete_vertices) {
            std::uint64_t gone = 0;
            for (int v : chosen) gone |= std::uint64_t{1} << v;
            work.clear();
            for (int v = 0; v < n; ++v) {
                if (gone >> v & 1) continue;
                std::uint64_t row = adj_[static_cast<std::size_t>(v)] & ~gone, packed = 0;
                int bit = 0;
                for (int u = 0; u < n; ++u) {
                    if (gone >> u & 1) continue;
                    if (row >> u & 1) packed |= std::uint64_t{1} << bit;
                    ++bit;
                }
                work.push_back(packed);
            }
            return mask_param(work, param_);
        }
        // Contraction: union-find over the chosen edges, then quotient masks.
        std::vector<int> parent(static_cast<std::size_t>(n)), label;
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            return x;
        };
        for (int i : chosen) {
            const auto& e = edges_[static_cast<std::size_t>(i)];
            int a = find(e.u), b = find(e.v);
            if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
        label.assign(static_cast<std::size_t>(n), -1);
        int count = 0;
        for (int v = 0; v < n; ++v) {
            int r = find(v);
            if (label[static_cast<std::size_t>(r)] == -1) label[static_cast<std::size_t>(r)] = count++;
            label[static_cast<std::size_t>(v)] = label[static_cast<std::size_t>(r)];
        }
        work.assign(static_cast<std::size_t>(count), 0);
        for (const auto& e : edges_) {
            int a = label[static_cast<std::size_t>(e.u)], b = label[static_cast<std::size_t>(e.v)];
            if (a == b) continue;
            work[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
            work[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
        }
        return mask_param(work, param_);
    }

private:
    Operation op_;
    Param param_;
    EdgeSet edges_;
    std::vector<std::uint64_t> adj_;
};

/// Supersets of a success succeed again for these operation/parameter pairs.
inline bool success_is_monotone(Operation op, Param p) {
    if (op == Operation::delete_vertices) return true;
    if (op == Operation::delete_edges) return true;  // alpha never drops; omega, chi only drop
    return p == Param::alpha;
}

}  // namespace detail

/// Exhaustive search for a set of at most k edges (vertices) whose
/// contraction or deletion lowers the parameter by at least d.
inline OracleAnswer brute_blocker(const BlockerQuery& q, Budget& budget, int threads = 1) {
    require_blocker_param(q.param);
    if (q.k < 0) throw InvalidInput("k must be non-negative");
    if (q.d < 1) throw InvalidInput("d must be at least 1");
    const Graph& g = q.graph;
    int cap = q.param == Param::chi ? kExactChiCap : kExactCliqueCap;
    if (g.order() > cap) throw CapacityExceeded("oracle limited to " + std::to_string(cap) + " vertices for " + to_string(q.param));
    OracleAnswer out;
    out.before = detail::mask_param(g.adjacency_masks(), q.param);
    const int target = out.before - q.d;
    const bool on_edges = acts_on_edges(q.op);
    const int m = on_edges ? g.size() : g.order();
    auto edges = g.edges();

    const detail::MaskEvaluator eval(g, q.op, q.param);
    auto pred = [&](const std::vector<int>& c) { return eval(c) <= target; };
    auto found = first_success_up_to(m, q.k, pred, detail::success_is_monotone(q.op, q.param), budget, threads);
    if (!found) {
        out.after = out.before;
        return out;
    }
    out.yes = true;
    out.minimal = true;
    if (on_edges)
        for (int i : *found) out.edges.push_back(edges[static_cast<std::size_t>(i)]);
    else
        out.vertices.assign(found->begin(), found->end());
    out.after = eval(*found);
    return out;
}

inline OracleAnswer brute_blocker(const BlockerQuery& q, std::uint64_t budget = 10'000'000, int threads = 1) {
    Budget b(budget);
    return brute_blocker(q, b, threads);
}

// ---------------------------------------------------------------------------
// Criticality

inline int parameter_after(const Graph& g, Operation op, Param p, const EdgeSet& edges, const VertexSet& vertices) {
    return parameter_value(apply_operation(g, op, edges, vertices), p);
}

/// pi(G/S) < pi(G).
inline bool is_contraction_critical(const Graph& g, const EdgeSet& s, Param p) {
    require_edges(g, s);
    return parameter_value(contract_edges(g, s).graph, p) < parameter_value(g, p);
}

/// pi(G - U) < pi(G).
inline bool is_deletion_critical(const Graph& g, const VertexSet& u, Param p) {
    require_vertices(g, u);
    return parameter_value(delete_vertices(g, u).graph, p) < parameter_value(g, p);
}

/// Critical with no critical proper subset. For alpha, criticality is
/// upward closed, so checking the sets S - e suffices; otherwise every
/// proper subset is tried.
inline bool is_minimal_critical(const Graph& g, const EdgeSet& s, Param p) {
    auto set = normalized(s);
    if (!is_contraction_critical(g, set, p)) return false;
    const int m = static_cast<int>(set.size());
    if (p == Param::alpha) {
        for (int i = 0; i < m; ++i) {
            EdgeSet smaller = set;
            smaller.erase(smaller.begin() + i);
            if (is_contraction_critical(g, smaller, p)) return false;
        }
        return true;
    }
    if (m > 20) throw CapacityExceeded("minimality check over all subsets limited to 20 edges");
    for (std::uint32_t mask = 0; mask + 1 < (std::uint32_t{1} << m); ++mask) {
        EdgeSet sub;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) sub.push_back(set[static_cast<std::size_t>(i)]);
        if (is_contraction_critical(g, sub, p)) return false;
    }
    return true;
}

/// Every inclusion-minimal alpha-contraction-critical edge set. Grows sets
/// in increasing edge order through non-critical sets only, which reaches
/// every minimal critical set because all its proper subsets are
/// non-critical.
inline std::vector<EdgeSet> minimal_critical_contraction_sets(const Graph& g, Budget& budget) {
    if (g.order() > kExactCliqueCap) throw CapacityExceeded("oracle limited to 40 vertices");
    auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    detail::MaskEvaluator eval(g, Operation::contract, Param::alpha);
    const int base = eval({});
    std::vector<EdgeSet> out;
    std::vector<int> chosen;
    auto critical = [&](const std::vector<int>& c) {
        budget.admit(1, "minimal critical set search");
        budget.charge(1);
        return eval(c) < base;
    };
    auto rec = [&](auto&& self, int from) -> void {
        for (int e = from; e < m; ++e) {
            chosen.push_back(e);
            if (critical(chosen)) {
                bool minimal = true;
                for (std::size_t drop = 0; drop + 1 < chosen.size() && minimal; ++drop) {
                    std::vector<int> smaller;
                    for (std::size_t j = 0; j < chosen.size(); ++j)
                        if (j != drop) smaller.push_back(chosen[j]);
                    minimal = !critical(smaller);
                }
                if (minimal) {
                    EdgeSet s;
                    for (int i : chosen) s.push_back(edges[static_cast<std::size_t>(i)]);
                    out.push_back(s);
                }
            } else {
                self(self, e + 1);
            }
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Colourings and partitions

/// Calls f on every colouring of n vertices with at most h colours, up to
/// renaming colours: restricted growth strings, vertex 0 always colour 0.
template <class F>
void for_each_colouring(int n, int h, F&& f) {
    if (n == 0) {
        f(std::vector<int>{});
        return;
    }
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int v, int opened) -> void {
        if (v == n) {
            f(c);
            return;
        }
        for (int x = 0; x < std::min(opened + 1, h); ++x) {
            c[static_cast<std::size_t>(v)] = x;
            self(self, v + 1, std::max(opened, x + 1));
        }
    };
    c[0] = 0;
    rec(rec, 1, 1);
}

inline std::uint64_t checked_power(int base, int exp, const std::string& what, const Budget& budget) {
    std::uint64_t total = 1;
    for (int i = 0; i < exp; ++i) {
        if (total > budget.limit() / static_cast<std::uint64_t>(std::max(base, 1)))
            throw CapacityExceeded(what + " exceeds the budget of " + std::to_string(budget.limit()));
        total *= static_cast<std::uint64_t>(std::max(base, 1));
    }
    budget.admit(total, what);
    return total;
}

struct MonoResult {
    int count = 0;
    Colouring colouring;
};

/// Minimum monochromatic edges over all h-colourings, by branch and bound
/// over restricted growth strings (vertex 0 in the first colour class).
inline MonoResult brute_min_mono(const Graph& g, int h, Budget& budget) {
    if (h < 1) throw InvalidInput("h must be at least 1");
    const int n = g.order();
    budget.charge(checked_power(h, std::max(n - 1, 0), "colouring enumeration", budget));
    MonoResult best{std::numeric_limits<int>::max(), {std::vector<int>(static_cast<std::size_t>(n), 0), h}};
    if (n == 0) return {0, {{}, h}};
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    auto nbrs = std::vector<std::vector<Vertex>>(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.neighbour_list(v))
            if (u < v) nbrs[static_cast<std::size_t>(v)].push_back(u);
    auto rec = [&](auto&& self, int v, int opened, int mono) -> void {
        if (mono >= best.count) return;
        if (v == n) {
            best.count = mono;
            best.colouring.colour = c;
            return;
        }
        for (int x = 0; x < std::min(opened + 1, h); ++x) {
            int add = 0;
            for (Vertex u : nbrs[static_cast<std::size_t>(v)]) add += c[static_cast<std::size_t>(u)] == x ? 1 : 0;
            c[static_cast<std::size_t>(v)] = x;
            self(self, v + 1, std::max(opened, x + 1), mono + add);
        }
    };
    rec(rec, 1, 1, 0);
    return best;
}

inline MonoResult brute_min_mono(const Graph& g, int h, std::uint64_t budget = 10'000'000) {
    Budget b(budget);
    return brute_min_mono(g, h, b);
}

struct MssResult {
    long long best = 0;
    std::vector<std::vector<int>> parts;  ///< h groups of 0-based indices, possibly empty
};

/// Minimum sum of squared group totals over all splits into at most h groups.
inline MssResult brute_mss(const MssInstance& mss, Budget& budget) {
    validate(mss);
    const int l = static_cast<int>(mss.a.size());
    budget.charge(checked_power(mss.h, l - 1, "partition enumeration", budget));
    MssResult best{std::numeric_limits<long long>::max(), {}};
    for_each_colouring(l, mss.h, [&](const std::vector<int>& c) {
        std::vector<long long> total(static_cast<std::size_t>(mss.h), 0);
        for (int j = 0; j < l; ++j) total[static_cast<std::size_t>(c[static_cast<std::size_t>(j)])] += mss.a[static_cast<std::size_t>(j)];
        long long sum = 0;
        for (auto t : total) sum += t * t;
        if (sum < best.best) {
            best.best = sum;
            best.parts.assign(static_cast<std::size_t>(mss.h), {});
            for (int j = 0; j < l; ++j) best.parts[static_cast<std::size_t>(c[static_cast<std::size_t>(j)])].push_back(j);
        }
    });
    return best;
}

inline MssResult brute_mss(const MssInstance& mss, std::uint64_t budget = 10'000'000) {
    Budget b(budget);
    return brute_mss(mss, b);
}

/// Smallest vertex cover by increasing size.
inline VertexSet brute_min_vertex_cover(const Graph& g, std::uint64_t budget = 10'000'000) {
    Budget b(budget);
    auto pred = [&](const std::vector<int>& c) { return is_vertex_cover(g, c); };
    auto r = first_success_up_to(g.order(), g.order(), pred, true, b);
    return VertexSet(r->begin(), r->end());
}

/// Smallest set of true variables satisfying every clause.
inline std::vector<int> brute_min_sat(const SatInstance& s, std::uint64_t budget = 10'000'000) {
    Budget b(budget);
    auto pred = [&](const std::vector<int>& c) { return is_satisfying(s, c); };
    auto r = first_success_up_to(s.variables, s.variables, pred, true, b);
    return *r;
}

}  // namespace blockerlab
