#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "blockerlab/errors.hpp"

namespace blockerlab {

using Vertex = int;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Sorted, duplicate-free vertex list.
using VertexSet = std::vector<Vertex>;
/// Sorted, duplicate-free edge list.
using EdgeSet = std::vector<Edge>;

inline VertexSet normalized(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline EdgeSet normalized(EdgeSet s) {
    for (auto& e : s) e = make_edge(e.u, e.v);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

/// Undirected simple graph on vertices 0..n-1 with bitset adjacency.
///
/// Adjacency is kept symmetric and loop-free by every mutator; all derived
/// graphs in this library are built through add_edge.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : adj_(checked_order(n), Bitset(checked_order(n))) {}

    Graph(int n, std::span<const Edge> edges) : Graph(n) {
        for (const auto& e : edges) add_edge(e.u, e.v);
    }

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    int size() const noexcept { return edge_count_; }

    bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

    bool adjacent(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
    }

    const Bitset& neighbours(Vertex v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    std::vector<Vertex> neighbour_list(Vertex v) const {
        std::vector<Vertex> out;
        const auto& row = neighbours(v);
        for (auto i = row.find_first(); i != Bitset::npos; i = row.find_next(i))
            out.push_back(static_cast<Vertex>(i));
        return out;
    }

    int degree(Vertex v) const { return static_cast<int>(neighbours(v).count()); }

    /// Adds uv; rejects loops, out-of-range endpoints and parallel edges.
    void add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
        auto& row = adj_[static_cast<std::size_t>(u)];
        if (row.test(static_cast<std::size_t>(v)))
            throw InvalidInput("parallel edge " + std::to_string(u) + " " + std::to_string(v));
        row.set(static_cast<std::size_t>(v));
        adj_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
        ++edge_count_;
    }

    /// Adds uv unless present.
    void ensure_edge(Vertex u, Vertex v) {
        if (!adjacent(u, v)) add_edge(u, v);
    }

    bool has_edge(const Edge& e) const {
        return contains(e.u) && contains(e.v) && e.u != e.v && adjacent(e.u, e.v);
    }

    EdgeSet edges() const {
        EdgeSet out;
        out.reserve(static_cast<std::size_t>(edge_count_));
        for (Vertex u = 0; u < order(); ++u) {
            const auto& row = adj_[static_cast<std::size_t>(u)];
            for (auto i = row.find_next(static_cast<std::size_t>(u)); i != Bitset::npos; i = row.find_next(i))
                out.push_back({u, static_cast<Vertex>(i)});
        }
        return out;
    }

    /// Word-sized adjacency rows; only valid for n <= 64.
    std::vector<std::uint64_t> adjacency_masks() const {
        if (order() > 64) throw CapacityExceeded("adjacency masks need n <= 64");
        std::vector<std::uint64_t> out(adj_.size(), 0);
        for (std::size_t v = 0; v < adj_.size(); ++v)
            for (auto i = adj_[v].find_first(); i != Bitset::npos; i = adj_[v].find_next(i))
                out[v] |= std::uint64_t{1} << i;
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    static std::size_t checked_order(int n) {
        if (n < 0) throw InvalidInput("negative vertex count");
        return static_cast<std::size_t>(n);
    }

    void check_vertex(Vertex v) const {
        if (!contains(v)) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    }

    std::vector<Bitset> adj_;
    int edge_count_ = 0;
};

// ---------------------------------------------------------------------------
// Set predicates

inline void require_vertices(const Graph& g, std::span<const Vertex> vs) {
    for (Vertex v : vs)
        if (!g.contains(v)) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
}

inline void require_edges(const Graph& g, std::span<const Edge> es) {
    for (const auto& e : es)
        if (!g.has_edge(e))
            throw InvalidInput("pair " + std::to_string(e.u) + " " + std::to_string(e.v) + " is not an edge");
}

inline bool is_independent(const Graph& g, std::span<const Vertex> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j] || g.adjacent(vs[i], vs[j])) return false;
    return true;
}

inline bool is_clique(const Graph& g, std::span<const Vertex> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j] || !g.adjacent(vs[i], vs[j])) return false;
    return true;
}

inline bool is_vertex_cover(const Graph& g, std::span<const Vertex> vs) {
    Bitset in(static_cast<std::size_t>(g.order()));
    for (Vertex v : vs) in.set(static_cast<std::size_t>(v));
    for (const auto& e : g.edges())
        if (!in.test(static_cast<std::size_t>(e.u)) && !in.test(static_cast<std::size_t>(e.v))) return false;
    return true;
}

/// Edges of g, pairwise vertex-disjoint.
inline bool is_matching(const Graph& g, std::span<const Edge> es) {
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    for (const auto& e : es) {
        if (!g.has_edge(e)) return false;
        if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)]) return false;
        used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
    }
    return true;
}

/// V(S): endpoints of the edges in s.
inline VertexSet edge_endpoints(std::span<const Edge> s) {
    VertexSet out;
    for (const auto& e : s) {
        out.push_back(e.u);
        out.push_back(e.v);
    }
    return normalized(std::move(out));
}

/// Open neighbourhood N(U) (vertices of U excluded).
inline VertexSet open_neighbourhood(const Graph& g, std::span<const Vertex> vs) {
    Bitset acc(static_cast<std::size_t>(g.order()));
    for (Vertex v : vs) acc |= g.neighbours(v);
    for (Vertex v : vs) acc.reset(static_cast<std::size_t>(v));
    VertexSet out;
    for (auto i = acc.find_first(); i != Bitset::npos; i = acc.find_next(i)) out.push_back(static_cast<Vertex>(i));
    return out;
}

// ---------------------------------------------------------------------------
// Connectivity

/// Component label per vertex; labels are numbered by smallest member.
struct Components {
    std::vector<int> label;
    int count = 0;

    std::vector<VertexSet> members() const {
        std::vector<VertexSet> out(static_cast<std::size_t>(count));
        for (std::size_t v = 0; v < label.size(); ++v)
            out[static_cast<std::size_t>(label[v])].push_back(static_cast<Vertex>(v));
        return out;
    }
};

inline Components connected_components(const Graph& g) {
    Components c;
    c.label.assign(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (c.label[static_cast<std::size_t>(s)] != -1) continue;
        c.label[static_cast<std::size_t>(s)] = c.count;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            const auto& row = g.neighbours(v);
            for (auto i = row.find_first(); i != Bitset::npos; i = row.find_next(i)) {
                if (c.label[i] == -1) {
                    c.label[i] = c.count;
                    stack.push_back(static_cast<Vertex>(i));
                }
            }
        }
        ++c.count;
    }
    return c;
}

inline bool is_connected(const Graph& g) { return connected_components(g).count <= 1; }

inline bool is_forest(const Graph& g) { return g.size() == g.order() - connected_components(g).count; }

// ---------------------------------------------------------------------------
// Derived graphs

/// A graph obtained from a host by deleting vertices; maps in both directions.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> old_to_new;  ///< -1 for deleted vertices
    std::vector<Vertex> new_to_old;
};

/// G[keep]; vertices keep their relative order.
inline Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    require_vertices(g, keep);
    Subgraph out;
    out.new_to_old = normalized(VertexSet(keep.begin(), keep.end()));
    out.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < out.new_to_old.size(); ++i)
        out.old_to_new[static_cast<std::size_t>(out.new_to_old[i])] = static_cast<Vertex>(i);
    out.graph = Graph(static_cast<int>(out.new_to_old.size()));
    for (std::size_t i = 0; i < out.new_to_old.size(); ++i) {
        const auto& row = g.neighbours(out.new_to_old[i]);
        for (auto j = row.find_first(); j != Bitset::npos; j = row.find_next(j)) {
            Vertex nj = out.old_to_new[j];
            if (nj > static_cast<Vertex>(i)) out.graph.add_edge(static_cast<Vertex>(i), nj);
        }
    }
    return out;
}

/// G - U.
inline Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
    require_vertices(g, removed);
    std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : removed) gone[static_cast<std::size_t>(v)] = 1;
    VertexSet keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!gone[static_cast<std::size_t>(v)]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

/// G - S: same vertex set, edges of s removed.
inline Graph delete_edges(const Graph& g, std::span<const Edge> s) {
    require_edges(g, s);
    auto gone = normalized(EdgeSet(s.begin(), s.end()));
    Graph out(g.order());
    for (const auto& e : g.edges())
        if (!std::binary_search(gone.begin(), gone.end(), e)) out.add_edge(e.u, e.v);
    return out;
}

/// G|_S: spanning subgraph whose edge set is exactly s.
inline Graph restriction(const Graph& g, std::span<const Edge> s) {
    require_edges(g, s);
    Graph out(g.order());
    for (const auto& e : normalized(EdgeSet(s.begin(), s.end()))) out.add_edge(e.u, e.v);
    return out;
}

/// G/S together with the vertex -> contracted-vertex map.
struct Contraction {
    Graph graph;
    std::vector<Vertex> component_of;          ///< host vertex -> vertex of graph
    std::vector<VertexSet> members;            ///< vertex of graph -> host vertices
};

/// Contracts every edge of s: result vertices are the components of G|_S, two of
/// them adjacent iff some host edge joins the two components. Components are
/// numbered by their smallest host vertex.
inline Contraction contract_edges(const Graph& g, std::span<const Edge> s) {
    auto comps = connected_components(restriction(g, s));
    Contraction out;
    out.component_of = comps.label;
    out.members = comps.members();
    out.graph = Graph(comps.count);
    for (const auto& e : g.edges()) {
        Vertex a = comps.label[static_cast<std::size_t>(e.u)];
        Vertex b = comps.label[static_cast<std::size_t>(e.v)];
        if (a != b) out.graph.ensure_edge(a, b);
    }
    return out;
}

inline Graph complement(const Graph& g) {
    Graph out(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

/// G + H with H's vertices shifted by |V(G)|.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out(a.order() + b.order());
    for (const auto& e : a.edges()) out.add_edge(e.u, e.v);
    for (const auto& e : b.edges()) out.add_edge(e.u + a.order(), e.v + a.order());
    return out;
}

/// G x H: disjoint union plus every cross pair.
inline Graph join(const Graph& a, const Graph& b) {
    Graph out = disjoint_union(a, b);
    for (Vertex u = 0; u < a.order(); ++u)
        for (Vertex v = 0; v < b.order(); ++v) out.add_edge(u, a.order() + v);
    return out;
}

/// Relabels vertex v as perm[v].
inline Graph permuted(const Graph& g, std::span<const Vertex> perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw InvalidInput("permutation length mismatch");
    Graph out(g.order());
    for (const auto& e : g.edges()) out.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    return out;
}

}  // namespace blockerlab
