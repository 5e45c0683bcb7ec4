#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "blockerlab/graph.hpp"

namespace blockerlab {

using Rng = std::mt19937_64;

// ---------------------------------------------------------------------------
// Named graphs

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph path_graph(int n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

/// Sides {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) { return join(empty_graph(a), empty_graph(b)); }

/// Parts of the given sizes, numbered consecutively.
inline Graph complete_multipartite(const std::vector<int>& parts) {
    Graph g;
    bool first = true;
    for (int p : parts) {
        g = first ? empty_graph(p) : join(g, empty_graph(p));
        first = false;
    }
    return g;
}

/// Triangle 0-1-2 with pendant vertex 3 attached to 0.
inline Graph paw_graph() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    return g;
}

// ---------------------------------------------------------------------------
// Random graphs

inline Graph random_graph(int n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

/// Random spanning tree grown by attaching each vertex to an earlier one,
/// plus extra cross edges with probability p. Always connected and bipartite.
inline Graph random_connected_bipartite(int n, double p, Rng& rng) {
    Graph g(n);
    if (n == 0) return g;
    std::vector<int> side(static_cast<std::size_t>(n), 0);
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<Vertex> pick(0, v - 1);
        Vertex parent = pick(rng);
        side[static_cast<std::size_t>(v)] = 1 - side[static_cast<std::size_t>(parent)];
        g.add_edge(parent, v);
    }
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)] && !g.adjacent(u, v) && coin(rng))
                g.add_edge(u, v);
    return g;
}

/// Random bipartite graph, possibly disconnected.
inline Graph random_bipartite(int n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p), half(0.5);
    std::vector<int> side(static_cast<std::size_t>(n));
    for (auto& s : side) s = half(rng) ? 1 : 0;
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)] && coin(rng)) g.add_edge(u, v);
    return g;
}

/// Adds vertices one at a time, each complete to a random clique of the
/// current graph (a simplicial vertex), so the result is chordal. With
/// `connected`, the chosen clique is never empty.
inline Graph random_chordal(int n, Rng& rng, bool connected = true) {
    Graph g(n);
    std::bernoulli_distribution coin(0.5);
    for (Vertex v = 1; v < n; ++v) {
        if (!connected && coin(rng)) continue;
        std::uniform_int_distribution<Vertex> pick(0, v - 1);
        Vertex anchor = pick(rng);
        std::vector<Vertex> clique{anchor};
        std::vector<Vertex> cand;
        for (Vertex u = 0; u < v; ++u)
            if (g.adjacent(anchor, u)) cand.push_back(u);
        std::shuffle(cand.begin(), cand.end(), rng);
        for (Vertex u : cand) {
            if (!coin(rng)) continue;
            if (std::all_of(clique.begin(), clique.end(), [&](Vertex w) { return g.adjacent(u, w); }))
                clique.push_back(u);
        }
        for (Vertex u : clique) g.add_edge(u, v);
    }
    return g;
}

/// Random cograph by recursive union/join of random splits. With
/// `connected`, the top operation is a join.
inline Graph random_cograph(int n, Rng& rng, bool connected = false) {
    if (n <= 1) return Graph(n);
    std::uniform_int_distribution<int> split(1, n - 1);
    int a = split(rng);
    Graph left = random_cograph(a, rng), right = random_cograph(n - a, rng);
    std::bernoulli_distribution coin(0.5);
    Graph g = (connected || coin(rng)) ? join(left, right) : disjoint_union(left, right);
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return permuted(g, perm);
}

/// Random triangle-free graph: edges tried in random order, kept when they
/// close no triangle.
inline Graph random_triangle_free(int n, double p, Rng& rng) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (const auto& e : pairs) {
        if (!coin(rng)) continue;
        if ((g.neighbours(e.u) & g.neighbours(e.v)).none()) g.add_edge(e.u, e.v);
    }
    return g;
}

}  // namespace blockerlab
