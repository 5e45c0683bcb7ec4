#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "blockerlab/graph.hpp"

namespace blockerlab {

/// Map from vertices to colours 0..h-1.
struct Colouring {
    std::vector<int> colour;
    int h = 0;

    bool operator==(const Colouring&) const = default;
};

inline void require_total(const Graph& g, const Colouring& c) {
    if (static_cast<int>(c.colour.size()) != g.order())
        throw InvalidInput("colouring covers " + std::to_string(c.colour.size()) + " vertices, graph has " +
                           std::to_string(g.order()));
    for (int x : c.colour)
        if (x < 0 || x >= c.h) throw InvalidInput("colour " + std::to_string(x) + " outside [0," + std::to_string(c.h) + ")");
}

inline EdgeSet monochromatic_edges(const Graph& g, const Colouring& c) {
    require_total(g, c);
    EdgeSet out;
    for (const auto& e : g.edges())
        if (c.colour[static_cast<std::size_t>(e.u)] == c.colour[static_cast<std::size_t>(e.v)]) out.push_back(e);
    return out;
}

inline int count_monochromatic_edges(const Graph& g, const Colouring& c) {
    return static_cast<int>(monochromatic_edges(g, c).size());
}

inline bool is_proper(const Graph& g, const Colouring& c) { return count_monochromatic_edges(g, c) == 0; }

/// Deleting the monochromatic edges leaves c proper, so chi(G - S) <= h.
inline EdgeSet mono_to_edge_deletion_witness(const Graph& g, const Colouring& c) { return monochromatic_edges(g, c); }

/// Vertices per colour.
inline std::vector<VertexSet> colour_classes(const Colouring& c) {
    std::vector<VertexSet> out(static_cast<std::size_t>(std::max(c.h, 0)));
    for (std::size_t v = 0; v < c.colour.size(); ++v) out[static_cast<std::size_t>(c.colour[v])].push_back(static_cast<Vertex>(v));
    return out;
}

/// Number of distinct colours actually used.
inline int colours_used(const Colouring& c) {
    auto seen = c.colour;
    std::sort(seen.begin(), seen.end());
    return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

/// Gives every vertex of i the colour j in c(I) that is least used on the
/// common neighbourhood N(I). Ties go to the smallest colour. Requires i
/// independent with all members sharing one neighbourhood.
inline Colouring recolour_module(const Graph& g, const Colouring& c, std::span<const Vertex> i) {
    require_total(g, c);
    require_vertices(g, i);
    if (i.empty()) return c;
    if (!is_independent(g, i)) throw InvalidInput("recolour_module: set is not independent");
    for (Vertex v : i)
        if (g.neighbours(v) != g.neighbours(i[0])) throw InvalidInput("recolour_module: members have different neighbourhoods");
    std::vector<int> on_nbrs(static_cast<std::size_t>(c.h), 0);
    const auto& row = g.neighbours(i[0]);
    for (auto u = row.find_first(); u != Bitset::npos; u = row.find_next(u)) ++on_nbrs[static_cast<std::size_t>(c.colour[u])];
    int best = -1;
    for (Vertex v : i) {
        int j = c.colour[static_cast<std::size_t>(v)];
        if (best == -1 || on_nbrs[static_cast<std::size_t>(j)] < on_nbrs[static_cast<std::size_t>(best)] ||
            (on_nbrs[static_cast<std::size_t>(j)] == on_nbrs[static_cast<std::size_t>(best)] && j < best))
            best = j;
    }
    Colouring out = c;
    for (Vertex v : i) out.colour[static_cast<std::size_t>(v)] = best;
    return out;
}

}  // namespace blockerlab
