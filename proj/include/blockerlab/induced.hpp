#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "blockerlab/graph.hpp"

namespace blockerlab {

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Order for pattern vertices: each next vertex has the most already-placed
/// neighbours, ties broken by degree. Keeps the backtracking constrained.
inline std::vector<Vertex> constrained_order(const Graph& h) {
    std::vector<Vertex> order;
    std::vector<char> placed(static_cast<std::size_t>(h.order()), 0);
    for (int step = 0; step < h.order(); ++step) {
        Vertex best = -1;
        int best_links = -1, best_deg = -1;
        for (Vertex v = 0; v < h.order(); ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            int links = 0;
            for (Vertex u : order) links += h.adjacent(u, v) ? 1 : 0;
            int deg = h.degree(v);
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = v;
                best_links = links;
                best_deg = deg;
            }
        }
        placed[static_cast<std::size_t>(best)] = 1;
        order.push_back(best);
    }
    return order;
}

}  // namespace detail

/// Searches for an induced copy of h in g. Returns image[v] for every vertex v
/// of h, or nothing. Plain backtracking with degree pruning; meant for
/// patterns of a handful of vertices.
inline std::optional<std::vector<Vertex>> contains_induced(const Graph& g, const Graph& h) {
    const int k = h.order();
    if (k == 0) return std::vector<Vertex>{};
    if (k > g.order()) return std::nullopt;
    auto order = detail::constrained_order(h);
    std::vector<Vertex> image(static_cast<std::size_t>(k), -1);
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);

    auto extend = [&](auto&& self, int depth) -> bool {
        if (depth == k) return true;
        Vertex hv = order[static_cast<std::size_t>(depth)];
        int need = h.degree(hv);
        for (Vertex gv = 0; gv < g.order(); ++gv) {
            if (used[static_cast<std::size_t>(gv)] || g.degree(gv) < need) continue;
            bool ok = true;
            for (int j = 0; j < depth && ok; ++j) {
                Vertex hu = order[static_cast<std::size_t>(j)];
                ok = h.adjacent(hu, hv) == g.adjacent(image[static_cast<std::size_t>(hu)], gv);
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(hv)] = gv;
            used[static_cast<std::size_t>(gv)] = 1;
            if (self(self, depth + 1)) return true;
            used[static_cast<std::size_t>(gv)] = 0;
        }
        image[static_cast<std::size_t>(hv)] = -1;
        return false;
    };
    if (extend(extend, 0)) return image;
    return std::nullopt;
}

/// Colour refinement (1-dimensional Weisfeiler-Leman) colours. Colours are
/// hash values, so they are comparable between different graphs.
inline std::vector<std::uint64_t> refined_colours(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<std::uint64_t> colour(n);
    for (std::size_t v = 0; v < n; ++v) colour[v] = detail::mix64(static_cast<std::uint64_t>(g.degree(static_cast<Vertex>(v))));
    std::vector<std::uint64_t> next(n), nbr;
    for (std::size_t round = 0; round < n; ++round) {
        for (std::size_t v = 0; v < n; ++v) {
            nbr.clear();
            const auto& row = g.neighbours(static_cast<Vertex>(v));
            for (auto i = row.find_first(); i != Bitset::npos; i = row.find_next(i)) nbr.push_back(colour[i]);
            std::sort(nbr.begin(), nbr.end());
            std::uint64_t h = detail::mix64(colour[v]);
            for (auto c : nbr) h = detail::mix64(h ^ c);
            next[v] = h;
        }
        colour.swap(next);
    }
    return colour;
}

/// Isomorphism invariant: order, size and the multiset of refined colours.
inline std::uint64_t invariant_hash(const Graph& g) {
    auto colours = refined_colours(g);
    std::sort(colours.begin(), colours.end());
    std::uint64_t h = detail::mix64(static_cast<std::uint64_t>(g.order()) * 1000003ULL + static_cast<std::uint64_t>(g.size()));
    for (auto c : colours) h = detail::mix64(h ^ c);
    return h;
}

/// Finds a bijection phi with uv in E(a) iff phi(u)phi(v) in E(b).
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
    const int n = a.order();
    auto ca = refined_colours(a), cb = refined_colours(b);
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    std::map<std::uint64_t, int> class_size;
    for (auto c : ca) ++class_size[c];

    // Smallest colour classes first; afterwards prefer vertices adjacent to
    // already ordered ones.
    std::vector<Vertex> order;
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        std::pair<int, int> key{0, 0};
        for (Vertex v = 0; v < n; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            int links = 0;
            for (Vertex u : order) links += a.adjacent(u, v) ? 1 : 0;
            std::pair<int, int> k{-class_size[ca[static_cast<std::size_t>(v)]], links};
            if (best == -1 || k > key) {
                best = v;
                key = k;
            }
        }
        placed[static_cast<std::size_t>(best)] = 1;
        order.push_back(best);
    }

    std::vector<Vertex> image(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto extend = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        Vertex v = order[static_cast<std::size_t>(depth)];
        for (Vertex w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] || cb[static_cast<std::size_t>(w)] != ca[static_cast<std::size_t>(v)]) continue;
            bool ok = true;
            for (int j = 0; j < depth && ok; ++j) {
                Vertex u = order[static_cast<std::size_t>(j)];
                ok = a.adjacent(u, v) == b.adjacent(image[static_cast<std::size_t>(u)], w);
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            if (self(self, depth + 1)) return true;
            used[static_cast<std::size_t>(w)] = 0;
        }
        image[static_cast<std::size_t>(v)] = -1;
        return false;
    };
    if (extend(extend, 0)) return image;
    return std::nullopt;
}

inline bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace blockerlab
