#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "blockerlab/classes.hpp"
#include "blockerlab/generators.hpp"
#include "blockerlab/graph.hpp"
#include "blockerlab/induced.hpp"

namespace blockerlab {

enum class CatalogueClass { all, bipartite, chordal, cograph, complete_multipartite, triangle_free };

inline std::string to_string(CatalogueClass c) {
    switch (c) {
        case CatalogueClass::all: return "all";
        case CatalogueClass::bipartite: return "bipartite";
        case CatalogueClass::chordal: return "chordal";
        case CatalogueClass::cograph: return "cograph";
        case CatalogueClass::complete_multipartite: return "complete-multipartite";
        case CatalogueClass::triangle_free: return "c3-free";
    }
    return "?";
}

inline CatalogueClass parse_catalogue_class(const std::string& s) {
    if (s == "all") return CatalogueClass::all;
    if (s == "bipartite") return CatalogueClass::bipartite;
    if (s == "chordal") return CatalogueClass::chordal;
    if (s == "cograph") return CatalogueClass::cograph;
    if (s == "complete-multipartite") return CatalogueClass::complete_multipartite;
    if (s == "c3-free" || s == "triangle-free") return CatalogueClass::triangle_free;
    throw InvalidInput("unknown catalogue class '" + s + "'");
}

inline bool in_catalogue_class(const Graph& g, CatalogueClass c) {
    switch (c) {
        case CatalogueClass::all: return true;
        case CatalogueClass::bipartite: return as_bipartite(g).has_value();
        case CatalogueClass::chordal: return as_chordal(g).has_value();
        case CatalogueClass::cograph: return g.order() == 0 || in_class(recognize_cograph(g));
        case CatalogueClass::complete_multipartite: return g.order() == 0 || in_class(recognize_complete_multipartite(g));
        case CatalogueClass::triangle_free: return is_triangle_free(g);
    }
    return false;
}

inline constexpr int kCatalogueMaxOrder = 9;

/// Collects graphs up to isomorphism: buckets by invariant hash, exact
/// isomorphism test inside a bucket.
class IsoSet {
public:
    bool insert(const Graph& g) {
        auto& bucket = buckets_[invariant_hash(g)];
        for (std::size_t i : bucket)
            if (are_isomorphic(graphs_[i], g)) return false;
        bucket.push_back(graphs_.size());
        graphs_.push_back(g);
        return true;
    }
    const std::vector<Graph>& graphs() const noexcept { return graphs_; }

private:
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
    std::vector<Graph> graphs_;
};

/// Every graph of the class with 1..n_max vertices, one per isomorphism
/// type, by order. Graphs of order n arise from those of order n-1 by adding
/// a vertex with any neighbourhood; the classes are hereditary and every
/// connected graph has a vertex whose removal keeps it connected, so the
/// generation is complete.
inline std::vector<Graph> graph_catalogue(CatalogueClass cls, int n_max, bool connected = true) {
    if (n_max < 1 || n_max > kCatalogueMaxOrder) throw InvalidInput("catalogue order must lie in [1, 9]");
    std::vector<Graph> out;
    std::vector<Graph> level{Graph(1)};
    out.push_back(level.front());
    for (int n = 2; n <= n_max; ++n) {
        IsoSet next;
        for (const auto& g : level) {
            const int m = g.order();
            for (std::uint32_t mask = connected ? 1 : 0; mask < (std::uint32_t{1} << m); ++mask) {
                Graph h(m + 1);
                for (const auto& e : g.edges()) h.add_edge(e.u, e.v);
                for (int v = 0; v < m; ++v)
                    if (mask >> v & 1) h.add_edge(v, m);
                if (in_catalogue_class(h, cls)) next.insert(h);
            }
        }
        level = next.graphs();
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

/// `count` random connected members of the class on n vertices, without
/// repeated isomorphism types (fewer if the class runs out).
inline std::vector<Graph> random_catalogue(CatalogueClass cls, int n, int count, std::uint64_t seed) {
    if (n < 1) throw InvalidInput("order must be positive");
    Rng rng(seed);
    IsoSet found;
    const int attempts = 50 * count + 100;
    for (int i = 0; i < attempts && static_cast<int>(found.graphs().size()) < count; ++i) {
        Graph g;
        switch (cls) {
            case CatalogueClass::all: g = random_graph(n, 0.5, rng); break;
            case CatalogueClass::bipartite: g = random_connected_bipartite(n, 0.3, rng); break;
            case CatalogueClass::chordal: g = random_chordal(n, rng, true); break;
            case CatalogueClass::cograph: g = random_cograph(n, rng, true); break;
            case CatalogueClass::triangle_free: g = random_triangle_free(n, 0.5, rng); break;
            case CatalogueClass::complete_multipartite: {
                std::vector<int> parts;
                std::uniform_int_distribution<int> size(1, n);
                for (int left = n; left > 0;) {
                    int s = std::min(left, size(rng));
                    parts.push_back(s);
                    left -= s;
                }
                if (parts.size() == 1 && n > 1) parts = {n - 1, 1};
                g = complete_multipartite(parts);
                break;
            }
        }
        if (n == 1 || (is_connected(g) && in_catalogue_class(g, cls))) found.insert(g);
    }
    return found.graphs();
}

}  // namespace blockerlab
