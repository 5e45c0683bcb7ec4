#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "blockerlab/classes.hpp"
#include "blockerlab/enumerate.hpp"
#include "blockerlab/graph.hpp"
#include "blockerlab/oracle.hpp"
#include "blockerlab/parameters.hpp"

namespace blockerlab {

/// Grows a tree from the lowest matching edge until it has 2d or 2d+1
/// edges. Each step takes the lowest vertex w outside the tree with a tree
/// neighbour, attaches it through its lowest tree neighbour w', and, when w
/// is matched, also adds w's matching edge.
inline EdgeSet build_contraction_tree(const Graph& g, const EdgeSet& matching, int d) {
    if (d < 1) throw InvalidInput("d must be at least 1");
    if (!is_connected(g)) throw InvalidInput("contraction tree needs a connected graph");
    auto cert = as_bipartite(g);
    if (!cert) throw InvalidInput("contraction tree needs a bipartite graph");
    if (matching.empty()) throw InvalidInput("contraction tree needs a non-empty matching");
    if (!is_matching(g, matching)) throw InvalidInput("edge set is not a matching of the graph");
    if (static_cast<int>(matching.size()) != mu_bipartite(g, *cert).value) throw InvalidInput("matching is not maximum");
    if (g.order() < 2 * d + 2) throw InvalidInput("contraction tree needs at least 2d+2 vertices");

    std::vector<Vertex> mate(static_cast<std::size_t>(g.order()), -1);
    for (const auto& e : matching) {
        mate[static_cast<std::size_t>(e.u)] = e.v;
        mate[static_cast<std::size_t>(e.v)] = e.u;
    }
    auto start = normalized(matching).front();
    EdgeSet tree{start};
    Bitset in_tree(static_cast<std::size_t>(g.order()));
    in_tree.set(static_cast<std::size_t>(start.u));
    in_tree.set(static_cast<std::size_t>(start.v));
    while (static_cast<int>(tree.size()) <= 2 * d - 1) {
        Bitset frontier(static_cast<std::size_t>(g.order()));
        for (auto v = in_tree.find_first(); v != Bitset::npos; v = in_tree.find_next(v)) frontier |= g.neighbours(static_cast<Vertex>(v));
        frontier -= in_tree;
        auto w = static_cast<Vertex>(frontier.find_first());
        auto w2 = static_cast<Vertex>((g.neighbours(w) & in_tree).find_first());
        tree.push_back(make_edge(w2, w));
        in_tree.set(static_cast<std::size_t>(w));
        Vertex partner = mate[static_cast<std::size_t>(w)];
        if (partner != -1) {
            tree.push_back(make_edge(w, partner));
            in_tree.set(static_cast<std::size_t>(partner));
        }
    }
    return normalized(tree);
}

/// alpha(G/S) for bipartite G. With U the contracted vertices that merged
/// two or more vertices, every independent set of G/S splits into an
/// independent U' of U and an independent set of the bipartite rest
/// G/S - (U + N(U')); the maximum is taken over all such U'.
inline int alpha_after_contraction_bipartite(const Graph& g, const EdgeSet& s, const Bipartition& cert) {
    if (!valid_bipartition(g, cert)) throw InvalidInput("invalid bipartition certificate");
    auto c = contract_edges(g, s);
    const Graph& h = c.graph;
    std::vector<Vertex> big;
    for (Vertex x = 0; x < h.order(); ++x)
        if (c.members[static_cast<std::size_t>(x)].size() >= 2) big.push_back(x);
    if (big.size() > 24) throw CapacityExceeded("too many contracted vertices for subset enumeration");
    // The rest is an induced subgraph of G, so it inherits the bipartition.
    auto side_of = std::vector<int>(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : cert.right) side_of[static_cast<std::size_t>(v)] = 1;
    int best = 0;
    const std::uint32_t subsets = std::uint32_t{1} << big.size();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        std::vector<Vertex> chosen;
        for (std::size_t i = 0; i < big.size(); ++i)
            if (mask >> i & 1) chosen.push_back(big[i]);
        if (!is_independent(h, chosen)) continue;
        std::vector<char> removed(static_cast<std::size_t>(h.order()), 0);
        for (Vertex x : big) removed[static_cast<std::size_t>(x)] = 1;
        for (Vertex x : chosen)
            for (Vertex y : h.neighbour_list(x)) removed[static_cast<std::size_t>(y)] = 1;
        VertexSet keep;
        for (Vertex x = 0; x < h.order(); ++x)
            if (!removed[static_cast<std::size_t>(x)]) keep.push_back(x);
        auto rest = induced_subgraph(h, keep);
        Bipartition part;
        for (std::size_t i = 0; i < rest.new_to_old.size(); ++i) {
            Vertex host = c.members[static_cast<std::size_t>(rest.new_to_old[i])].front();
            (side_of[static_cast<std::size_t>(host)] == 0 ? part.left : part.right).push_back(static_cast<Vertex>(i));
        }
        int value = static_cast<int>(chosen.size()) + alpha_bipartite(rest.graph, part).value;
        best = std::max(best, value);
    }
    return best;
}

/// Which branch of the dispatch decided a bipartite blocker instance.
enum class BipartiteRoute { small_graph, alpha_too_small, tree, enumeration };

inline std::string to_string(BipartiteRoute r) {
    switch (r) {
        case BipartiteRoute::small_graph: return "small-graph";
        case BipartiteRoute::alpha_too_small: return "alpha-at-most-d";
        case BipartiteRoute::tree: return "contraction-tree";
        case BipartiteRoute::enumeration: return "enumeration";
    }
    return "?";
}

struct ContractionWitness {
    EdgeSet edges;
    int claimed_alpha_after = 0;
};

struct BipartiteBlockerResult {
    bool yes = false;
    ContractionWitness witness;
    int alpha_before = 0;
    BipartiteRoute route = BipartiteRoute::enumeration;
};

/// d-Contraction Blocker(alpha) on a connected bipartite graph:
///  - at most 2d+1 vertices: exhaustive oracle;
///  - alpha <= d: no;
///  - k >= 2d+1: yes, witnessed by the contraction tree;
///  - otherwise all S with |S| <= k, smallest first.
inline BipartiteBlockerResult solve_bipartite_contraction_blocker(const Graph& g, int k, int d, int threads = 1,
                                                                  std::uint64_t budget = 10'000'000) {
    if (d < 1) throw InvalidInput("d must be at least 1");
    if (k < 0) throw InvalidInput("k must be non-negative");
    if (g.order() == 0 || !is_connected(g)) throw InvalidInput("bipartite blocker needs a connected graph");
    auto certificate = recognize_bipartite(g);
    if (auto* f = std::get_if<Forbidden>(&certificate)) throw NotInClass("graph is not bipartite: " + f->structure, f->vertices);
    const auto& cert = std::get<Bipartition>(certificate);

    BipartiteBlockerResult out;
    out.alpha_before = alpha_bipartite(g, cert).value;
    const int n = g.order();

    if (n <= 2 * d + 1) {
        out.route = BipartiteRoute::small_graph;
        auto a = brute_blocker({g, Operation::contract, Param::alpha, k, d}, budget, threads);
        out.yes = a.yes;
        out.witness = {a.edges, a.after};
        return out;
    }
    if (out.alpha_before <= d) {
        out.route = BipartiteRoute::alpha_too_small;
        return out;
    }
    if (k >= 2 * d + 1) {
        out.route = BipartiteRoute::tree;
        auto m = mu_bipartite(g, cert);
        auto tree = build_contraction_tree(g, m.edges, d);
        out.yes = true;
        out.witness = {tree, alpha_after_contraction_bipartite(g, tree, cert)};
        return out;
    }
    out.route = BipartiteRoute::enumeration;
    auto edges = g.edges();
    const int target = out.alpha_before - d;
    auto pick = [&](const std::vector<int>& idx) {
        EdgeSet s;
        for (int i : idx) s.push_back(edges[static_cast<std::size_t>(i)]);
        return s;
    };
    auto pred = [&](const std::vector<int>& idx) { return alpha_after_contraction_bipartite(g, pick(idx), cert) <= target; };
    Budget b(budget);
    auto found = first_success_up_to(static_cast<int>(edges.size()), k, pred, true, b, threads);
    if (found) {
        out.yes = true;
        out.witness.edges = pick(*found);
        out.witness.claimed_alpha_after = alpha_after_contraction_bipartite(g, out.witness.edges, cert);
    }
    return out;
}

}  // namespace blockerlab
