#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "blockerlab/classes.hpp"
#include "blockerlab/colouring.hpp"
#include "blockerlab/generators.hpp"
#include "blockerlab/graph.hpp"
#include "blockerlab/induced.hpp"
#include "blockerlab/instances.hpp"
#include "blockerlab/oracle.hpp"
#include "blockerlab/parameters.hpp"

namespace blockerlab {

// ---------------------------------------------------------------------------
// Vertex cover to contraction blocker(omega)

/// G' = G plus a universal vertex w = n.
struct VcGadget {
    Graph graph;
    Vertex w = 0;
    int original_order = 0;
};

/// (C3+P1): a triangle plus an isolated vertex.
inline Graph triangle_plus_vertex() {
    Graph h(4);
    h.add_edge(0, 1);
    h.add_edge(1, 2);
    h.add_edge(0, 2);
    return h;
}

/// Adds a universal vertex to a triangle-free graph with at least one edge.
/// The result is (C3+P1)-free with clique number 3; both are checked.
inline VcGadget build_vc_gadget(const Graph& g) {
    if (auto t = find_triangle(g)) throw NotInClass("graph contains a triangle", *t);
    if (g.size() == 0) throw InvalidInput("graph needs at least one edge");
    VcGadget gm;
    gm.original_order = g.order();
    gm.w = g.order();
    gm.graph = Graph(g.order() + 1);
    for (const auto& e : g.edges()) gm.graph.add_edge(e.u, e.v);
    for (Vertex v = 0; v < g.order(); ++v) gm.graph.add_edge(v, gm.w);
    if (contains_induced(gm.graph, triangle_plus_vertex())) throw Error("gadget contains an induced C3+P1");
    if (parameter_value(gm.graph, Param::omega) != 3) throw Error("gadget clique number is not 3");
    return gm;
}

/// S = {vw : v in cover}.
inline EdgeSet vc_to_contraction_set(const VcGadget& gm, const Graph& g, const VertexSet& cover) {
    require_vertices(g, cover);
    if (!is_vertex_cover(g, cover)) throw InvalidInput("vertex set is not a vertex cover");
    EdgeSet s;
    for (Vertex v : normalized(cover)) s.push_back(make_edge(v, gm.w));
    return normalized(s);
}

/// Per component T of G'|_S: all of V(T) but w if T holds w, otherwise all
/// but its highest vertex. Requires omega(G'/S) < 3.
inline VertexSet contraction_set_to_vc(const VcGadget& gm, const EdgeSet& s) {
    require_edges(gm.graph, s);
    if (!is_contraction_critical(gm.graph, s, Param::omega)) throw InvalidInput("edge set is not omega-contraction-critical");
    auto comps = connected_components(restriction(gm.graph, s));
    VertexSet cover;
    for (const auto& members : comps.members()) {
        if (members.size() < 2) continue;
        const bool has_w = std::find(members.begin(), members.end(), gm.w) != members.end();
        const Vertex skip = has_w ? gm.w : *std::max_element(members.begin(), members.end());
        for (Vertex v : members)
            if (v != skip) cover.push_back(v);
    }
    return normalized(cover);
}

// ---------------------------------------------------------------------------
// Weighted positive 2-SAT to contraction / deletion blocker(alpha)

/// Variable i owns v_x = i(2k+2) followed by its clique K_x of 2k+1
/// vertices; clause j is vertex |X|(2k+2) + j.
struct ChordalGadget {
    Graph graph;
    SatInstance sat;
    std::vector<Vertex> v_x;
    std::vector<VertexSet> k_x;
    std::vector<Vertex> v_c;

    /// Index of the variable whose G_x holds v, or -1 for clause vertices.
    int variable_of(Vertex v) const {
        const int block = 2 * sat.k + 2;
        return v < sat.variables * block ? v / block : -1;
    }
};

/// v_x complete to the clique K_x, clause vertices form a clique, and each
/// clause vertex is complete to K_x and K_y of its two variables. Chordality
/// and alpha = |X| + 1 are checked.
inline ChordalGadget build_chordal_gadget(const SatInstance& input) {
    ChordalGadget gm;
    gm.sat = normalized(input);
    const auto& sat = gm.sat;
    const int block = 2 * sat.k + 2;
    const int n = sat.variables * block + static_cast<int>(sat.clauses.size());
    gm.graph = Graph(n);
    for (int x = 0; x < sat.variables; ++x) {
        const Vertex v = x * block;
        gm.v_x.push_back(v);
        VertexSet clique;
        for (int i = 1; i < block; ++i) clique.push_back(v + i);
        for (std::size_t i = 0; i < clique.size(); ++i) {
            gm.graph.add_edge(v, clique[i]);
            for (std::size_t j = i + 1; j < clique.size(); ++j) gm.graph.add_edge(clique[i], clique[j]);
        }
        gm.k_x.push_back(clique);
    }
    for (std::size_t j = 0; j < sat.clauses.size(); ++j) {
        const Vertex c = sat.variables * block + static_cast<Vertex>(j);
        for (Vertex other : gm.v_c) gm.graph.add_edge(other, c);
        gm.v_c.push_back(c);
        for (int x : {sat.clauses[j].first, sat.clauses[j].second})
            for (Vertex u : gm.k_x[static_cast<std::size_t>(x)]) gm.graph.add_edge(c, u);
    }
    auto cert = as_chordal(gm.graph);
    if (!cert) throw Error("gadget is not chordal");
    if (alpha_chordal(gm.graph, *cert).value != sat.variables + 1) throw Error("gadget independence number is not |X|+1");
    return gm;
}

inline void require_satisfying(const ChordalGadget& gm, const std::vector<int>& positives) {
    if (!is_satisfying(gm.sat, positives)) throw InvalidInput("assignment does not satisfy every clause");
    auto p = positives;
    std::sort(p.begin(), p.end());
    if (std::adjacent_find(p.begin(), p.end()) != p.end()) throw InvalidInput("assignment repeats a variable");
    if (static_cast<int>(p.size()) > gm.sat.k) throw InvalidInput("assignment sets more than k variables");
}

/// One edge e_x = v_x u per true variable, u the first vertex of K_x.
inline EdgeSet assignment_to_contraction_set(const ChordalGadget& gm, const std::vector<int>& positives) {
    require_satisfying(gm, positives);
    EdgeSet s;
    for (int x : positives) s.push_back(make_edge(gm.v_x[static_cast<std::size_t>(x)], gm.k_x[static_cast<std::size_t>(x)].front()));
    return normalized(s);
}

/// U = {v_x : x true}.
inline VertexSet assignment_to_deletion_set(const ChordalGadget& gm, const std::vector<int>& positives) {
    require_satisfying(gm, positives);
    VertexSet u;
    for (int x : positives) u.push_back(gm.v_x[static_cast<std::size_t>(x)]);
    return normalized(u);
}

/// Drops edges, lowest first, while the rest stays alpha-contraction-critical.
inline EdgeSet minimize_critical_contraction(const Graph& g, EdgeSet s) {
    s = normalized(s);
    for (std::size_t i = 0; i < s.size();) {
        EdgeSet smaller = s;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
        if (is_contraction_critical(g, smaller, Param::alpha))
            s = std::move(smaller);
        else
            ++i;
    }
    return s;
}

/// Shrinks S to an inclusion-minimal critical set, sets x true when G_x
/// meets V(S), then sets the lower variable of every clause still false.
inline std::vector<int> contraction_set_to_assignment(const ChordalGadget& gm, const EdgeSet& s) {
    require_edges(gm.graph, s);
    if (!is_contraction_critical(gm.graph, s, Param::alpha)) throw InvalidInput("edge set is not alpha-contraction-critical");
    auto minimal = minimize_critical_contraction(gm.graph, s);
    std::vector<char> on(static_cast<std::size_t>(gm.sat.variables), 0);
    for (const auto& e : minimal)
        for (Vertex v : {e.u, e.v})
            if (int x = gm.variable_of(v); x >= 0) on[static_cast<std::size_t>(x)] = 1;
    for (const auto& [x, y] : gm.sat.clauses)
        if (!on[static_cast<std::size_t>(x)] && !on[static_cast<std::size_t>(y)]) on[static_cast<std::size_t>(x)] = 1;
    std::vector<int> out;
    for (int x = 0; x < gm.sat.variables; ++x)
        if (on[static_cast<std::size_t>(x)]) out.push_back(x);
    return out;
}

/// Z = {x : v_x in W} plus the lower variable of every clause c with v_c in W.
inline std::vector<int> deletion_set_to_assignment(const ChordalGadget& gm, const VertexSet& w) {
    require_vertices(gm.graph, w);
    if (!is_deletion_critical(gm.graph, w, Param::alpha)) throw InvalidInput("vertex set is not alpha-deletion-critical");
    std::vector<char> on(static_cast<std::size_t>(gm.sat.variables), 0);
    for (Vertex v : w) {
        if (int x = gm.variable_of(v); x >= 0) {
            if (v == gm.v_x[static_cast<std::size_t>(x)]) on[static_cast<std::size_t>(x)] = 1;
        } else {
            auto j = static_cast<std::size_t>(v - gm.v_c.front());
            on[static_cast<std::size_t>(gm.sat.clauses[j].first)] = 1;
        }
    }
    std::vector<int> out;
    for (int x = 0; x < gm.sat.variables; ++x)
        if (on[static_cast<std::size_t>(x)]) out.push_back(x);
    return out;
}

// ---------------------------------------------------------------------------
// Minimum sum of squares to h-monochromatic edges

/// Complete multipartite graph with part U_j of a_j consecutive vertices.
/// The bound on monochromatic edges is J/2 - D with D = (sum a_j^2)/2;
/// twice_target keeps it exact, budget is its floor.
struct MssGadget {
    Graph graph;
    MssInstance mss;
    std::vector<VertexSet> parts;
    long long twice_target = 0;
    long long budget = 0;
};

inline long long floor_half(long long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

inline MssGadget build_mss_gadget(const MssInstance& mss) {
    validate(mss);
    MssGadget gm;
    gm.mss = mss;
    gm.graph = complete_multipartite(mss.a);
    long long squares = 0;
    Vertex next = 0;
    for (int a : mss.a) {
        VertexSet part;
        for (int i = 0; i < a; ++i) part.push_back(next++);
        gm.parts.push_back(part);
        squares += static_cast<long long>(a) * a;
    }
    gm.twice_target = mss.J - squares;
    gm.budget = floor_half(gm.twice_target);
    if (gm.graph.order() > 0) {
        auto cert = recognize_complete_multipartite(gm.graph);
        if (!in_class(cert)) throw Error("gadget is not complete multipartite");
    }
    return gm;
}

/// Colours U_j with i for every j in A_i; h = number of groups.
inline Colouring partition_to_colouring(const MssGadget& gm, const std::vector<std::vector<int>>& groups) {
    const int l = static_cast<int>(gm.parts.size());
    std::vector<int> group_of(static_cast<std::size_t>(l), -1);
    for (std::size_t i = 0; i < groups.size(); ++i)
        for (int j : groups[i]) {
            if (j < 0 || j >= l) throw InvalidInput("partition index out of range");
            if (group_of[static_cast<std::size_t>(j)] != -1) throw InvalidInput("partition repeats index " + std::to_string(j));
            group_of[static_cast<std::size_t>(j)] = static_cast<int>(i);
        }
    for (int j = 0; j < l; ++j)
        if (group_of[static_cast<std::size_t>(j)] == -1) throw InvalidInput("partition misses index " + std::to_string(j));
    if (groups.empty()) throw InvalidInput("partition needs at least one group");
    Colouring c{std::vector<int>(static_cast<std::size_t>(gm.graph.order()), 0), static_cast<int>(groups.size())};
    for (int j = 0; j < l; ++j)
        for (Vertex v : gm.parts[static_cast<std::size_t>(j)]) c.colour[static_cast<std::size_t>(v)] = group_of[static_cast<std::size_t>(j)];
    return c;
}

/// Recolours each U_j to one colour (never adding monochromatic edges),
/// then reads off A_i = {j : U_j has colour i}.
inline std::vector<std::vector<int>> colouring_to_partition(const MssGadget& gm, const Colouring& c, Colouring* normalized_out = nullptr) {
    require_total(gm.graph, c);
    Colouring cur = c;
    for (const auto& part : gm.parts) cur = recolour_module(gm.graph, cur, part);
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(c.h));
    for (std::size_t j = 0; j < gm.parts.size(); ++j)
        groups[static_cast<std::size_t>(cur.colour[static_cast<std::size_t>(gm.parts[j].front())])].push_back(static_cast<int>(j));
    if (normalized_out) *normalized_out = cur;
    return groups;
}

/// Sum over groups of (sum of a_j in the group)^2.
inline long long sum_of_squares(const MssInstance& mss, const std::vector<std::vector<int>>& groups) {
    long long total = 0;
    for (const auto& grp : groups) {
        long long s = 0;
        for (int j : grp) s += mss.a.at(static_cast<std::size_t>(j));
        total += s * s;
    }
    return total;
}

}  // namespace blockerlab
