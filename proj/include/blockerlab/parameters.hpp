#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "blockerlab/classes.hpp"
#include "blockerlab/colouring.hpp"
#include "blockerlab/cotree.hpp"
#include "blockerlab/graph.hpp"

namespace blockerlab {

enum class Param { alpha, omega, chi, mu, tau };

inline std::string to_string(Param p) {
    switch (p) {
        case Param::alpha: return "alpha";
        case Param::omega: return "omega";
        case Param::chi: return "chi";
        case Param::mu: return "mu";
        case Param::tau: return "tau";
    }
    return "?";
}

inline Param parse_param(const std::string& s) {
    if (s == "alpha") return Param::alpha;
    if (s == "omega") return Param::omega;
    if (s == "chi") return Param::chi;
    if (s == "mu") return Param::mu;
    if (s == "tau") return Param::tau;
    throw InvalidInput("unknown parameter '" + s + "'");
}

/// A parameter value with the object certifying it: an independent set,
/// clique or vertex cover in `vertices`, a matching in `edges`, or a proper
/// colouring in `colouring`.
struct ParameterValue {
    Param kind = Param::alpha;
    int value = 0;
    VertexSet vertices;
    EdgeSet edges;
    Colouring colouring;
};

/// Re-checks a certified value against g.
inline bool validate_parameter(const Graph& g, const ParameterValue& p) {
    switch (p.kind) {
        case Param::alpha:
            return static_cast<int>(p.vertices.size()) == p.value && is_independent(g, p.vertices);
        case Param::omega:
            return static_cast<int>(p.vertices.size()) == p.value && is_clique(g, p.vertices);
        case Param::tau:
            return static_cast<int>(normalized(p.vertices).size()) == p.value && is_vertex_cover(g, p.vertices);
        case Param::mu:
            return static_cast<int>(p.edges.size()) == p.value && is_matching(g, p.edges);
        case Param::chi:
            try {
                return p.colouring.h == p.value && is_proper(g, p.colouring);
            } catch (const InvalidInput&) {
                return false;
            }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Word-mask kernels (n <= 64)

inline constexpr int kExactCliqueCap = 40;
inline constexpr int kExactChiCap = 20;

namespace detail {

inline int lowest(std::uint64_t m) { return std::countr_zero(m); }

/// Greedy colouring bound branch and bound for maximum clique.
struct CliqueSearch {
    const std::vector<std::uint64_t>& adj;
    std::uint64_t best_set = 0;
    int best = 0;

    void expand(std::uint64_t chosen, int size, std::uint64_t cand) {
        if (cand == 0) {
            if (size > best) {
                best = size;
                best_set = chosen;
            }
            return;
        }
        // Greedy colour classes; vertices are listed with non-decreasing colour.
        int order[64], bound[64], count = 0, colour = 0;
        std::uint64_t uncoloured = cand;
        while (uncoloured) {
            ++colour;
            std::uint64_t avail = uncoloured;
            while (avail) {
                int v = lowest(avail);
                avail &= ~(std::uint64_t{1} << v);
                avail &= ~adj[static_cast<std::size_t>(v)];
                uncoloured &= ~(std::uint64_t{1} << v);
                order[count] = v;
                bound[count] = colour;
                ++count;
            }
        }
        for (int i = count - 1; i >= 0; --i) {
            if (size + bound[i] <= best) return;
            int v = order[i];
            std::uint64_t bit = std::uint64_t{1} << v;
            expand(chosen | bit, size + 1, cand & adj[static_cast<std::size_t>(v)]);
            cand &= ~bit;
        }
    }
};

inline std::uint64_t full_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

inline std::vector<std::uint64_t> complement_masks(const std::vector<std::uint64_t>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<std::uint64_t> out(adj.size());
    for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = full_mask(n) & ~adj[static_cast<std::size_t>(v)] & ~(std::uint64_t{1} << v);
    return out;
}

inline VertexSet mask_members(std::uint64_t m) {
    VertexSet out;
    while (m) {
        out.push_back(lowest(m));
        m &= m - 1;
    }
    return out;
}

/// Proper colouring with at most h colours by backtracking in
/// most-constrained-first order; new colours are opened one at a time.
inline bool colour_with(const std::vector<std::uint64_t>& adj, int h, std::vector<int>& colour) {
    const int n = static_cast<int>(adj.size());
    colour.assign(static_cast<std::size_t>(n), -1);
    std::vector<std::uint64_t> used_by(static_cast<std::size_t>(h), 0);
    auto rec = [&](auto&& self, int placed, int opened) -> bool {
        if (placed == n) return true;
        // Pick the uncoloured vertex seeing most distinct colours, then highest degree.
        int pick = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (colour[static_cast<std::size_t>(v)] != -1) continue;
            int sat = 0;
            for (int c = 0; c < opened; ++c) sat += (used_by[static_cast<std::size_t>(c)] & adj[static_cast<std::size_t>(v)]) ? 1 : 0;
            int deg = std::popcount(adj[static_cast<std::size_t>(v)]);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                pick = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        std::uint64_t bit = std::uint64_t{1} << pick;
        for (int c = 0; c < std::min(opened + 1, h); ++c) {
            if (used_by[static_cast<std::size_t>(c)] & adj[static_cast<std::size_t>(pick)]) continue;
            colour[static_cast<std::size_t>(pick)] = c;
            used_by[static_cast<std::size_t>(c)] |= bit;
            if (self(self, placed + 1, std::max(opened, c + 1))) return true;
            used_by[static_cast<std::size_t>(c)] &= ~bit;
            colour[static_cast<std::size_t>(pick)] = -1;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

}  // namespace detail

/// Maximum clique of a mask graph, as a vertex mask.
inline std::uint64_t mask_max_clique(const std::vector<std::uint64_t>& adj) {
    detail::CliqueSearch s{adj};
    s.expand(0, 0, detail::full_mask(static_cast<int>(adj.size())));
    return s.best_set;
}

inline int mask_omega(const std::vector<std::uint64_t>& adj) { return std::popcount(mask_max_clique(adj)); }

inline int mask_alpha(const std::vector<std::uint64_t>& adj) { return mask_omega(detail::complement_masks(adj)); }

inline int mask_chi(const std::vector<std::uint64_t>& adj) {
    if (adj.empty()) return 0;
    std::vector<int> colour;
    for (int h = std::max(1, mask_omega(adj));; ++h)
        if (detail::colour_with(adj, h, colour)) return h;
}

// ---------------------------------------------------------------------------
// Exact general routines

inline ParameterValue omega_exact(const Graph& g) {
    if (g.order() > kExactCliqueCap)
        throw CapacityExceeded("exact clique search is limited to " + std::to_string(kExactCliqueCap) + " vertices");
    auto set = detail::mask_members(mask_max_clique(g.adjacency_masks()));
    return {Param::omega, static_cast<int>(set.size()), set, {}, {}};
}

inline ParameterValue alpha_exact(const Graph& g) {
    if (g.order() > kExactCliqueCap)
        throw CapacityExceeded("exact independent set search is limited to " + std::to_string(kExactCliqueCap) + " vertices");
    auto set = detail::mask_members(mask_max_clique(detail::complement_masks(g.adjacency_masks())));
    return {Param::alpha, static_cast<int>(set.size()), set, {}, {}};
}

inline ParameterValue chi_exact(const Graph& g) {
    if (g.order() > kExactChiCap)
        throw CapacityExceeded("exact colouring is limited to " + std::to_string(kExactChiCap) + " vertices");
    ParameterValue out{Param::chi, 0, {}, {}, {}};
    if (g.order() == 0) return out;
    auto adj = g.adjacency_masks();
    std::vector<int> colour;
    for (int h = std::max(1, mask_omega(adj));; ++h)
        if (detail::colour_with(adj, h, colour)) {
            out.value = h;
            out.colouring = {colour, h};
            return out;
        }
}

inline ParameterValue tau_from_alpha(const Graph& g, const ParameterValue& a) {
    if (a.kind != Param::alpha || !validate_parameter(g, a)) throw InvalidInput("tau_from_alpha needs a certified alpha value");
    ParameterValue out{Param::tau, g.order() - a.value, {}, {}, {}};
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : a.vertices) in[static_cast<std::size_t>(v)] = 1;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!in[static_cast<std::size_t>(v)]) out.vertices.push_back(v);
    return out;
}

/// Maximum matching of an arbitrary graph (Edmonds, via Boost.Graph).
inline ParameterValue mu_general(const Graph& g) {
    using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BGraph bg(static_cast<std::size_t>(g.order()));
    for (const auto& e : g.edges()) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
    std::vector<boost::graph_traits<BGraph>::vertex_descriptor> mate(static_cast<std::size_t>(g.order()));
    boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
    ParameterValue out{Param::mu, 0, {}, {}, {}};
    const auto none = boost::graph_traits<BGraph>::null_vertex();
    for (std::size_t v = 0; v < mate.size(); ++v)
        if (mate[v] != none && v < mate[v]) out.edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(mate[v])});
    out.value = static_cast<int>(out.edges.size());
    return out;
}

// ---------------------------------------------------------------------------
// Bipartite

/// Maximum matching by augmenting paths from the left side.
inline ParameterValue mu_bipartite(const Graph& g, const Bipartition& cert) {
    if (!valid_bipartition(g, cert)) throw InvalidInput("invalid bipartition certificate");
    std::vector<Vertex> mate(static_cast<std::size_t>(g.order()), -1);
    std::vector<char> visited;
    auto augment = [&](auto&& self, Vertex l) -> bool {
        for (Vertex r : g.neighbour_list(l)) {
            if (visited[static_cast<std::size_t>(r)]) continue;
            visited[static_cast<std::size_t>(r)] = 1;
            Vertex other = mate[static_cast<std::size_t>(r)];
            if (other == -1 || self(self, other)) {
                mate[static_cast<std::size_t>(r)] = l;
                mate[static_cast<std::size_t>(l)] = r;
                return true;
            }
        }
        return false;
    };
    for (Vertex l : cert.left) {
        visited.assign(static_cast<std::size_t>(g.order()), 0);
        augment(augment, l);
    }
    ParameterValue out{Param::mu, 0, {}, {}, {}};
    for (Vertex l : cert.left)
        if (mate[static_cast<std::size_t>(l)] != -1) out.edges.push_back(make_edge(l, mate[static_cast<std::size_t>(l)]));
    std::sort(out.edges.begin(), out.edges.end());
    out.value = static_cast<int>(out.edges.size());
    return out;
}

/// Minimum vertex cover from a maximum matching: with Z the vertices reached
/// from unmatched left vertices by alternating paths, the cover is
/// (L \ Z) + (R n Z).
inline VertexSet koenig_cover(const Graph& g, const Bipartition& cert, const EdgeSet& matching) {
    std::vector<Vertex> mate(static_cast<std::size_t>(g.order()), -1);
    for (const auto& e : matching) {
        mate[static_cast<std::size_t>(e.u)] = e.v;
        mate[static_cast<std::size_t>(e.v)] = e.u;
    }
    std::vector<char> left(static_cast<std::size_t>(g.order()), 0), reached(static_cast<std::size_t>(g.order()), 0);
    for (Vertex l : cert.left) left[static_cast<std::size_t>(l)] = 1;
    std::deque<Vertex> queue;
    for (Vertex l : cert.left)
        if (mate[static_cast<std::size_t>(l)] == -1) {
            reached[static_cast<std::size_t>(l)] = 1;
            queue.push_back(l);
        }
    while (!queue.empty()) {
        Vertex l = queue.front();
        queue.pop_front();
        for (Vertex r : g.neighbour_list(l)) {
            if (reached[static_cast<std::size_t>(r)] || mate[static_cast<std::size_t>(l)] == r) continue;
            reached[static_cast<std::size_t>(r)] = 1;
            Vertex next = mate[static_cast<std::size_t>(r)];
            if (next != -1 && !reached[static_cast<std::size_t>(next)]) {
                reached[static_cast<std::size_t>(next)] = 1;
                queue.push_back(next);
            }
        }
    }
    VertexSet cover;
    for (Vertex v = 0; v < g.order(); ++v) {
        bool is_left = left[static_cast<std::size_t>(v)], hit = reached[static_cast<std::size_t>(v)];
        if (is_left != hit) cover.push_back(v);
    }
    return cover;
}

/// alpha = n - mu, witnessed by the complement of a Koenig cover.
inline ParameterValue alpha_bipartite(const Graph& g, const Bipartition& cert) {
    auto m = mu_bipartite(g, cert);
    auto cover = koenig_cover(g, cert, m.edges);
    ParameterValue out{Param::alpha, 0, {}, {}, {}};
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : cover) in[static_cast<std::size_t>(v)] = 1;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!in[static_cast<std::size_t>(v)]) out.vertices.push_back(v);
    out.value = static_cast<int>(out.vertices.size());
    return out;
}

inline ParameterValue omega_bipartite(const Graph& g, const Bipartition& cert) {
    if (!valid_bipartition(g, cert)) throw InvalidInput("invalid bipartition certificate");
    ParameterValue out{Param::omega, 0, {}, {}, {}};
    if (g.size() > 0) {
        auto e = g.edges().front();
        out.vertices = {e.u, e.v};
    } else if (g.order() > 0) {
        out.vertices = {0};
    }
    out.value = static_cast<int>(out.vertices.size());
    return out;
}

inline ParameterValue chi_bipartite(const Graph& g, const Bipartition& cert) {
    if (!valid_bipartition(g, cert)) throw InvalidInput("invalid bipartition certificate");
    ParameterValue out{Param::chi, 0, {}, {}, {}};
    int h = g.size() > 0 ? 2 : (g.order() > 0 ? 1 : 0);
    out.colouring.colour.assign(static_cast<std::size_t>(g.order()), 0);
    if (h == 2)
        for (Vertex v : cert.right) out.colouring.colour[static_cast<std::size_t>(v)] = 1;
    out.colouring.h = out.value = h;
    return out;
}

// ---------------------------------------------------------------------------
// Chordal

/// Greedy along the elimination order: take each vertex whose closed
/// neighbourhood is still untouched.
inline ParameterValue alpha_chordal(const Graph& g, const EliminationOrder& cert) {
    if (!valid_elimination_order(g, cert)) throw InvalidInput("invalid elimination order certificate");
    std::vector<char> blocked(static_cast<std::size_t>(g.order()), 0);
    ParameterValue out{Param::alpha, 0, {}, {}, {}};
    for (Vertex v : cert.order) {
        if (blocked[static_cast<std::size_t>(v)]) continue;
        out.vertices.push_back(v);
        blocked[static_cast<std::size_t>(v)] = 1;
        for (Vertex u : g.neighbour_list(v)) blocked[static_cast<std::size_t>(u)] = 1;
    }
    out.vertices = normalized(out.vertices);
    out.value = static_cast<int>(out.vertices.size());
    return out;
}

/// Largest "vertex plus later neighbours" clique.
inline ParameterValue omega_chordal(const Graph& g, const EliminationOrder& cert) {
    if (!valid_elimination_order(g, cert)) throw InvalidInput("invalid elimination order certificate");
    std::vector<int> pos(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < cert.order.size(); ++i) pos[static_cast<std::size_t>(cert.order[i])] = static_cast<int>(i);
    ParameterValue out{Param::omega, 0, {}, {}, {}};
    for (Vertex v : cert.order) {
        VertexSet clique{v};
        for (Vertex u : g.neighbour_list(v))
            if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)]) clique.push_back(u);
        if (clique.size() > out.vertices.size()) out.vertices = normalized(clique);
    }
    out.value = static_cast<int>(out.vertices.size());
    return out;
}

/// Greedy colouring in reverse elimination order uses exactly omega colours.
inline ParameterValue chi_chordal(const Graph& g, const EliminationOrder& cert) {
    if (!valid_elimination_order(g, cert)) throw InvalidInput("invalid elimination order certificate");
    ParameterValue out{Param::chi, 0, {}, {}, {}};
    std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
    for (auto it = cert.order.rbegin(); it != cert.order.rend(); ++it) {
        std::vector<char> taken(static_cast<std::size_t>(g.order()) + 1, 0);
        for (Vertex u : g.neighbour_list(*it))
            if (colour[static_cast<std::size_t>(u)] >= 0) taken[static_cast<std::size_t>(colour[static_cast<std::size_t>(u)])] = 1;
        int c = 0;
        while (taken[static_cast<std::size_t>(c)]) ++c;
        colour[static_cast<std::size_t>(*it)] = c;
        out.value = std::max(out.value, c + 1);
    }
    out.colouring = {colour, out.value};
    return out;
}

// ---------------------------------------------------------------------------
// Cographs

inline ParameterValue alpha_cograph(const Cotree& t) {
    auto s = cograph_max_independent_set(t);
    return {Param::alpha, static_cast<int>(s.size()), s, {}, {}};
}

inline ParameterValue omega_cograph(const Cotree& t) {
    auto s = cograph_max_clique(t);
    return {Param::omega, static_cast<int>(s.size()), s, {}, {}};
}

inline ParameterValue chi_cograph(const Cotree& t) {
    auto c = cograph_optimal_colouring(t);
    return {Param::chi, c.h, {}, {}, c};
}

// ---------------------------------------------------------------------------
// Dispatch

enum class GraphClass { automatic, general, bipartite, chordal, cograph };

inline GraphClass parse_graph_class(const std::string& s) {
    if (s == "auto") return GraphClass::automatic;
    if (s == "general") return GraphClass::general;
    if (s == "bipartite") return GraphClass::bipartite;
    if (s == "chordal") return GraphClass::chordal;
    if (s == "cograph") return GraphClass::cograph;
    throw InvalidInput("unknown graph class '" + s + "'");
}

inline std::string to_string(GraphClass c) {
    switch (c) {
        case GraphClass::automatic: return "auto";
        case GraphClass::general: return "general";
        case GraphClass::bipartite: return "bipartite";
        case GraphClass::chordal: return "chordal";
        case GraphClass::cograph: return "cograph";
    }
    return "?";
}

/// Computes a parameter, using the class-specific routine when the class is
/// given (the graph must then belong to it) or detected (`automatic`).
/// Returns the class actually used through `used`.
inline ParameterValue compute_parameter(const Graph& g, Param kind, GraphClass cls = GraphClass::automatic,
                                        GraphClass* used = nullptr) {
    auto demand = [&](const ClassCertificate& c, const char* name) {
        if (auto* f = std::get_if<Forbidden>(&c)) throw NotInClass(std::string("graph is not ") + name + ": " + f->structure, f->vertices);
    };
    GraphClass pick = GraphClass::general;
    ClassCertificate cert = Forbidden{};
    if (cls == GraphClass::automatic) {
        for (auto candidate : {GraphClass::bipartite, GraphClass::chordal, GraphClass::cograph}) {
            if (candidate == GraphClass::cograph && g.order() == 0) break;
            cert = candidate == GraphClass::bipartite ? recognize_bipartite(g)
                 : candidate == GraphClass::chordal   ? recognize_chordal(g)
                                                      : recognize_cograph(g);
            if (in_class(cert)) {
                pick = candidate;
                break;
            }
        }
    } else if (cls != GraphClass::general) {
        cert = cls == GraphClass::bipartite ? recognize_bipartite(g)
             : cls == GraphClass::chordal   ? recognize_chordal(g)
                                            : recognize_cograph(g);
        demand(cert, to_string(cls).c_str());
        pick = cls;
    }
    if (used) *used = pick;

    auto alpha_of = [&]() -> ParameterValue {
        switch (pick) {
            case GraphClass::bipartite: return alpha_bipartite(g, std::get<Bipartition>(cert));
            case GraphClass::chordal: return alpha_chordal(g, std::get<EliminationOrder>(cert));
            case GraphClass::cograph: return alpha_cograph(std::get<CotreeCertificate>(cert).tree);
            default: return alpha_exact(g);
        }
    };
    switch (kind) {
        case Param::alpha: return alpha_of();
        case Param::tau: return tau_from_alpha(g, alpha_of());
        case Param::omega:
            switch (pick) {
                case GraphClass::bipartite: return omega_bipartite(g, std::get<Bipartition>(cert));
                case GraphClass::chordal: return omega_chordal(g, std::get<EliminationOrder>(cert));
                case GraphClass::cograph: return omega_cograph(std::get<CotreeCertificate>(cert).tree);
                default: return omega_exact(g);
            }
        case Param::chi:
            switch (pick) {
                case GraphClass::bipartite: return chi_bipartite(g, std::get<Bipartition>(cert));
                case GraphClass::chordal: return chi_chordal(g, std::get<EliminationOrder>(cert));
                case GraphClass::cograph: return chi_cograph(std::get<CotreeCertificate>(cert).tree);
                default: return chi_exact(g);
            }
        case Param::mu:
            if (pick == GraphClass::bipartite) return mu_bipartite(g, std::get<Bipartition>(cert));
            return mu_general(g);
    }
    throw InvalidInput("unknown parameter");
}

/// Plain value of a parameter; exact search on small graphs, class routines
/// when they apply to larger ones.
inline int parameter_value(const Graph& g, Param kind) {
    if (g.order() <= 64 && (kind == Param::alpha || kind == Param::omega || kind == Param::chi) &&
        g.order() <= (kind == Param::chi ? kExactChiCap : kExactCliqueCap)) {
        auto adj = g.adjacency_masks();
        if (kind == Param::alpha) return mask_alpha(adj);
        if (kind == Param::omega) return mask_omega(adj);
        return mask_chi(adj);
    }
    return compute_parameter(g, kind).value;
}

}  // namespace blockerlab
