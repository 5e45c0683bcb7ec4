#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "blockerlab/cotree.hpp"
#include "blockerlab/graph.hpp"

namespace blockerlab {

/// Two independent sides covering V.
struct Bipartition {
    VertexSet left;
    VertexSet right;
};

/// Perfect elimination order: each vertex's later neighbours form a clique.
struct EliminationOrder {
    std::vector<Vertex> order;
};

struct CotreeCertificate {
    Cotree tree;
};

/// Independent parts, all cross pairs adjacent.
struct MultipartiteParts {
    std::vector<VertexSet> parts;
};

/// Negative answer: a forbidden structure on the listed vertices
/// ("odd cycle", "chordless cycle", "induced P4", "induced P2+P1", "triangle").
struct Forbidden {
    std::string structure;
    std::vector<Vertex> vertices;
};

using ClassCertificate = std::variant<Bipartition, EliminationOrder, CotreeCertificate, MultipartiteParts, Forbidden>;

inline bool in_class(const ClassCertificate& c) { return !std::holds_alternative<Forbidden>(c); }

// ---------------------------------------------------------------------------
// Validators

inline bool valid_bipartition(const Graph& g, const Bipartition& b) {
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    for (int s = 0; s < 2; ++s)
        for (Vertex v : s == 0 ? b.left : b.right) {
            if (!g.contains(v) || side[static_cast<std::size_t>(v)] != -1) return false;
            side[static_cast<std::size_t>(v)] = s;
        }
    if (std::count(side.begin(), side.end(), -1) != 0) return false;
    for (const auto& e : g.edges())
        if (side[static_cast<std::size_t>(e.u)] == side[static_cast<std::size_t>(e.v)]) return false;
    return true;
}

inline bool valid_elimination_order(const Graph& g, const EliminationOrder& o) {
    if (static_cast<int>(o.order.size()) != g.order()) return false;
    std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < o.order.size(); ++i) {
        Vertex v = o.order[i];
        if (!g.contains(v) || pos[static_cast<std::size_t>(v)] != -1) return false;
        pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    for (Vertex v : o.order) {
        std::vector<Vertex> later;
        for (Vertex u : g.neighbour_list(v))
            if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)]) later.push_back(u);
        if (!is_clique(g, later)) return false;
    }
    return true;
}

inline bool valid_multipartite_parts(const Graph& g, const MultipartiteParts& m) {
    std::vector<int> part(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < m.parts.size(); ++i) {
        if (m.parts[i].empty()) return false;
        for (Vertex v : m.parts[i]) {
            if (!g.contains(v) || part[static_cast<std::size_t>(v)] != -1) return false;
            part[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }
    if (std::count(part.begin(), part.end(), -1) != 0) return false;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v) != (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)])) return false;
    return true;
}

inline bool valid_cotree_for(const Graph& g, const Cotree& t) {
    try {
        return realize_cotree(t) == g;
    } catch (const InvalidInput&) {
        return false;
    }
}

/// Checks a positive certificate against g; Forbidden certificates are checked
/// only for the vertex count of their structure.
inline bool validate_certificate(const Graph& g, const ClassCertificate& c) {
    if (auto* b = std::get_if<Bipartition>(&c)) return valid_bipartition(g, *b);
    if (auto* o = std::get_if<EliminationOrder>(&c)) return valid_elimination_order(g, *o);
    if (auto* t = std::get_if<CotreeCertificate>(&c)) return valid_cotree_for(g, t->tree);
    if (auto* m = std::get_if<MultipartiteParts>(&c)) return valid_multipartite_parts(g, *m);
    return false;
}

// ---------------------------------------------------------------------------
// Recognizers

/// BFS 2-colouring; on failure an odd cycle through two tree paths.
inline ClassCertificate recognize_bipartite(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> side(n, -1), parent(n, -1), depth(n, 0);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[static_cast<std::size_t>(s)] != -1) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex u : g.neighbour_list(v)) {
                auto ui = static_cast<std::size_t>(u), vi = static_cast<std::size_t>(v);
                if (side[ui] == -1) {
                    side[ui] = 1 - side[vi];
                    parent[ui] = v;
                    depth[ui] = depth[vi] + 1;
                    queue.push_back(u);
                } else if (side[ui] == side[vi]) {
                    std::vector<Vertex> a{v}, b{u};
                    while (a.back() != b.back()) {
                        if (depth[static_cast<std::size_t>(a.back())] >= depth[static_cast<std::size_t>(b.back())])
                            a.push_back(parent[static_cast<std::size_t>(a.back())]);
                        else
                            b.push_back(parent[static_cast<std::size_t>(b.back())]);
                    }
                    b.pop_back();
                    std::reverse(b.begin(), b.end());
                    a.insert(a.end(), b.begin(), b.end());
                    return Forbidden{"odd cycle", a};
                }
            }
        }
    }
    Bipartition b;
    for (Vertex v = 0; v < g.order(); ++v) (side[static_cast<std::size_t>(v)] == 0 ? b.left : b.right).push_back(v);
    return b;
}

/// Lexicographic BFS by partition refinement; returns the visit order.
inline std::vector<Vertex> lex_bfs(const Graph& g) {
    std::vector<std::vector<Vertex>> cells;
    if (g.order() > 0) {
        cells.emplace_back(static_cast<std::size_t>(g.order()));
        std::iota(cells[0].begin(), cells[0].end(), 0);
    }
    std::vector<Vertex> visit;
    while (!cells.empty()) {
        Vertex v = cells.front().front();
        cells.front().erase(cells.front().begin());
        if (cells.front().empty()) cells.erase(cells.begin());
        visit.push_back(v);
        std::vector<std::vector<Vertex>> next;
        for (auto& cell : cells) {
            std::vector<Vertex> in, out;
            for (Vertex u : cell) (g.adjacent(u, v) ? in : out).push_back(u);
            if (!in.empty()) next.push_back(std::move(in));
            if (!out.empty()) next.push_back(std::move(out));
        }
        cells.swap(next);
    }
    return visit;
}

namespace detail {

/// Chordless cycle v, x, ..., y closed by a shortest x-y path avoiding the
/// rest of N[v]. Empty if no such path exists.
inline std::vector<Vertex> chordless_cycle_through(const Graph& g, Vertex v, Vertex x, Vertex y) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<char> blocked(n, 0);
    blocked[static_cast<std::size_t>(v)] = 1;
    for (Vertex u : g.neighbour_list(v)) blocked[static_cast<std::size_t>(u)] = 1;
    blocked[static_cast<std::size_t>(x)] = blocked[static_cast<std::size_t>(y)] = 0;
    std::vector<int> parent(n, -2);
    parent[static_cast<std::size_t>(x)] = -1;
    std::deque<Vertex> queue{x};
    while (!queue.empty()) {
        Vertex a = queue.front();
        queue.pop_front();
        if (a == y) break;
        for (Vertex b : g.neighbour_list(a)) {
            auto bi = static_cast<std::size_t>(b);
            if (blocked[bi] || parent[bi] != -2) continue;
            if (a == x && b == y) continue;
            parent[bi] = a;
            queue.push_back(b);
        }
    }
    if (parent[static_cast<std::size_t>(y)] == -2) return {};
    std::vector<Vertex> path;
    for (Vertex a = y; a != -1; a = parent[static_cast<std::size_t>(a)]) path.push_back(a);
    std::reverse(path.begin(), path.end());
    path.insert(path.begin(), v);
    return path;
}

inline std::vector<Vertex> find_chordless_cycle(const Graph& g, Vertex hint_v, Vertex hint_x, Vertex hint_y) {
    auto c = chordless_cycle_through(g, hint_v, hint_x, hint_y);
    if (!c.empty()) return c;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto nb = g.neighbour_list(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                c = chordless_cycle_through(g, v, nb[i], nb[j]);
                if (!c.empty()) return c;
            }
    }
    return {};
}

}  // namespace detail

/// Reverse LexBFS order, verified as a perfect elimination order. On failure
/// returns a chordless cycle of length at least 4.
inline ClassCertificate recognize_chordal(const Graph& g) {
    auto order = lex_bfs(g);
    std::reverse(order.begin(), order.end());
    std::vector<int> pos(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    for (Vertex v : order) {
        Vertex first = -1;
        std::vector<Vertex> later;
        for (Vertex u : g.neighbour_list(v))
            if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)]) later.push_back(u);
        for (Vertex u : later)
            if (first == -1 || pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(first)]) first = u;
        for (Vertex u : later)
            if (u != first && !g.adjacent(u, first))
                return Forbidden{"chordless cycle", detail::find_chordless_cycle(g, v, first, u)};
    }
    return EliminationOrder{order};
}

inline ClassCertificate recognize_cograph(const Graph& g) {
    if (g.order() == 0) return Forbidden{"empty graph", {}};
    try {
        return CotreeCertificate{build_cotree(g)};
    } catch (const NotInClass& e) {
        return Forbidden{"induced P4", e.witness()};
    }
}

/// Complement components must be independent in g. Otherwise a shortest
/// complement path p0 p1 p2 between two g-adjacent vertices of one
/// complement component gives the edge p0p2 and the vertex p1 missing both.
inline ClassCertificate recognize_complete_multipartite(const Graph& g) {
    Graph co = complement(g);
    auto comps = connected_components(co);
    auto parts = comps.members();
    for (const auto& part : parts) {
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = i + 1; j < part.size(); ++j) {
                if (!g.adjacent(part[i], part[j])) continue;
                std::vector<int> parent(static_cast<std::size_t>(g.order()), -2);
                parent[static_cast<std::size_t>(part[i])] = -1;
                std::deque<Vertex> queue{part[i]};
                while (!queue.empty()) {
                    Vertex a = queue.front();
                    queue.pop_front();
                    for (Vertex b : co.neighbour_list(a))
                        if (parent[static_cast<std::size_t>(b)] == -2) {
                            parent[static_cast<std::size_t>(b)] = a;
                            queue.push_back(b);
                        }
                }
                std::vector<Vertex> path;
                for (Vertex a = part[j]; a != -1; a = parent[static_cast<std::size_t>(a)]) path.push_back(a);
                // path runs v ... u; its first three vertices form the witness.
                return Forbidden{"induced P2+P1", {path[0], path[2], path[1]}};
            }
    }
    return MultipartiteParts{parts};
}

inline std::optional<std::vector<Vertex>> find_triangle(const Graph& g) {
    for (const auto& e : g.edges()) {
        auto common = g.neighbours(e.u) & g.neighbours(e.v);
        auto w = common.find_first();
        if (w != Bitset::npos) return std::vector<Vertex>{e.u, e.v, static_cast<Vertex>(w)};
    }
    return std::nullopt;
}

inline bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

inline std::optional<Bipartition> as_bipartite(const Graph& g) {
    auto c = recognize_bipartite(g);
    if (auto* b = std::get_if<Bipartition>(&c)) return *b;
    return std::nullopt;
}

inline std::optional<EliminationOrder> as_chordal(const Graph& g) {
    auto c = recognize_chordal(g);
    if (auto* o = std::get_if<EliminationOrder>(&c)) return *o;
    return std::nullopt;
}

}  // namespace blockerlab
