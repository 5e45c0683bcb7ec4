#pragma once

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "blockerlab/colouring.hpp"
#include "blockerlab/graph.hpp"
#include "blockerlab/induced.hpp"

namespace blockerlab {

/// A cotree node: a leaf carrying a vertex, or a 0-node (disjoint union) or
/// 1-node (join) with exactly two children.
struct CotreeNode {
    int label = -1;  ///< -1 leaf, 0 union, 1 join
    int left = -1;
    int right = -1;
    Vertex vertex = -1;

    bool is_leaf() const noexcept { return label < 0; }
};

/// Binary cotree. Nodes are stored children-before-parent, so a forward
/// sweep over `nodes` is a valid bottom-up traversal; `root` is the last node.
struct Cotree {
    std::vector<CotreeNode> nodes;
    int root = -1;

    int leaf_count() const {
        return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [](const CotreeNode& x) { return x.is_leaf(); }));
    }
    const CotreeNode& node(int p) const { return nodes.at(static_cast<std::size_t>(p)); }

    int add_leaf(Vertex v) {
        nodes.push_back({-1, -1, -1, v});
        return root = static_cast<int>(nodes.size()) - 1;
    }
    int add_inner(int label, int left, int right) {
        nodes.push_back({label, left, right, -1});
        return root = static_cast<int>(nodes.size()) - 1;
    }
};

/// Checks shape: binary inner nodes, children before parents, every node
/// reached once from the root, leaves a bijection onto 0..n-1.
inline void validate_cotree(const Cotree& t) {
    if (t.nodes.empty() || t.root != static_cast<int>(t.nodes.size()) - 1) throw InvalidInput("cotree: bad root");
    std::vector<int> parents(t.nodes.size(), 0);
    std::vector<int> seen_vertex;
    for (std::size_t p = 0; p < t.nodes.size(); ++p) {
        const auto& x = t.nodes[p];
        if (x.is_leaf()) {
            seen_vertex.push_back(x.vertex);
            continue;
        }
        if (x.label != 0 && x.label != 1) throw InvalidInput("cotree: label must be 0 or 1");
        for (int c : {x.left, x.right}) {
            if (c < 0 || c >= static_cast<int>(p)) throw InvalidInput("cotree: child index out of order");
            ++parents[static_cast<std::size_t>(c)];
        }
    }
    for (std::size_t p = 0; p + 1 < t.nodes.size(); ++p)
        if (parents[p] != 1) throw InvalidInput("cotree: node without unique parent");
    std::sort(seen_vertex.begin(), seen_vertex.end());
    for (std::size_t i = 0; i < seen_vertex.size(); ++i)
        if (seen_vertex[i] != static_cast<int>(i)) throw InvalidInput("cotree: leaves are not a bijection onto 0..n-1");
}

namespace detail {

inline int build_cotree_rec(const Graph& g, const VertexSet& vs, Cotree& t, std::mt19937_64* rng) {
    if (vs.size() == 1) return t.add_leaf(vs[0]);
    auto sub = induced_subgraph(g, vs);
    int label = 0;
    auto comps = connected_components(sub.graph);
    if (comps.count == 1) {
        label = 1;
        comps = connected_components(complement(sub.graph));
    }
    if (comps.count == 1) {
        static const Graph p4 = [] {
            Graph p(4);
            p.add_edge(0, 1);
            p.add_edge(1, 2);
            p.add_edge(2, 3);
            return p;
        }();
        auto copy = contains_induced(sub.graph, p4);
        std::vector<Vertex> witness;
        if (copy)
            for (Vertex v : *copy) witness.push_back(sub.new_to_old[static_cast<std::size_t>(v)]);
        throw NotInClass("graph is not a cograph: induced P4", witness);
    }
    auto parts = comps.members();
    for (auto& part : parts)
        for (auto& v : part) v = sub.new_to_old[static_cast<std::size_t>(v)];
    if (rng) std::shuffle(parts.begin(), parts.end(), *rng);
    int acc = build_cotree_rec(g, parts[0], t, rng);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        int next = build_cotree_rec(g, parts[i], t, rng);
        acc = t.add_inner(label, acc, next);
    }
    return acc;
}

}  // namespace detail

/// Cotree by recursive component / co-component splitting. Unions and joins
/// of three or more parts are chained left-nested; parts are taken in order
/// of their smallest vertex. Throws NotInClass carrying an induced P4.
inline Cotree build_cotree(const Graph& g) {
    if (g.order() == 0) throw InvalidInput("cotree of the empty graph");
    Cotree t;
    VertexSet all(static_cast<std::size_t>(g.order()));
    std::iota(all.begin(), all.end(), 0);
    detail::build_cotree_rec(g, all, t, nullptr);
    return t;
}

/// As build_cotree, but chains the parts of each union/join in random order.
inline Cotree build_cotree_shuffled(const Graph& g, std::mt19937_64& rng) {
    if (g.order() == 0) throw InvalidInput("cotree of the empty graph");
    Cotree t;
    VertexSet all(static_cast<std::size_t>(g.order()));
    std::iota(all.begin(), all.end(), 0);
    detail::build_cotree_rec(g, all, t, &rng);
    return t;
}

/// Leaves (vertices) below every node.
inline std::vector<VertexSet> node_leaves(const Cotree& t) {
    std::vector<VertexSet> out(t.nodes.size());
    for (std::size_t p = 0; p < t.nodes.size(); ++p) {
        const auto& x = t.nodes[p];
        if (x.is_leaf()) {
            out[p] = {x.vertex};
        } else {
            out[p] = out[static_cast<std::size_t>(x.left)];
            const auto& r = out[static_cast<std::size_t>(x.right)];
            out[p].insert(out[p].end(), r.begin(), r.end());
            std::sort(out[p].begin(), out[p].end());
        }
    }
    return out;
}

/// The cograph a cotree denotes.
inline Graph realize_cotree(const Cotree& t) {
    validate_cotree(t);
    auto leaves = node_leaves(t);
    Graph g(t.leaf_count());
    for (const auto& x : t.nodes)
        if (!x.is_leaf() && x.label == 1)
            for (Vertex u : leaves[static_cast<std::size_t>(x.left)])
                for (Vertex v : leaves[static_cast<std::size_t>(x.right)]) g.add_edge(u, v);
    return g;
}

struct NodeStats {
    std::vector<int> size;
    std::vector<int> chi;
};

inline NodeStats node_stats(const Cotree& t) {
    NodeStats s;
    s.size.resize(t.nodes.size());
    s.chi.resize(t.nodes.size());
    for (std::size_t p = 0; p < t.nodes.size(); ++p) {
        const auto& x = t.nodes[p];
        if (x.is_leaf()) {
            s.size[p] = s.chi[p] = 1;
            continue;
        }
        auto q = static_cast<std::size_t>(x.left), r = static_cast<std::size_t>(x.right);
        s.size[p] = s.size[q] + s.size[r];
        s.chi[p] = x.label == 0 ? std::max(s.chi[q], s.chi[r]) : s.chi[q] + s.chi[r];
    }
    return s;
}

/// Nested s-expression, e.g. `(1 (0 0 1) 2)`.
inline std::string cotree_sexpr(const Cotree& t) {
    auto rec = [&](auto&& self, int p, std::ostringstream& out) -> void {
        const auto& x = t.node(p);
        if (x.is_leaf()) {
            out << x.vertex;
            return;
        }
        out << '(' << x.label << ' ';
        self(self, x.left, out);
        out << ' ';
        self(self, x.right, out);
        out << ')';
    };
    std::ostringstream out;
    rec(rec, t.root, out);
    return out.str();
}

/// Maximum independent set of the cograph: union at 0-nodes, larger side at 1-nodes.
inline VertexSet cograph_max_independent_set(const Cotree& t) {
    std::vector<VertexSet> best(t.nodes.size());
    for (std::size_t p = 0; p < t.nodes.size(); ++p) {
        const auto& x = t.nodes[p];
        if (x.is_leaf()) {
            best[p] = {x.vertex};
            continue;
        }
        const auto& a = best[static_cast<std::size_t>(x.left)];
        const auto& b = best[static_cast<std::size_t>(x.right)];
        if (x.label == 0) {
            best[p] = a;
            best[p].insert(best[p].end(), b.begin(), b.end());
        } else {
            best[p] = a.size() >= b.size() ? a : b;
        }
    }
    return normalized(best[static_cast<std::size_t>(t.root)]);
}

/// Maximum clique of the cograph: larger side at 0-nodes, union at 1-nodes.
inline VertexSet cograph_max_clique(const Cotree& t) {
    std::vector<VertexSet> best(t.nodes.size());
    for (std::size_t p = 0; p < t.nodes.size(); ++p) {
        const auto& x = t.nodes[p];
        if (x.is_leaf()) {
            best[p] = {x.vertex};
            continue;
        }
        const auto& a = best[static_cast<std::size_t>(x.left)];
        const auto& b = best[static_cast<std::size_t>(x.right)];
        if (x.label == 1) {
            best[p] = a;
            best[p].insert(best[p].end(), b.begin(), b.end());
        } else {
            best[p] = a.size() >= b.size() ? a : b;
        }
    }
    return normalized(best[static_cast<std::size_t>(t.root)]);
}

/// Optimal proper colouring: children share colours at 0-nodes, the right
/// child is shifted past the left child's colours at 1-nodes.
inline Colouring cograph_optimal_colouring(const Cotree& t) {
    auto stats = node_stats(t);
    Colouring c;
    c.colour.assign(static_cast<std::size_t>(t.leaf_count()), 0);
    // Shift per node, pushed top-down.
    std::vector<int> shift(t.nodes.size(), 0);
    for (auto p = static_cast<int>(t.nodes.size()) - 1; p >= 0; --p) {
        const auto& x = t.node(p);
        if (x.is_leaf()) {
            c.colour[static_cast<std::size_t>(x.vertex)] = shift[static_cast<std::size_t>(p)];
            continue;
        }
        shift[static_cast<std::size_t>(x.left)] = shift[static_cast<std::size_t>(p)];
        shift[static_cast<std::size_t>(x.right)] =
            shift[static_cast<std::size_t>(p)] + (x.label == 1 ? stats.chi[static_cast<std::size_t>(x.left)] : 0);
    }
    c.h = stats.chi[static_cast<std::size_t>(t.root)];
    return c;
}

}  // namespace blockerlab
