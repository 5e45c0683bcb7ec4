#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "blockerlab/colouring.hpp"
#include "blockerlab/cotree.hpp"
#include "blockerlab/graph.hpp"

namespace blockerlab {

struct MonoSolution {
    int count = 0;
    Colouring colouring;
};

namespace detail {

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;
inline constexpr std::uint64_t kMaxLayerCells = 4'000'000;

inline std::uint64_t checked_cells(int radix, int length) {
    std::uint64_t cells = 1;
    for (int i = 0; i < length; ++i) {
        cells *= static_cast<std::uint64_t>(radix);
        if (cells > kMaxLayerCells) throw CapacityExceeded("colouring DP table too large");
    }
    return cells;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Fixed number of colours

/// Minimum monochromatic edges over all h-colourings of the cograph, by a
/// table per cotree node keyed by the class-size tuple (a_1..a_h) summing
/// to the node's size. A 0-node adds the children's values; a 1-node also
/// adds sum_i a^q_i a^r_i. Only min(h, n) colours are ever useful, so h is
/// capped there.
inline MonoSolution min_mono_edges_fixed_h(const Cotree& t, int h) {
    if (h < 1) throw InvalidInput("h must be at least 1");
    validate_cotree(t);
    const int n = t.leaf_count();
    const int hh = std::min(h, n);
    using Table = std::map<std::vector<int>, int>;
    std::vector<Table> table(t.nodes.size());
    std::uint64_t total_cells = 0;
    for (std::size_t p = 0; p < t.nodes.size(); ++p) {
        const auto& x = t.nodes[p];
        if (x.is_leaf()) {
            for (int i = 0; i < hh; ++i) {
                std::vector<int> a(static_cast<std::size_t>(hh), 0);
                a[static_cast<std::size_t>(i)] = 1;
                table[p][a] = 0;
            }
            continue;
        }
        const auto& tq = table[static_cast<std::size_t>(x.left)];
        const auto& tr = table[static_cast<std::size_t>(x.right)];
        if (tq.size() * tr.size() > 50 * detail::kMaxLayerCells) throw CapacityExceeded("colouring DP table too large");
        std::vector<int> a(static_cast<std::size_t>(hh));
        for (const auto& [aq, vq] : tq)
            for (const auto& [ar, vr] : tr) {
                int cost = vq + vr;
                for (std::size_t i = 0; i < a.size(); ++i) {
                    a[i] = aq[i] + ar[i];
                    if (x.label == 1) cost += aq[i] * ar[i];
                }
                auto [it, fresh] = table[p].try_emplace(a, cost);
                if (!fresh) it->second = std::min(it->second, cost);
            }
        total_cells += table[p].size();
        if (total_cells > detail::kMaxLayerCells) throw CapacityExceeded("colouring DP tables too large");
    }

    // Best root tuple, then walk down re-deriving the split of each tuple.
    const auto root = static_cast<std::size_t>(t.root);
    auto best = std::min_element(table[root].begin(), table[root].end(),
                                 [](const auto& u, const auto& v) { return u.second < v.second; });
    MonoSolution out{best->second, {std::vector<int>(static_cast<std::size_t>(n), 0), h}};
    auto descend = [&](auto&& self, std::size_t p, const std::vector<int>& a) -> void {
        const auto& x = t.nodes[p];
        if (x.is_leaf()) {
            for (int i = 0; i < hh; ++i)
                if (a[static_cast<std::size_t>(i)] == 1) out.colouring.colour[static_cast<std::size_t>(x.vertex)] = i;
            return;
        }
        auto q = static_cast<std::size_t>(x.left), r = static_cast<std::size_t>(x.right);
        const int target = table[p].at(a);
        std::vector<int> ar(a.size());
        for (const auto& [aq, vq] : table[q]) {
            int cross = 0;
            bool fits = true;
            for (std::size_t i = 0; i < a.size() && fits; ++i) {
                ar[i] = a[i] - aq[i];
                fits = ar[i] >= 0;
                cross += aq[i] * ar[i];
            }
            if (!fits) continue;
            auto it = table[r].find(ar);
            if (it == table[r].end() || vq + it->second + (x.label == 1 ? cross : 0) != target) continue;
            auto split = ar;
            self(self, q, aq);
            self(self, r, split);
            return;
        }
        throw Error("colouring DP reconstruction failed");
    };
    descend(descend, root, best->first);
    return out;
}

inline MonoSolution min_mono_edges_fixed_h(const Graph& g, int h) { return min_mono_edges_fixed_h(build_cotree(g), h); }

// ---------------------------------------------------------------------------
// Matchings of tuples

/// Index pairs (left, right) into two tuples of equal length; 0-based.
struct LambdaMatching {
    std::vector<std::pair<int, int>> pairs;
};

inline void validate_matching(const LambdaMatching& mu, std::size_t left_len, std::size_t right_len) {
    std::vector<char> l(left_len, 0), r(right_len, 0);
    for (const auto& [i, j] : mu.pairs) {
        if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= left_len || static_cast<std::size_t>(j) >= right_len)
            throw InvalidInput("matching index out of range");
        if (l[static_cast<std::size_t>(i)] || r[static_cast<std::size_t>(j)]) throw InvalidInput("matching repeats an index");
        l[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(j)] = 1;
    }
}

namespace detail {

inline std::vector<int> sorted_merge(const LambdaMatching& mu, const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<char> ul(a.size(), 0), ur(b.size(), 0);
    std::vector<int> out;
    for (const auto& [i, j] : mu.pairs) {
        out.push_back(a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(j)]);
        ul[static_cast<std::size_t>(i)] = ur[static_cast<std::size_t>(j)] = 1;
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!ul[i]) out.push_back(a[i]);
    for (std::size_t j = 0; j < b.size(); ++j)
        if (!ur[j]) out.push_back(b[j]);
    std::sort(out.begin(), out.end());
    return out;
}

inline long long matched_value(const LambdaMatching& mu, const std::vector<int>& a, const std::vector<int>& b) {
    long long v = 0;
    for (const auto& [i, j] : mu.pairs) v += static_cast<long long>(a[static_cast<std::size_t>(i)]) * b[static_cast<std::size_t>(j)];
    return v;
}

}  // namespace detail

/// Sorted merge: matched sums plus every unmatched entry of both tuples, ascending.
inline std::vector<int> lambda_merge(const LambdaMatching& mu, const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw InvalidInput("merged tuples must have equal length");
    validate_matching(mu, a.size(), b.size());
    return detail::sorted_merge(mu, a, b);
}

/// Sum of products over matched pairs.
inline long long lambda_val(const LambdaMatching& mu, const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw InvalidInput("matched tuples must have equal length");
    validate_matching(mu, a.size(), b.size());
    return detail::matched_value(mu, a, b);
}

/// Every lambda-matching between tuples of the given lengths, left indices increasing.
inline std::vector<LambdaMatching> all_matchings(int left_length, int right_length, int lambda) {
    std::vector<LambdaMatching> out;
    if (lambda < 0 || lambda > left_length || lambda > right_length) return out;
    std::vector<int> left;
    std::vector<char> used(static_cast<std::size_t>(right_length), 0);
    LambdaMatching cur;
    auto assign = [&](auto&& self, std::size_t pos) -> void {
        if (pos == left.size()) {
            out.push_back(cur);
            return;
        }
        for (int j = 0; j < right_length; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            used[static_cast<std::size_t>(j)] = 1;
            cur.pairs.push_back({left[pos], j});
            self(self, pos + 1);
            cur.pairs.pop_back();
            used[static_cast<std::size_t>(j)] = 0;
        }
    };
    auto choose = [&](auto&& self, int from) -> void {
        if (static_cast<int>(left.size()) == lambda) {
            assign(assign, 0);
            return;
        }
        for (int i = from; i < left_length; ++i) {
            left.push_back(i);
            self(self, i + 1);
            left.pop_back();
        }
    };
    choose(choose, 0);
    return out;
}

inline std::vector<LambdaMatching> all_matchings(int length, int lambda) { return all_matchings(length, length, lambda); }

// ---------------------------------------------------------------------------
// chi - d colours

namespace detail {

/// How a table cell was obtained; enough to rebuild a colouring.
struct DeficiencyChoice {
    bool pad = false;  ///< same node with one colour fewer, plus an empty class
    bool join = false;
    bool swapped = false;  ///< 0-node: q is the right child
    int offset = 0;        ///< 0-node: rank j of r pairs with rank offset + j of q
    int q_ell = 0, q_delta = 0;
    std::uint64_t q_index = 0;
    int r_ell = 0, r_delta = 0;
    std::uint64_t r_index = 0;
    std::vector<std::pair<int, int>> pairs;  ///< 1-node: shared ranks
};

/// f_ell(a, Delta) for one node and fixed (ell, Delta): the fewest
/// monochromatic edges of a colouring of T_p from a palette of
/// chi(T_p) - Delta colours (classes may be empty) whose ell smallest classes,
/// sorted, are bounded by a. Tuples are sorted ascending and encoded in
/// radix size+1; unsorted slots stay infinite.
struct Layer {
    int ell = 0;
    int delta = 0;
    int radix = 1;
    std::vector<int> cost;
    std::vector<std::uint64_t> source;  ///< cell whose choice this cell reuses
    std::unordered_map<std::uint64_t, DeficiencyChoice> choice;
    std::vector<std::uint64_t> frontier;  ///< finite cells not dominated by a smaller tuple

    std::vector<int> decode(std::uint64_t index) const {
        std::vector<int> a(static_cast<std::size_t>(ell));
        for (int i = 0; i < ell; ++i) {
            a[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(radix));
            index /= static_cast<std::uint64_t>(radix);
        }
        return a;
    }
    std::uint64_t encode(const std::vector<int>& a) const {
        std::uint64_t idx = 0, w = 1;
        for (int i = 0; i < ell; ++i, w *= static_cast<std::uint64_t>(radix)) idx += w * static_cast<std::uint64_t>(a[static_cast<std::size_t>(i)]);
        return idx;
    }
    void offer(const std::vector<int>& a, int value, DeficiencyChoice&& how) {
        auto idx = encode(a);
        if (value < cost[idx]) {
            cost[idx] = value;
            source[idx] = idx;
            choice[idx] = std::move(how);
        }
    }
};

inline bool is_sorted_tuple(const std::vector<int>& a) { return std::is_sorted(a.begin(), a.end()); }

/// Propagates each value to every larger sorted tuple and records the
/// undominated cells.
inline void close_upwards(Layer& layer) {
    const auto cells = layer.cost.size();
    for (std::uint64_t idx = 0; idx < cells; ++idx) {
        auto a = layer.decode(idx);
        if (!is_sorted_tuple(a)) continue;
        bool improved_from_below = false;
        std::uint64_t w = 1;
        for (int i = 0; i < layer.ell; ++i, w *= static_cast<std::uint64_t>(layer.radix)) {
            auto ui = static_cast<std::size_t>(i);
            if (a[ui] == 0 || (i > 0 && a[ui - 1] > a[ui] - 1)) continue;
            auto pred = idx - w;
            if (layer.cost[pred] <= layer.cost[idx]) {
                if (layer.cost[pred] < layer.cost[idx]) {
                    layer.cost[idx] = layer.cost[pred];
                    layer.source[idx] = layer.source[pred];
                }
                improved_from_below = true;
            }
        }
        if (!improved_from_below && layer.cost[idx] < kInf) layer.frontier.push_back(idx);
    }
}

}  // namespace detail

/// Minimum monochromatic edges over all (chi(G) - d)-colourings of a cograph.
///
/// Per node and (ell, Delta) with ell + Delta <= d, a table over sorted
/// ell-tuples bounding the ell smallest colour classes (see detail::Layer).
/// 0-nodes pair the i-th smallest classes of the children after aligning
/// their palettes; 1-nodes let lambda classes of each child share a colour,
/// paying the product of their bounds. The answer is f_0((), d) at the root,
/// and a colouring is rebuilt from the recorded choices.
inline MonoSolution min_mono_edges_deficiency(const Cotree& t, int d) {
    validate_cotree(t);
    auto stats = node_stats(t);
    const int chi = stats.chi[static_cast<std::size_t>(t.root)];
    if (d < 0 || d >= chi) throw InvalidInput("d must lie in [0, chi-1] = [0, " + std::to_string(chi - 1) + "]");
    using detail::DeficiencyChoice;
    using detail::kInf;
    using detail::Layer;

    // layers[p][ell][Delta]
    std::vector<std::vector<std::vector<Layer>>> layers(t.nodes.size());
    std::uint64_t total_cells = 0;
    for (std::size_t p = 0; p < t.nodes.size(); ++p) {
        auto& lp = layers[p];
        lp.resize(static_cast<std::size_t>(d + 1));
        const int size = stats.size[p];
        const int chi_p = stats.chi[p];
        for (int ell = 0; ell <= d; ++ell) {
            for (int delta = 0; ell + delta <= d; ++delta) {
                Layer layer;
                layer.ell = ell;
                layer.delta = delta;
                layer.radix = size + 1;
                auto cells = detail::checked_cells(layer.radix, ell);
                total_cells += cells;
                if (total_cells > 16 * detail::kMaxLayerCells) throw CapacityExceeded("colouring DP tables too large");
                layer.cost.assign(cells, kInf);
                layer.source.resize(cells);
                for (std::uint64_t i = 0; i < cells; ++i) layer.source[i] = i;
                lp[static_cast<std::size_t>(ell)].push_back(std::move(layer));
            }
        }
        auto palette_ok = [&](int ell, int delta) { return chi_p - delta >= 1 && ell <= chi_p - delta; };
        auto layer_at = [&](std::size_t node, int ell, int delta) -> Layer& {
            return layers[node][static_cast<std::size_t>(ell)][static_cast<std::size_t>(delta)];
        };
        const auto& x = t.nodes[p];
        if (x.is_leaf()) {
            layer_at(p, 0, 0).offer({}, 0, {});
            if (d >= 1) layer_at(p, 1, 0).offer({1}, 0, {});
        } else if (x.label == 0) {
            auto q = static_cast<std::size_t>(x.left), r = static_cast<std::size_t>(x.right);
            bool swapped = false;
            if (stats.chi[q] < stats.chi[r]) {
                std::swap(q, r);
                swapped = true;
            }
            const int gap = stats.chi[q] - stats.chi[r];
            for (int ell = 0; ell <= d; ++ell)
                for (int delta = 0; ell + delta <= d; ++delta) {
                    if (!palette_ok(ell, delta)) continue;
                    Layer& out = layer_at(p, ell, delta);
                    const Layer& lq = layer_at(q, ell, delta);
                    if (delta >= gap) {
                        const Layer& lr = layer_at(r, ell, delta - gap);
                        for (auto iq : lq.frontier)
                            for (auto ir : lr.frontier) {
                                auto a = lq.decode(iq), b = lr.decode(ir);
                                for (int i = 0; i < ell; ++i) a[static_cast<std::size_t>(i)] += b[static_cast<std::size_t>(i)];
                                out.offer(a, lq.cost[iq] + lr.cost[ir],
                                          {false, false, swapped, 0, ell, delta, iq, ell, delta - gap, ir, {}});
                            }
                    } else if (delta + ell >= gap) {
                        const int offset = gap - delta;
                        const Layer& lr = layer_at(r, ell - offset, 0);
                        for (auto iq : lq.frontier)
                            for (auto ir : lr.frontier) {
                                auto a = lq.decode(iq), b = lr.decode(ir);
                                for (int i = offset; i < ell; ++i) a[static_cast<std::size_t>(i)] += b[static_cast<std::size_t>(i - offset)];
                                out.offer(a, lq.cost[iq] + lr.cost[ir],
                                          {false, false, swapped, offset, ell, delta, iq, ell - offset, 0, ir, {}});
                            }
                    } else {
                        const int offset = gap - delta;
                        const Layer& lr = layer_at(r, 0, 0);
                        if (lr.cost[0] >= kInf) continue;
                        for (auto iq : lq.frontier)
                            out.offer(lq.decode(iq), lq.cost[iq] + lr.cost[0], {false, false, swapped, offset, ell, delta, iq, 0, 0, 0, {}});
                    }
                }
        } else {
            auto q = static_cast<std::size_t>(x.left), r = static_cast<std::size_t>(x.right);
            // A child with fewer than ell + lambda palette colours contributes all of them.
            for (int big = 0; big <= d; ++big)
                for (int lambda = 0; lambda <= big; ++lambda) {
                    const int ell = big - lambda;
                    for (int dq = 0; big + dq <= d; ++dq)
                        for (int dr = 0; big + dq + dr <= d; ++dr) {
                            const int delta = dq + dr + lambda;
                            const int lq_len = std::min(big, stats.chi[q] - dq);
                            const int lr_len = std::min(big, stats.chi[r] - dr);
                            if (!palette_ok(ell, delta) || lq_len < 0 || lr_len < 0) continue;
                            if (stats.chi[q] - dq < 1 || stats.chi[r] - dr < 1 || lq_len + lr_len - lambda < ell) continue;
                            Layer& out = layer_at(p, ell, delta);
                            const Layer& lq = layer_at(q, lq_len, dq);
                            const Layer& lr = layer_at(r, lr_len, dr);
                            auto matchings = all_matchings(lq_len, lr_len, lambda);
                            for (auto iq : lq.frontier) {
                                auto a = lq.decode(iq);
                                for (auto ir : lr.frontier) {
                                    auto b = lr.decode(ir);
                                    for (const auto& mu : matchings) {
                                        auto merged = detail::sorted_merge(mu, a, b);
                                        merged.resize(static_cast<std::size_t>(ell));
                                        auto value = lq.cost[iq] + lr.cost[ir] + static_cast<int>(detail::matched_value(mu, a, b));
                                        out.offer(merged, value, {false, true, false, 0, lq_len, dq, iq, lr_len, dr, ir, mu.pairs});
                                    }
                                }
                            }
                        }
                }
        }
        // A colouring with one colour fewer leaves an empty class in the palette.
        for (int delta = d; delta >= 0; --delta)
            for (int ell = 0; ell + delta <= d; ++ell) {
                Layer& out = layer_at(p, ell, delta);
                if (palette_ok(ell, delta) && delta + 1 <= d && (ell >= 1 || delta + 1 <= d)) {
                    const Layer& from = layer_at(p, std::max(ell - 1, 0), delta + 1);
                    for (auto i : from.frontier) {
                        auto a = from.decode(i);
                        if (ell >= 1) a.insert(a.begin(), 0);
                        DeficiencyChoice how;
                        how.pad = true;
                        how.q_ell = from.ell;
                        how.q_delta = from.delta;
                        how.q_index = i;
                        out.offer(a, from.cost[i], std::move(how));
                    }
                }
                detail::close_upwards(out);
            }
    }

    // Rebuild: each call returns the colour classes of T_p indexed by label.
    auto classes_of = [&](auto&& self, std::size_t p, int ell, int delta, std::uint64_t index) -> std::vector<VertexSet> {
        const Layer& layer = layers[p][static_cast<std::size_t>(ell)][static_cast<std::size_t>(delta)];
        const auto src = layer.source[index];
        const auto& x = t.nodes[p];
        const int palette = stats.chi[p] - delta;
        const DeficiencyChoice& how = layer.choice.at(src);
        if (how.pad) {
            auto cls = self(self, p, how.q_ell, how.q_delta, how.q_index);
            cls.emplace_back();
            return cls;
        }
        if (x.is_leaf()) return {{x.vertex}};
        auto q = static_cast<std::size_t>(x.left), r = static_cast<std::size_t>(x.right);
        if (how.swapped) std::swap(q, r);
        auto cq = self(self, q, how.q_ell, how.q_delta, how.q_index);
        auto cr = self(self, r, how.r_ell, how.r_delta, how.r_index);
        auto by_size = [](std::vector<VertexSet>& cls) {
            std::stable_sort(cls.begin(), cls.end(), [](const VertexSet& u, const VertexSet& v) { return u.size() < v.size(); });
        };
        by_size(cq);
        by_size(cr);
        std::vector<VertexSet> out(static_cast<std::size_t>(palette));
        auto put = [&](std::size_t label, const VertexSet& vs) { out.at(label).insert(out.at(label).end(), vs.begin(), vs.end()); };
        if (!how.join) {
            for (std::size_t i = 0; i < cq.size(); ++i) put(i, cq[i]);
            for (std::size_t j = 0; j < cr.size(); ++j) put(static_cast<std::size_t>(how.offset) + j, cr[j]);
        } else {
            std::vector<char> uq(cq.size(), 0), ur(cr.size(), 0);
            std::size_t next = 0;
            for (const auto& [i, j] : how.pairs) {
                put(next, cq[static_cast<std::size_t>(i)]);
                put(next, cr[static_cast<std::size_t>(j)]);
                uq[static_cast<std::size_t>(i)] = ur[static_cast<std::size_t>(j)] = 1;
                ++next;
            }
            for (std::size_t i = 0; i < cq.size(); ++i)
                if (!uq[i]) put(next++, cq[i]);
            for (std::size_t j = 0; j < cr.size(); ++j)
                if (!ur[j]) put(next++, cr[j]);
        }
        return out;
    };

    const auto root = static_cast<std::size_t>(t.root);
    const Layer& top = layers[root][0][static_cast<std::size_t>(d)];
    if (top.cost[0] >= kInf) throw Error("deficiency DP found no colouring");
    MonoSolution sol{top.cost[0], {std::vector<int>(static_cast<std::size_t>(t.leaf_count()), 0), chi - d}};
    auto cls = classes_of(classes_of, root, 0, d, 0);
    for (std::size_t c = 0; c < cls.size(); ++c)
        for (Vertex v : cls[c]) sol.colouring.colour[static_cast<std::size_t>(v)] = static_cast<int>(c);
    return sol;
}

inline MonoSolution min_mono_edges_deficiency(const Graph& g, int d) { return min_mono_edges_deficiency(build_cotree(g), d); }

// ---------------------------------------------------------------------------
// Class-size alignment at union nodes

/// At every 0-node, the i-th largest non-empty colour classes of the two
/// children carry one colour, for i up to min(#classes of either child,
/// chi of the node). Ties in class size may be ordered freely: the check
/// asks for an assignment of colours to ranks, each colour having the
/// rank's size on both sides.
inline bool has_property_one(const Cotree& t, const Colouring& c) {
    validate_cotree(t);
    if (static_cast<int>(c.colour.size()) != t.leaf_count()) throw InvalidInput("colouring does not cover the cotree");
    auto stats = node_stats(t);
    auto leaves = node_leaves(t);
    auto sizes_in = [&](std::size_t node) {
        std::unordered_map<int, int> sz;
        for (Vertex v : leaves[node]) ++sz[c.colour[static_cast<std::size_t>(v)]];
        return sz;
    };
    for (std::size_t p = 0; p < t.nodes.size(); ++p) {
        const auto& x = t.nodes[p];
        if (x.is_leaf() || x.label != 0) continue;
        auto sq = sizes_in(static_cast<std::size_t>(x.left));
        auto sr = sizes_in(static_cast<std::size_t>(x.right));
        std::vector<int> rq, rr;
        for (auto [col, s] : sq) rq.push_back(s);
        for (auto [col, s] : sr) rr.push_back(s);
        std::sort(rq.rbegin(), rq.rend());
        std::sort(rr.rbegin(), rr.rend());
        const auto m = std::min({rq.size(), rr.size(), static_cast<std::size_t>(stats.chi[p])});
        std::vector<int> colours;
        for (auto [col, s] : sq)
            if (sr.count(col)) colours.push_back(col);
        // Kuhn matching of ranks to colours.
        std::vector<int> owner(colours.size(), -1);
        auto fits = [&](std::size_t rank, std::size_t ci) {
            int col = colours[ci];
            return sq[col] == rq[rank] && sr[col] == rr[rank];
        };
        std::vector<char> seen;
        auto augment = [&](auto&& self, std::size_t rank) -> bool {
            for (std::size_t ci = 0; ci < colours.size(); ++ci) {
                if (seen[ci] || !fits(rank, ci)) continue;
                seen[ci] = 1;
                if (owner[ci] == -1 || self(self, static_cast<std::size_t>(owner[ci]))) {
                    owner[ci] = static_cast<int>(rank);
                    return true;
                }
            }
            return false;
        };
        for (std::size_t rank = 0; rank < m; ++rank) {
            seen.assign(colours.size(), 0);
            if (!augment(augment, rank)) return false;
        }
    }
    return true;
}

}  // namespace blockerlab
