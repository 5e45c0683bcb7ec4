#include <sstream>

#include <gtest/gtest.h>

#include "blockerlab/generators.hpp"
#include "blockerlab/induced.hpp"
#include "blockerlab/instances.hpp"
#include "blockerlab/oracle.hpp"
#include "blockerlab/reductions.hpp"
#include "support/oracles.hpp"

using namespace blockerlab;

namespace {

Graph diamond() {
    auto g = complete_graph(4);
    return delete_edges(g, EdgeSet{make_edge(0, 1)});
}

SatInstance star_clauses(int k) { return SatInstance{4, {{0, 1}, {1, 2}, {1, 3}}, k}; }

}  // namespace

TEST(VcGadget, Shapes) {
    auto p3 = build_vc_gadget(path_graph(3));
    EXPECT_TRUE(are_isomorphic(p3.graph, diamond()));
    EXPECT_EQ(ref::omega(p3.graph), 3);
    auto p2 = build_vc_gadget(path_graph(2));
    EXPECT_TRUE(are_isomorphic(p2.graph, complete_graph(3)));
    auto c4 = build_vc_gadget(cycle_graph(4));
    EXPECT_TRUE(are_isomorphic(c4.graph, join(cycle_graph(4), complete_graph(1))));
    EXPECT_FALSE(contains_induced(c4.graph, triangle_plus_vertex()).has_value());
}

TEST(VcGadget, Preconditions) {
    EXPECT_THROW(build_vc_gadget(complete_graph(3)), NotInClass);
    EXPECT_THROW(build_vc_gadget(empty_graph(3)), InvalidInput);
}

TEST(VcGadget, CoverToContractionSet) {
    auto g = path_graph(3);
    auto gm = build_vc_gadget(g);
    auto s = vc_to_contraction_set(gm, g, {1});
    EXPECT_EQ(s, (EdgeSet{make_edge(1, gm.w)}));
    auto r = contract_edges(gm.graph, s).graph;
    EXPECT_TRUE(are_isomorphic(r, path_graph(3)));
    EXPECT_EQ(ref::omega(r), 2);

    auto p2 = path_graph(2);
    auto gp = build_vc_gadget(p2);
    auto sp = vc_to_contraction_set(gp, p2, {0});
    EXPECT_TRUE(are_isomorphic(contract_edges(gp.graph, sp).graph, complete_graph(2)));

    auto c4 = cycle_graph(4);
    auto gc = build_vc_gadget(c4);
    auto sc = vc_to_contraction_set(gc, c4, {0, 2});
    EXPECT_EQ(ref::omega(contract_edges(gc.graph, sc).graph), 2);
    EXPECT_THROW(vc_to_contraction_set(gc, c4, {0}), InvalidInput);
}

TEST(VcGadget, RoundTrip) {
    for (const auto& g : {path_graph(2), path_graph(3), cycle_graph(4), path_graph(5), complete_bipartite(2, 3)}) {
        auto gm = build_vc_gadget(g);
        auto cover = brute_min_vertex_cover(g);
        auto s = vc_to_contraction_set(gm, g, cover);
        auto back = contraction_set_to_vc(gm, s);
        EXPECT_TRUE(is_vertex_cover(g, back));
        EXPECT_LE(back.size(), s.size());
    }
}

TEST(VcGadget, ArbitraryCriticalSetsGiveCovers) {
    auto g = cycle_graph(4);
    auto gm = build_vc_gadget(g);
    auto edges = gm.graph.edges();
    const int m = static_cast<int>(edges.size());
    int seen = 0;
    for (int mask = 1; mask < (1 << m); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) > 3) continue;
        EdgeSet s;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) s.push_back(edges[static_cast<std::size_t>(i)]);
        if (!is_contraction_critical(gm.graph, s, Param::omega)) {
            EXPECT_THROW(contraction_set_to_vc(gm, s), InvalidInput);
            continue;
        }
        ++seen;
        auto cover = contraction_set_to_vc(gm, s);
        EXPECT_TRUE(is_vertex_cover(g, cover));
        EXPECT_LE(cover.size(), s.size());
    }
    EXPECT_GT(seen, 0);
}

TEST(ChordalGadget, StarClauses) {
    for (int k : {0, 1, 2, 3}) {
        auto gm = build_chordal_gadget(star_clauses(k));
        EXPECT_EQ(gm.graph.order(), 4 * (2 * k + 2) + 3);
        EXPECT_TRUE(as_chordal(gm.graph).has_value());
        EXPECT_EQ(alpha_exact(gm.graph).value, 5);
    }
}

TEST(ChordalGadget, SmallInstance) {
    auto gm = build_chordal_gadget(SatInstance{2, {{0, 1}}, 1});
    EXPECT_EQ(gm.graph.order(), 9);
    EXPECT_EQ(ref::alpha(gm.graph), 3);
    EXPECT_EQ(gm.variable_of(gm.v_x[1]), 1);
    EXPECT_EQ(gm.variable_of(gm.v_c[0]), -1);
}

TEST(ChordalGadget, RandomInstancesAreChordal) {
    Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        std::uniform_int_distribution<int> vars(2, 5);
        SatInstance sat{vars(rng), {}, static_cast<int>(rng() % 3)};
        std::uniform_int_distribution<int> pick(0, sat.variables - 1);
        for (int c = 0; c < 1 + i % 5; ++c) {
            int x = pick(rng), y = pick(rng);
            if (x != y) sat.clauses.emplace_back(x, y);
        }
        if (sat.clauses.empty()) sat.clauses.emplace_back(0, 1);
        auto gm = build_chordal_gadget(sat);
        EXPECT_TRUE(in_class(recognize_chordal(gm.graph)));
    }
}

TEST(ChordalGadget, InstanceChecks) {
    EXPECT_THROW(build_chordal_gadget(SatInstance{2, {}, 1}), InvalidInput);
    EXPECT_THROW(build_chordal_gadget(SatInstance{2, {{0, 0}}, 1}), InvalidInput);
    EXPECT_THROW(build_chordal_gadget(SatInstance{2, {{0, 2}}, 1}), InvalidInput);
    auto gm = build_chordal_gadget(SatInstance{2, {{0, 1}, {1, 0}}, 1});
    EXPECT_EQ(gm.sat.clauses.size(), 1u);
}

TEST(ChordalGadget, AssignmentTransfers) {
    auto gm = build_chordal_gadget(SatInstance{2, {{0, 1}}, 1});
    auto s = assignment_to_contraction_set(gm, {0});
    EXPECT_EQ(s.size(), 1u);
    EXPECT_EQ(ref::alpha(contract_edges(gm.graph, s).graph), 2);
    auto u = assignment_to_deletion_set(gm, {0});
    EXPECT_EQ(u, (VertexSet{gm.v_x[0]}));
    EXPECT_EQ(ref::alpha(delete_vertices(gm.graph, u).graph), 2);
    EXPECT_THROW(assignment_to_contraction_set(gm, {}), InvalidInput);
    EXPECT_THROW(assignment_to_contraction_set(gm, {0, 1}), InvalidInput);

    auto all = build_chordal_gadget(SatInstance{3, {{0, 1}, {1, 2}}, 3});
    auto sa = assignment_to_contraction_set(all, {0, 1, 2});
    EXPECT_EQ(alpha_exact(contract_edges(all.graph, sa).graph).value, 3);
}

TEST(ChordalGadget, CriticalSetsGiveAssignments) {
    auto gm = build_chordal_gadget(SatInstance{2, {{0, 1}}, 1});
    const auto& g = gm.graph;
    for (const auto& e : g.edges()) {
        EdgeSet s{e};
        if (!is_contraction_critical(g, s, Param::alpha)) {
            EXPECT_THROW(contraction_set_to_assignment(gm, s), InvalidInput);
            continue;
        }
        auto a = contraction_set_to_assignment(gm, s);
        EXPECT_TRUE(is_satisfying(gm.sat, a));
        EXPECT_LE(a.size(), 1u);
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet w{v};
        if (!is_deletion_critical(g, w, Param::alpha)) {
            EXPECT_THROW(deletion_set_to_assignment(gm, w), InvalidInput);
            continue;
        }
        auto a = deletion_set_to_assignment(gm, w);
        EXPECT_TRUE(is_satisfying(gm.sat, a));
        EXPECT_LE(a.size(), 1u);
    }
}

TEST(ChordalGadget, StarClausesMinimumSets) {
    auto gm = build_chordal_gadget(star_clauses(1));
    auto ans = brute_blocker(BlockerQuery{gm.graph, Operation::contract, Param::alpha, 1, 1});
    ASSERT_TRUE(ans.yes);
    EXPECT_EQ(contraction_set_to_assignment(gm, ans.edges), (std::vector<int>{1}));
}

TEST(MssGadget, Examples) {
    auto a = build_mss_gadget(MssInstance{{1, 1}, 1, 4});
    EXPECT_TRUE(are_isomorphic(a.graph, complete_graph(2)));
    EXPECT_EQ(a.twice_target, 2);
    EXPECT_EQ(a.budget, 1);
    EXPECT_EQ(count_monochromatic_edges(a.graph, Colouring{{0, 0}, 1}), 1);

    auto b = build_mss_gadget(MssInstance{{2, 2}, 2, 8});
    EXPECT_TRUE(are_isomorphic(b.graph, complete_bipartite(2, 2)));
    EXPECT_EQ(b.budget, 0);
    EXPECT_EQ(ref::min_mono(b.graph, 2), 0);

    auto c = build_mss_gadget(MssInstance{{3}, 1, 9});
    EXPECT_EQ(c.graph.size(), 0);
    EXPECT_EQ(c.twice_target, 0);
    EXPECT_EQ(c.budget, 0);

    auto odd = build_mss_gadget(MssInstance{{1, 2}, 2, 4});
    EXPECT_EQ(odd.twice_target, -1);
    EXPECT_EQ(odd.budget, -1);
}

TEST(MssGadget, PartitionTransfers) {
    auto gm = build_mss_gadget(MssInstance{{1, 1, 2}, 2, 8});
    std::vector<std::vector<int>> groups{{0, 1}, {2}};
    auto c = partition_to_colouring(gm, groups);
    EXPECT_EQ(count_monochromatic_edges(gm.graph, c), 1);
    EXPECT_EQ(2 * count_monochromatic_edges(gm.graph, c), sum_of_squares(gm.mss, groups) - (1 + 1 + 4));

    auto single = partition_to_colouring(gm, {{0, 1, 2}});
    EXPECT_EQ(2 * count_monochromatic_edges(gm.graph, single), 16 - 6);

    auto k22 = build_mss_gadget(MssInstance{{2, 2}, 2, 8});
    auto back = colouring_to_partition(k22, Colouring{{0, 0, 1, 1}, 2});
    EXPECT_EQ(sum_of_squares(k22.mss, back), 8);
    EXPECT_THROW(partition_to_colouring(gm, {{0, 1}}), InvalidInput);
    EXPECT_THROW(partition_to_colouring(gm, {{0, 1}, {1, 2}}), InvalidInput);
}

TEST(MssGadget, NormalizationNeverAddsEdges) {
    Rng rng(33);
    auto gm = build_mss_gadget(MssInstance{{2, 3, 1}, 3, 20});
    std::uniform_int_distribution<int> col(0, 2);
    for (int i = 0; i < 200; ++i) {
        Colouring c{std::vector<int>(6), 3};
        for (auto& x : c.colour) x = col(rng);
        Colouring norm;
        auto groups = colouring_to_partition(gm, c, &norm);
        EXPECT_LE(count_monochromatic_edges(gm.graph, norm), count_monochromatic_edges(gm.graph, c));
        EXPECT_EQ(2 * count_monochromatic_edges(gm.graph, norm), sum_of_squares(gm.mss, groups) - (4 + 9 + 1));
    }
}

TEST(Instances, Parsing) {
    std::istringstream sat("# comment\np wp2sat 3 2 1\n0 1\n1 2\n");
    auto s = read_sat(sat);
    EXPECT_EQ(s.variables, 3);
    EXPECT_EQ(s.k, 1);
    EXPECT_EQ(s.clauses.size(), 2u);
    std::istringstream mss("3 2 18\n1 2 3\n");
    auto m = read_mss(mss);
    EXPECT_EQ(m.a, (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(m.h, 2);
    EXPECT_EQ(m.J, 18);
    std::istringstream bad("p wp2sat 3 2 1\n0 1\n");
    EXPECT_THROW(read_sat(bad), InvalidInput);
    std::istringstream bad_mss("2 1 4\n1\n");
    EXPECT_THROW(read_mss(bad_mss), InvalidInput);
}

TEST(Instances, CanonicalTextRoundTrips) {
    auto sat = normalized(SatInstance{4, {{2, 1}, {0, 1}, {1, 2}}, 2});
    std::istringstream sat_in(format_sat(sat));
    auto sat_back = read_sat(sat_in);
    EXPECT_EQ(sat_back.variables, 4);
    EXPECT_EQ(sat_back.clauses, sat.clauses);
    EXPECT_EQ(sat_back.k, 2);
    MssInstance mss{{1, 2, 3}, 2, 18};
    std::istringstream mss_in(format_mss(mss));
    auto mss_back = read_mss(mss_in);
    EXPECT_EQ(mss_back.a, mss.a);
    EXPECT_EQ(mss_back.h, 2);
    EXPECT_EQ(mss_back.J, 18);
}
