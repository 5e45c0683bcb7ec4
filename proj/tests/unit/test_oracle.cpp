#include <gtest/gtest.h>

#include "blockerlab/catalogue.hpp"
#include "blockerlab/generators.hpp"
#include "blockerlab/induced.hpp"
#include "blockerlab/oracle.hpp"
#include "support/oracles.hpp"

using namespace blockerlab;

namespace {

Edge e(Vertex u, Vertex v) { return make_edge(u, v); }

}  // namespace

TEST(BruteBlocker, Examples) {
    auto p4 = brute_blocker(BlockerQuery{path_graph(4), Operation::contract, Param::alpha, 1, 1});
    EXPECT_FALSE(p4.yes);
    EXPECT_EQ(p4.before, 2);
    auto c4 = brute_blocker(BlockerQuery{cycle_graph(4), Operation::contract, Param::alpha, 1, 1});
    ASSERT_TRUE(c4.yes);
    EXPECT_EQ(c4.edges, (EdgeSet{e(0, 1)}));
    EXPECT_EQ(c4.after, 1);
    auto k3 = brute_blocker(BlockerQuery{complete_graph(3), Operation::delete_vertices, Param::omega, 1, 1});
    ASSERT_TRUE(k3.yes);
    EXPECT_EQ(k3.vertices, (VertexSet{0}));
    EXPECT_EQ(k3.after, 2);
}

TEST(BruteBlocker, WitnessIsMinimumAndReverifies) {
    Rng rng(41);
    for (int i = 0; i < 150; ++i) {
        auto g = random_graph(3 + i % 5, 0.5, rng);
        for (auto op : {Operation::contract, Operation::delete_vertices, Operation::delete_edges})
            for (auto p : {Param::alpha, Param::omega, Param::chi}) {
                BlockerQuery q{g, op, p, 3, 1};
                auto a = brute_blocker(q);
                if (!a.yes) continue;
                const auto size = acts_on_edges(op) ? a.edges.size() : a.vertices.size();
                EXPECT_LE(size, 3u);
                EXPECT_EQ(parameter_after(g, op, p, a.edges, a.vertices), a.after);
                EXPECT_LE(a.after, a.before - 1);
                if (size > 0) {
                    q.k = static_cast<int>(size) - 1;
                    EXPECT_FALSE(brute_blocker(q).yes);
                }
            }
    }
}

TEST(BruteBlocker, ParallelMatchesSerial) {
    Rng rng(42);
    for (int i = 0; i < 40; ++i) {
        auto g = random_graph(8, 0.4, rng);
        for (auto op : {Operation::contract, Operation::delete_edges}) {
            BlockerQuery q{g, op, Param::chi, 3, 1};
            auto a = brute_blocker(q, 10'000'000, 1);
            auto b = brute_blocker(q, 10'000'000, 4);
            EXPECT_EQ(a.yes, b.yes);
            EXPECT_EQ(a.edges, b.edges);
        }
    }
}

TEST(BruteBlocker, BudgetIsEnforced) {
    Rng rng(43);
    auto g = random_graph(14, 0.5, rng);
    BlockerQuery q{g, Operation::delete_edges, Param::alpha, 8, 1};
    EXPECT_THROW(brute_blocker(q, 1000), CapacityExceeded);
}

TEST(BruteBlocker, Preconditions) {
    EXPECT_THROW(brute_blocker(BlockerQuery{path_graph(3), Operation::contract, Param::mu, 1, 1}), InvalidInput);
    EXPECT_THROW(brute_blocker(BlockerQuery{path_graph(3), Operation::contract, Param::alpha, -1, 1}), InvalidInput);
    EXPECT_THROW(brute_blocker(BlockerQuery{path_graph(3), Operation::contract, Param::alpha, 1, 0}), InvalidInput);
}

TEST(Criticality, Examples) {
    EXPECT_TRUE(is_contraction_critical(cycle_graph(4), {e(0, 1)}, Param::alpha));
    for (auto p : {Param::alpha, Param::omega, Param::chi}) EXPECT_FALSE(is_contraction_critical(paw_graph(), {}, p));
    EXPECT_TRUE(is_minimal_critical(cycle_graph(4), {e(0, 1)}, Param::alpha));
    EXPECT_FALSE(is_minimal_critical(cycle_graph(4), {e(0, 1), e(1, 2)}, Param::alpha));
    EXPECT_TRUE(is_deletion_critical(complete_graph(3), {0}, Param::omega));
}

TEST(Criticality, MinimalSetsAreForests) {
    for (const auto& g : graph_catalogue(CatalogueClass::all, 6)) {
        Budget b;
        for (const auto& s : minimal_critical_contraction_sets(g, b)) {
            EXPECT_TRUE(is_minimal_critical(g, s, Param::alpha));
            EXPECT_TRUE(is_forest(restriction(g, s)));
        }
    }
}

TEST(BruteMinMono, Examples) {
    EXPECT_EQ(brute_min_mono(complete_graph(4), 2).count, 2);
    EXPECT_EQ(brute_min_mono(cycle_graph(4), 2).count, 0);
    EXPECT_EQ(brute_min_mono(complete_graph(4), 1).count, 6);
    auto r = brute_min_mono(complete_graph(5), 3);
    EXPECT_EQ(r.colouring.colour[0], 0);
    EXPECT_EQ(count_monochromatic_edges(complete_graph(5), r.colouring), r.count);
    EXPECT_THROW(brute_min_mono(complete_graph(30), 3, 1000), CapacityExceeded);
}

TEST(BruteMinMono, MatchesReference) {
    Rng rng(44);
    for (int i = 0; i < 100; ++i) {
        auto g = random_graph(1 + i % 8, 0.5, rng);
        for (int h = 1; h <= 3; ++h) EXPECT_EQ(brute_min_mono(g, h).count, ref::min_mono(g, h));
    }
}

TEST(BruteMss, Examples) {
    EXPECT_EQ(brute_mss(MssInstance{{1, 1}, 2, 0}).best, 2);
    EXPECT_EQ(brute_mss(MssInstance{{1, 1}, 1, 0}).best, 4);
    auto r = brute_mss(MssInstance{{1, 2, 3}, 2, 0});
    EXPECT_EQ(r.best, 18);
    long long check = 0;
    for (const auto& grp : r.parts) {
        long long s = 0;
        for (int j : grp) s += std::vector<int>{1, 2, 3}[static_cast<std::size_t>(j)];
        check += s * s;
    }
    EXPECT_EQ(check, 18);
    EXPECT_EQ(brute_mss(MssInstance{{1, 2, 3, 4}, 3, 0}).best, ref::min_sum_of_squares({1, 2, 3, 4}, 3));
}

TEST(Catalogue, SmallClasses) {
    auto bip = graph_catalogue(CatalogueClass::bipartite, 4);
    for (const auto& want : {path_graph(2), path_graph(3), path_graph(4), cycle_graph(4), complete_bipartite(1, 3)})
        EXPECT_TRUE(std::any_of(bip.begin(), bip.end(), [&](const Graph& g) { return are_isomorphic(g, want); }));
    for (const auto& g : graph_catalogue(CatalogueClass::cograph, 6)) EXPECT_FALSE(are_isomorphic(g, path_graph(4)));
    for (const auto& g : graph_catalogue(CatalogueClass::chordal, 6)) EXPECT_FALSE(are_isomorphic(g, cycle_graph(4)));
}

TEST(Catalogue, KnownCounts) {
    auto count = [](CatalogueClass c, int n, bool connected) {
        std::vector<int> out(static_cast<std::size_t>(n), 0);
        for (const auto& g : graph_catalogue(c, n, connected)) ++out[static_cast<std::size_t>(g.order() - 1)];
        return out;
    };
    EXPECT_EQ(count(CatalogueClass::all, 6, true), (std::vector<int>{1, 1, 2, 6, 21, 112}));
    EXPECT_EQ(count(CatalogueClass::all, 6, false), (std::vector<int>{1, 2, 4, 11, 34, 156}));
    EXPECT_EQ(count(CatalogueClass::cograph, 8, true), (std::vector<int>{1, 1, 2, 5, 12, 33, 90, 261}));
    EXPECT_EQ(count(CatalogueClass::bipartite, 8, true), (std::vector<int>{1, 1, 1, 3, 5, 17, 44, 182}));
    EXPECT_EQ(count(CatalogueClass::triangle_free, 7, true), (std::vector<int>{1, 1, 1, 3, 6, 19, 59}));
    EXPECT_EQ(count(CatalogueClass::chordal, 7, true), (std::vector<int>{1, 1, 2, 5, 15, 58, 272}));
    EXPECT_EQ(count(CatalogueClass::complete_multipartite, 9, true), (std::vector<int>{1, 1, 2, 4, 6, 10, 14, 21, 29}));
    EXPECT_THROW(graph_catalogue(CatalogueClass::all, 10), InvalidInput);
}

TEST(Catalogue, RandomMembers) {
    for (auto c : {CatalogueClass::bipartite, CatalogueClass::chordal, CatalogueClass::cograph, CatalogueClass::triangle_free,
                   CatalogueClass::complete_multipartite, CatalogueClass::all}) {
        auto gs = random_catalogue(c, 12, 5, 1);
        EXPECT_FALSE(gs.empty());
        for (const auto& g : gs) {
            EXPECT_EQ(g.order(), 12);
            EXPECT_TRUE(in_catalogue_class(g, c));
            EXPECT_TRUE(is_connected(g));
        }
        EXPECT_EQ(random_catalogue(c, 12, 5, 1).size(), gs.size());
    }
}
