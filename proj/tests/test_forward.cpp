#include <gtest/gtest.h>

#include "gph/backward.hpp"
#include "gph/forward.hpp"
#include "gph/random.hpp"

using namespace gph;

namespace {

std::vector<PersistencePair> vp(std::initializer_list<std::tuple<int, double, double>> list) {
    std::vector<PersistencePair> out;
    for (auto [d, b, x] : list) {
        PersistencePair p;
        p.dim = d;
        p.birth_value = b;
        p.death_value = x;
        out.push_back(p);
    }
    return out;
}

}  // namespace

TEST(UnionFind, Basics) {
    UnionFind uf(5);
    EXPECT_NE(uf.find(0), uf.find(1));
    int r = uf.unite(0, 1);
    EXPECT_EQ(uf.find(0), r);
    EXPECT_EQ(uf.find(1), r);
    uf.unite(3, 4);
    uf.unite(1, 4);
    EXPECT_EQ(uf.find(0), uf.find(3));
    EXPECT_NE(uf.find(2), uf.find(3));
}

TEST(Forward, SingleVertex) {
    auto g = make_graph(1, {});
    auto d = forward_diagram(g, vertex_to_full(g, {3}));
    EXPECT_TRUE(same_values(d.pairs, vp({{0, 3, kInfValue}})));
}

TEST(Forward, ConstantTriangle) {
    auto g = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    auto d = forward_diagram(g, vertex_to_full(g, {1, 1, 1}));
    EXPECT_TRUE(same_values(d.pairs, vp({{0, 1, kInfValue}, {0, 1, 1}, {0, 1, 1}, {1, 1, kInfValue}})));
}

TEST(Forward, SelfLoop) {
    auto g = make_graph(1, {{0, 0}});
    auto d = forward_diagram(g, validate_filtration(g, {1}, {2}));
    EXPECT_TRUE(same_values(d.pairs, vp({{0, 1, kInfValue}, {1, 2, kInfValue}})));
    auto r = forward_inclusion(g, validate_filtration(g, {1}, {2}));
    ASSERT_EQ(r.basis.columns.size(), 1u);
    EXPECT_EQ(r.basis.columns[0].indicator, std::vector<int>{0});
}

TEST(Forward, TwoComponentsLateMerge) {
    auto g = make_graph(2, {{0, 1}});
    auto d = forward_diagram(g, validate_filtration(g, {1, 2}, {5}));
    EXPECT_TRUE(same_values(d.pairs, vp({{0, 1, kInfValue}, {0, 2, 5}})));
}

TEST(Forward, WitnessDiagram) {
    auto g = make_graph(8, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {4, 7}, {6, 7}});
    auto d = forward_diagram(g, vertex_to_full(g, {1, 3, 2, 3, 4, 1, 2, 2}));
    EXPECT_TRUE(same_values(d.pairs, vp({{1, 3, kInfValue},
                                         {1, 4, kInfValue},
                                         {0, 1, kInfValue},
                                         {0, 1, 4},
                                         {0, 2, 4},
                                         {0, 2, 3},
                                         {0, 2, 2},
                                         {0, 3, 3},
                                         {0, 3, 3},
                                         {0, 4, 4}})));
}

TEST(Forward, MultiEdgesGetOwnColumns) {
    auto g = make_graph(2, {{0, 1}, {0, 1}, {0, 1}});
    auto r = forward_inclusion(g, vertex_to_full(g, {0, 0}));
    EXPECT_EQ(r.basis.columns.size(), 2u);
    EXPECT_TRUE(r.basis.echelon());
}

TEST(Forward, RejectsEdgeBeforeEndpoint) {
    auto g = make_graph(2, {{0, 1}});
    StepOrder bad{2, {0, 1}, {0}};
    try {
        forward_inclusion(g, bad);
        FAIL();
    } catch (const InputError& e) {
        EXPECT_EQ(e.code(), "EdgeBeforeEndpoint");
    }
}

TEST(Forward, CountsAndEchelonProperty) {
    rnd::Rng rng(31);
    for (int t = 0; t < 300; ++t) {
        auto g = rnd::multigraph(rng, 12, 20);
        auto f = rnd::general_filtration(rng, g, 0, 9);
        auto r = forward_inclusion(g, f);
        ASSERT_TRUE(r.basis.echelon());
        int comps = 0;
        for (int v = 0; v < g.n_vertices; ++v) comps += r.state.uf.find(v) == v;
        int ess0 = 0;
        for (const auto& p : r.pd0) ess0 += p.essential();
        EXPECT_EQ(ess0, comps);
        EXPECT_EQ(static_cast<int>(r.pd1.size()), g.num_edges() - g.n_vertices + comps);
        for (const auto& c : r.basis.columns) {
            // indicator is a cycle: every vertex has even degree
            std::vector<int> deg(g.n_vertices, 0);
            for (int e : c.indicator) ++deg[g.edges[e].u], ++deg[g.edges[e].v];
            for (int x : deg) EXPECT_EQ(x % 2, 0);
        }
    }
}

TEST(Forward, ElderRuleKillsLaterBirth) {
    rnd::Rng rng(32);
    for (int t = 0; t < 200; ++t) {
        auto g = rnd::multigraph(rng, 10, 15);
        auto f = rnd::vertex_filtration(rng, g, 0, 9);
        auto r = forward_inclusion(g, f);
        for (const auto& p : r.pd0)
            if (!p.essential()) EXPECT_LE(p.birth, p.death);
    }
}

TEST(Forward, Deterministic) {
    rnd::Rng rng(33);
    auto g = rnd::multigraph(rng, 12, 20);
    auto f = rnd::general_filtration(rng, g, 0, 9);
    auto a = forward_inclusion(g, f), b = forward_inclusion(g, f);
    EXPECT_EQ(a.pd0, b.pd0);
    EXPECT_EQ(a.pd1, b.pd1);
}
