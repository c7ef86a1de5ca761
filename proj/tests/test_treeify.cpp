#include "medianforge/dual.hpp"
#include "medianforge/treeify.hpp"

#include "corpus.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace medianforge;

namespace {

std::vector<std::string> edge_names(const SpanningTree& t) {
    std::vector<std::string> out;
    for (const auto& te : t.edges) {
        const auto& e = t.graph.edges()[te.edge];
        out.push_back(t.graph.name(e.u) + "-" + t.graph.name(e.v) + "@" + std::to_string(te.stage));
    }
    return out;
}

/// Components of stage < n edges against signatures over colour classes >= n.
void expect_stage_invariant(const FiniteGraph& g, const SpanningTree& t, const std::string& label) {
    const int n = static_cast<int>(g.order());
    for (std::size_t stage = 0; stage <= t.colouring.colour_count(); ++stage) {
        std::vector<std::pair<int, int>> below;
        for (const auto& te : t.edges)
            if (te.stage < stage) {
                const auto& e = g.edges()[te.edge];
                below.emplace_back(e.u, e.v);
            }
        std::vector<oracle::Set> sides;
        for (std::size_t c = stage; c < t.colouring.colour_count(); ++c)
            for (auto h : t.colouring.classes[c]) sides.push_back(oracle::to_set(t.colouring.pairs[h].side_a));
        ASSERT_EQ(oracle::component_labels(n, below), oracle::signature_labels(n, sides))
            << label << " stage " << stage;
    }
}

} // namespace

TEST(IntersectionGraph, Examples) {
    auto p3 = hyperplane_intersection_graph(corpus::load("p3"));
    EXPECT_EQ(p3.nodes.size(), 2u);
    EXPECT_EQ(p3.edge_count(), 1u);
    auto c4 = hyperplane_intersection_graph(corpus::load("c4"));
    EXPECT_EQ(c4.nodes.size(), 2u);
    EXPECT_EQ(c4.edge_count(), 1u);
    auto q3 = hyperplane_intersection_graph(corpus::load("q3"));
    EXPECT_EQ(q3.nodes.size(), 3u);
    EXPECT_EQ(q3.edge_count(), 3u);
    EXPECT_EQ(code_of([] { hyperplane_intersection_graph(corpus::load("c6")); }), Errc::NotMedianGraph);
}

TEST(IntersectionGraph, NonNestedPairsAreAdjacent) {
    for (const auto& e : corpus::all()) {
        if (!e.median || e.graph.order() > 300) continue;
        auto ig = hyperplane_intersection_graph(e.graph);
        for (std::size_t i = 0; i < ig.nodes.size(); ++i)
            for (std::size_t j = i + 1; j < ig.nodes.size(); ++j) {
                bool adjacent = std::find(ig.adjacency[i].begin(), ig.adjacency[i].end(), j) != ig.adjacency[i].end();
                if (!sides_nested(ig.nodes[i].side_a, ig.nodes[j].side_a)) {
                    ASSERT_TRUE(adjacent) << e.name;
                }
                bool meet = vertex_boundary(e.graph, ig.nodes[i].side_a)
                                .intersects(vertex_boundary(e.graph, ig.nodes[j].side_a));
                ASSERT_EQ(adjacent, meet);
            }
    }
}

TEST(Colouring, Examples) {
    auto p3 = greedy_colouring(hyperplane_intersection_graph(corpus::load("p3")));
    EXPECT_EQ(p3.colour_of, (std::vector<std::size_t>{0, 1}));
    auto c4g = corpus::load("c4");
    auto c4 = greedy_colouring(hyperplane_intersection_graph(c4g));
    ASSERT_EQ(c4.colour_count(), 2u);
    EXPECT_EQ(c4.pairs[c4.classes[0][0]].edges.front(), *c4g.edge_index(c4g.vertex("tl"), c4g.vertex("tr")));
    EXPECT_EQ(c4.pairs[c4.classes[1][0]].edges.front(), *c4g.edge_index(c4g.vertex("tr"), c4g.vertex("br")));
    auto q3 = greedy_colouring(hyperplane_intersection_graph(corpus::load("q3")));
    EXPECT_EQ(q3.colour_count(), 3u);
}

TEST(Colouring, ProperNestedAndOrderChecked) {
    for (const auto& e : corpus::all()) {
        if (!e.median || e.graph.order() > 300) continue;
        auto ig = hyperplane_intersection_graph(e.graph);
        std::vector<std::size_t> reversed(ig.nodes.size());
        std::iota(reversed.rbegin(), reversed.rend(), 0);
        for (const auto& c : {greedy_colouring(ig), greedy_colouring(ig, reversed)}) {
            for (std::size_t i = 0; i < ig.nodes.size(); ++i)
                for (auto j : ig.adjacency[i]) ASSERT_NE(c.colour_of[i], c.colour_of[j]) << e.name;
            for (const auto& cls : c.classes) {
                std::vector<VertexSet> sides;
                for (auto h : cls) {
                    sides.push_back(c.pairs[h].side_a);
                    sides.push_back(c.pairs[h].side_b);
                }
                ASSERT_TRUE(is_nested_family(sides)) << e.name;
            }
        }
    }
    auto ig = hyperplane_intersection_graph(corpus::load("q3"));
    EXPECT_EQ(code_of([&] { greedy_colouring(ig, std::vector<std::size_t>{0, 0, 1}); }), Errc::BadParams);
    EXPECT_EQ(code_of([&] { greedy_colouring(ig, std::vector<std::size_t>{0, 1}); }), Errc::BadParams);
}

TEST(NestedColourClass, DualIsATree) {
    for (const auto& e : corpus::files()) {
        if (!e.median) continue;
        auto c = greedy_colouring(hyperplane_intersection_graph(e.graph));
        for (const auto& cls : c.classes) {
            std::vector<VertexSet> sides;
            for (auto h : cls) sides.push_back(c.pairs[h].side_a);
            auto d = build_dual(Pocset::close(e.graph, sides));
            ASSERT_EQ(d.graph.size() + 1, d.graph.order()) << e.name;
            ASSERT_EQ(d.graph.order(), cls.size() + 1) << e.name;
        }
    }
}

TEST(SpanningTree, Examples) {
    auto p3 = corpus::load("p3");
    auto t3 = canonical_spanning_tree(p3);
    EXPECT_EQ(t3.edges.size(), 2u);
    auto c4 = corpus::load("c4");
    auto t4 = canonical_spanning_tree(c4);
    EXPECT_EQ(edge_names(t4), (std::vector<std::string>{"tl-tr@0", "br-bl@0", "tr-br@1"}));
    auto q3 = canonical_spanning_tree(corpus::load("q3"));
    EXPECT_EQ(q3.edges.size(), 7u);
    EXPECT_EQ(q3.stage_sizes(), (std::vector<std::size_t>{4, 2, 1}));
    EXPECT_EQ(code_of([] { canonical_spanning_tree(corpus::load("c6")); }), Errc::NotMedianGraph);
}

TEST(SpanningTree, VerifiesWithStageInvariantOnCorpus) {
    for (const auto& e : corpus::all()) {
        if (!e.median || e.graph.order() > 1024) continue;
        for (auto order : {EdgeOrder::Input, EdgeOrder::Lex}) {
            auto g = e.graph.with_edge_order(order);
            auto t = canonical_spanning_tree(g);
            auto report = verify_spanning_tree(g, t);
            ASSERT_TRUE(report.ok()) << e.name << ": " << report.violations.front();
            if (g.order() <= 200) expect_stage_invariant(g, t, e.name);
        }
    }
}

TEST(SpanningTree, OnDualsOfCutPocsets) {
    for (const auto& e : corpus::all()) {
        for (auto r : e.radii) {
            auto p = enumerate_cuts(e.graph, r);
            if (p.pair_count() > 16) continue;
            auto d = build_dual(p);
            if (d.graph.order() > 300) continue;
            auto t = canonical_spanning_tree(d.graph);
            ASSERT_TRUE(verify_spanning_tree(d.graph, t).ok()) << e.name << " r" << r;
            expect_stage_invariant(d.graph, t, e.name);
        }
    }
}

TEST(SpanningTree, TreesAreFixed) {
    for (const auto& e : corpus::all()) {
        if (!e.tree) continue;
        auto t = canonical_spanning_tree(e.graph);
        EXPECT_EQ(t.edges.size(), e.graph.size()) << e.name;
    }
}

TEST(Verify, Violations) {
    auto q3 = corpus::load("q3");
    auto t = canonical_spanning_tree(q3);
    auto missing = t;
    missing.edges.pop_back();
    auto r1 = verify_spanning_tree(q3, missing);
    ASSERT_FALSE(r1.ok());
    EXPECT_NE(std::find(r1.violations.begin(), r1.violations.end(), "2 components"), r1.violations.end());

    auto extra = t;
    for (std::size_t i = 0; i < q3.size(); ++i) {
        bool used = std::any_of(t.edges.begin(), t.edges.end(), [&](const TreeEdge& te) { return te.edge == i; });
        if (!used) {
            extra.edges.push_back({i, 0});
            break;
        }
    }
    auto r2 = verify_spanning_tree(q3, extra);
    ASSERT_FALSE(r2.ok());
    EXPECT_NE(std::find(r2.violations.begin(), r2.violations.end(), "cycle"), r2.violations.end());

    auto restaged = t;
    for (auto& te : restaged.edges) te.stage = 0;
    auto r3 = verify_spanning_tree(q3, restaged);
    EXPECT_FALSE(r3.ok());
}

TEST(KBlocks, CountsOnTheCube) {
    auto q3 = corpus::load("q3");
    auto c = greedy_colouring(hyperplane_intersection_graph(q3));
    auto blocks = k_blocks(q3, c);
    ASSERT_EQ(blocks.size(), 4u);
    std::vector<std::size_t> counts;
    for (const auto& level : blocks) counts.push_back(*std::max_element(level.begin(), level.end()) + 1u);
    EXPECT_EQ(counts, (std::vector<std::size_t>{8, 4, 2, 1}));
}
