#include <gtest/gtest.h>

#include <random>
#include <set>

#include "symcolor/gadgets.hpp"
#include "symcolor/generator.hpp"
#include "symcolor/graph.hpp"
#include "test_support.hpp"

using namespace symcolor;
using symcolor::testing::complete;
using symcolor::testing::cycle;
using symcolor::testing::path;

namespace {

std::vector<std::string> labels_of(const FiniteGraph& g, const std::vector<VertexId>& vs) {
    std::vector<std::string> out;
    for (VertexId v : vs) out.push_back(g.label(v));
    return out;
}

GeneratorGraph single_spine() {
    return GeneratorGraph("spine", 2, [](std::size_t n) {
        Layer l;
        l.vertices = {"p" + std::to_string(n)};
        if (n > 0) l.edges = {{"p" + std::to_string(n - 1), "p" + std::to_string(n)}};
        return l;
    });
}

const std::vector<GadgetKind> kAllGadgets = {GadgetKind::g_pendant, GadgetKind::g1_clique, GadgetKind::h1_independent,
                                             GadgetKind::g2_rail, GadgetKind::h_rigid};

}  // namespace

TEST(FromEdgeList, SingleEdge) {
    FiniteGraph g = FiniteGraph::from_edge_list(2, {{0, 1}});
    EXPECT_EQ(g.order(), 2u);
    EXPECT_EQ(g.size(), 1u);
    EXPECT_EQ(max_degree(g), 1u);
    EXPECT_EQ(g.label(0), "0");
    EXPECT_EQ(g.label(1), "1");
}

TEST(FromEdgeList, FiveCycle) {
    FiniteGraph g = cycle(5);
    EXPECT_EQ(g.size(), 5u);
    EXPECT_EQ(max_degree(g), 2u);
    EXPECT_TRUE(g.adjacent(4, 0));
}

TEST(FromEdgeList, LoopRejected) {
    try {
        FiniteGraph::from_edge_list(3, {{0, 0}});
        FAIL() << "expected an error";
    } catch (const GraphError& e) {
        EXPECT_STREQ(e.what(), "loop at 0");
    }
}

TEST(FromEdgeList, OutOfRangeNamesThePair) {
    try {
        FiniteGraph::from_edge_list(3, {{0, 1}, {1, 3}});
        FAIL() << "expected an error";
    } catch (const GraphError& e) {
        EXPECT_NE(std::string(e.what()).find("{1,3}"), std::string::npos);
    }
}

TEST(FromEdgeList, DuplicatesCollapse) {
    FiniteGraph g = FiniteGraph::from_edge_list(3, {{0, 1}, {1, 0}, {1, 2}});
    EXPECT_EQ(g.size(), 2u);
}

TEST(FromEdgeListProperty, SymmetricAndLoopFree) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        FiniteGraph g = symcolor::testing::random_graph(n, 0.4, rng);
        for (VertexId v = 0; v < n; ++v) {
            EXPECT_FALSE(g.adjacent(v, v));
            for (VertexId u : g.neighbors(v)) {
                ASSERT_LT(u, n);
                EXPECT_TRUE(g.adjacent(u, v));
            }
        }
        std::size_t degree_sum = 0;
        for (VertexId v = 0; v < n; ++v) degree_sum += g.degree(v);
        EXPECT_EQ(degree_sum, 2 * g.size());
    }
}

TEST(Truncate, GadgetGDepthThree) {
    FiniteGraph g = truncate(generate({GadgetKind::g_pendant, 2, kUnbounded}), 3);
    ASSERT_EQ(g.order(), 6u);
    EXPECT_EQ(g.labels(), (std::vector<std::string>{"t''", "t'", "t0", "a0_1", "a0_2", "t1"}));
    auto layers = levels(g, 0);
    ASSERT_EQ(layers.size(), 4u);
    EXPECT_EQ(labels_of(g, layers[3]), (std::vector<std::string>{"a0_1", "a0_2", "t1"}));
}

TEST(Truncate, DepthZeroIsTheRoot) {
    for (GadgetKind k : kAllGadgets) {
        GeneratorGraph gen = generate({k, 2, kUnbounded});
        FiniteGraph g = truncate(gen, 0);
        ASSERT_EQ(g.order(), 1u);
        EXPECT_EQ(g.label(0), gen.root());
    }
}

TEST(Truncate, GadgetG2DepthTwoReachesFirstBlob) {
    // From r0: layer 1 = {t0, r1}; A0 hangs from t0 and so sits in layer 2.
    GeneratorGraph gen = generate({GadgetKind::g2_rail, 2, kUnbounded});
    FiniteGraph one = truncate(gen, 1);
    EXPECT_TRUE(one.find_label("r0") && one.find_label("t0") && one.find_label("r1"));
    EXPECT_FALSE(one.find_label("a0_1"));
    FiniteGraph two = truncate(gen, 2);
    EXPECT_TRUE(two.find_label("a0_1") && two.find_label("a0_2"));
    EXPECT_FALSE(two.find_label("a1_1"));
}

TEST(Truncate, SkippedLayerIsAContractError) {
    GeneratorGraph bad("bad", 4, [](std::size_t n) {
        Layer l;
        if (n == 0) l.vertices = {"x"};
        if (n == 1) {
            l.vertices = {"y"};
            l.edges = {{"x", "y"}};
        }
        if (n == 2) {
            l.vertices = {"z"};
            l.edges = {{"x", "z"}};
        }
        return l;
    });
    EXPECT_NO_THROW(truncate(bad, 1));
    EXPECT_THROW(truncate(bad, 2), GeneratorContractError);
}

TEST(Truncate, DegreeBoundEnforced) {
    GeneratorGraph bad("fan", 2, [](std::size_t n) {
        Layer l;
        if (n == 0) l.vertices = {"x"};
        if (n == 1) {
            l.vertices = {"a", "b", "c"};
            l.edges = {{"x", "a"}, {"x", "b"}, {"x", "c"}};
        }
        return l;
    });
    EXPECT_THROW(truncate(bad, 1), GeneratorContractError);
}

TEST(TruncateProperty, PrefixAndInducedAcrossDepths) {
    for (GadgetKind k : kAllGadgets) {
        GeneratorGraph gen = generate({k, 3, kUnbounded});
        for (std::size_t d = 0; d < 8; ++d) {
            FiniteGraph a = truncate(gen, d);
            FiniteGraph b = truncate(gen, d + 1);
            ASSERT_LE(a.order(), b.order());
            for (VertexId v = 0; v < a.order(); ++v) EXPECT_EQ(a.label(v), b.label(v));
            for (VertexId u = 0; u < a.order(); ++u) {
                for (VertexId v = 0; v < a.order(); ++v) EXPECT_EQ(a.adjacent(u, v), b.adjacent(u, v));
            }
            EXPECT_EQ(truncate(gen, d), a) << "truncation must be deterministic";
        }
    }
}

TEST(TruncateProperty, LevelsMatchDeclaredLayers) {
    for (GadgetKind k : kAllGadgets) {
        for (std::size_t blob : {2u, 3u}) {
            GeneratorGraph gen = generate({k, blob, kUnbounded});
            for (std::size_t d = 0; d <= 8; ++d) {
                FiniteGraph g = truncate(gen, d);
                std::vector<std::size_t> declared = layer_of(gen, d);
                auto layers = levels(g, 0);
                for (std::size_t n = 0; n < layers.size(); ++n) {
                    for (VertexId v : layers[n]) EXPECT_EQ(declared[v], n) << to_string(k) << " depth " << d;
                }
            }
        }
    }
}

TEST(BfsTree, Path) {
    BfsTree t = bfs_tree(path(3), 0);
    EXPECT_EQ(t.parent[1], 0u);
    EXPECT_EQ(t.parent[2], 1u);
    EXPECT_EQ(t.parent[0], kNoVertex);
}

TEST(BfsTree, FourCycleAscendingExpansion) {
    BfsTree t = bfs_tree(cycle(4), 0);
    EXPECT_EQ(t.parent[1], 0u);
    EXPECT_EQ(t.parent[3], 0u);
    EXPECT_EQ(t.parent[2], 1u);
    EXPECT_EQ(t.order, (std::vector<VertexId>{0, 1, 3, 2}));
}

TEST(BfsTree, TriangleFromTwo) {
    BfsTree t = bfs_tree(complete(3), 2);
    EXPECT_EQ(t.parent[0], 2u);
    EXPECT_EQ(t.parent[1], 2u);
}

TEST(BfsTree, DisconnectedNamesUnreachedVertex) {
    FiniteGraph g = FiniteGraph::from_edge_list(4, {{0, 1}, {2, 3}});
    try {
        bfs_tree(g, 0);
        FAIL() << "expected an error";
    } catch (const DisconnectedError& e) {
        EXPECT_NE(std::string(e.what()).find("vertex 2"), std::string::npos);
    }
    EXPECT_THROW(levels(g, 0), DisconnectedError);
}

TEST(BfsTreeProperty, SpanningTreeOfRandomConnectedGraphs) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 14;
        FiniteGraph g = symcolor::testing::random_graph(n, 0.3, rng);
        if (!is_connected(g)) continue;
        const VertexId root = static_cast<VertexId>(rng() % n);
        BfsTree t = bfs_tree(g, root);
        ASSERT_EQ(t.order.size(), n);
        EXPECT_EQ(std::set<VertexId>(t.order.begin(), t.order.end()).size(), n);
        std::size_t links = 0;
        for (VertexId v = 0; v < n; ++v) {
            if (v == root) continue;
            ++links;
            EXPECT_TRUE(g.adjacent(v, t.parent[v]));
            EXPECT_LT(t.position[t.parent[v]], t.position[v]);
            EXPECT_EQ(t.depth[v], t.depth[t.parent[v]] + 1);
            VertexId x = v;
            std::size_t steps = 0;
            while (x != root && steps <= n) {
                x = t.parent[x];
                ++steps;
            }
            EXPECT_EQ(x, root);
        }
        EXPECT_EQ(links, n - 1);
    }
}

TEST(Levels, FourCycle) {
    auto l = levels(cycle(4), 0);
    EXPECT_EQ(l, (std::vector<std::vector<VertexId>>{{0}, {1, 3}, {2}}));
}

TEST(Levels, CompleteGraph) {
    auto l = levels(complete(4), 0);
    EXPECT_EQ(l, (std::vector<std::vector<VertexId>>{{0}, {1, 2, 3}}));
}

TEST(Levels, GadgetGLayerThreeIsFirstBlobAndT1) {
    FiniteGraph g = truncate(generate({GadgetKind::g_pendant, 2, kUnbounded}), 4);
    auto l = levels(g, 0);
    std::set<std::string> got;
    for (VertexId v : l[3]) got.insert(g.label(v));
    EXPECT_EQ(got, (std::set<std::string>{"a0_1", "a0_2", "t1"}));
}

TEST(FindRay, GadgetG) {
    GeneratorGraph gen = generate({GadgetKind::g_pendant, 2, kUnbounded});
    std::vector<VertexId> ray = find_ray(gen, 4);
    FiniteGraph g = truncate(gen, 4);
    std::vector<std::size_t> layer = layer_of(gen, 4);
    ASSERT_EQ(ray.size(), 5u);
    EXPECT_EQ(g.label(ray[0]), "t''");
    EXPECT_EQ(g.label(ray[1]), "t'");
    EXPECT_EQ(g.label(ray[2]), "t0");
    EXPECT_EQ(g.label(ray[3]), "t1");
    for (std::size_t i = 0; i < ray.size(); ++i) EXPECT_EQ(layer[ray[i]], i);
    for (std::size_t i = 0; i + 1 < ray.size(); ++i) EXPECT_TRUE(g.adjacent(ray[i], ray[i + 1]));
}

TEST(FindRay, SingleSpineIsForced) {
    std::vector<VertexId> ray = find_ray(single_spine(), 6);
    EXPECT_EQ(ray, (std::vector<VertexId>{0, 1, 2, 3, 4, 5, 6}));
}

TEST(FindRay, DepthZero) {
    EXPECT_EQ(find_ray(single_spine(), 0), std::vector<VertexId>{0});
}

TEST(FindRay, EmptyLayerReported) {
    GeneratorGraph gen = generate({GadgetKind::g1_clique, 2, 2});
    try {
        find_ray(gen, 5);
        FAIL() << "expected an error";
    } catch (const GeneratorContractError& e) {
        EXPECT_NE(std::string(e.what()).find("layer 3 is empty"), std::string::npos);
    }
}

TEST(FindRayProperty, EveryGadgetAndDepth) {
    for (GadgetKind k : kAllGadgets) {
        GeneratorGraph gen = generate({k, 2, kUnbounded});
        for (std::size_t d = 0; d <= 8; ++d) {
            std::vector<VertexId> ray = find_ray(gen, d);
            FiniteGraph g = truncate(gen, d);
            std::vector<std::size_t> layer = layer_of(gen, d);
            ASSERT_EQ(ray.size(), d + 1);
            for (std::size_t i = 0; i < ray.size(); ++i) EXPECT_EQ(layer[ray[i]], i);
            for (std::size_t i = 0; i + 1 < ray.size(); ++i) EXPECT_TRUE(g.adjacent(ray[i], ray[i + 1]));
        }
    }
}

TEST(MaxDegree, Gadgets) {
    EXPECT_EQ(max_degree(truncate(generate({GadgetKind::g_pendant, 2, kUnbounded}), 5)), 4u);
    EXPECT_EQ(max_degree(cycle(5)), 2u);
    EXPECT_EQ(max_degree(truncate(generate({GadgetKind::g2_rail, 2, kUnbounded}), 4)), 3u);
    EXPECT_EQ(max_degree(FiniteGraph::from_edge_list(3, std::vector<std::pair<VertexId, VertexId>>{})), 0u);
}
