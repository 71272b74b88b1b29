#include <gtest/gtest.h>

#include <random>
#include <set>

#include "symcolor/automorphism.hpp"
#include "symcolor/corpus.hpp"
#include "symcolor/gadgets.hpp"
#include "test_support.hpp"

using namespace symcolor;
using symcolor::testing::complete;
using symcolor::testing::cycle;
using symcolor::testing::path;
using symcolor::testing::star;

TEST(Automorphisms, Triangle) {
    AutomorphismSet a = enumerate_automorphisms(complete(3));
    EXPECT_EQ(a.size(), 6u);
    EXPECT_TRUE(a[0].is_identity());
    for (const Permutation& p : a.members()) EXPECT_TRUE(is_automorphism(complete(3), p));
}

TEST(Automorphisms, PathOnThree) {
    AutomorphismSet a = enumerate_automorphisms(path(3));
    ASSERT_EQ(a.size(), 2u);
    EXPECT_EQ(a[1].images, (std::vector<VertexId>{2, 1, 0}));
}

TEST(Automorphisms, CycleIsDihedral) {
    for (std::size_t n = 3; n <= 9; ++n) EXPECT_EQ(enumerate_automorphisms(cycle(n)).size(), 2 * n);
}

TEST(Automorphisms, StarIsSymmetricOnLeaves) {
    EXPECT_EQ(enumerate_automorphisms(star(4)).size(), 24u);
    EXPECT_EQ(fixed_vertices(enumerate_automorphisms(star(4))), std::vector<VertexId>{0});
}

TEST(Automorphisms, GadgetGFourBlobsOfTwo) {
    FiniteGraph g = realize({GadgetKind::g_pendant, 2, 4});
    AutomorphismSet a = enumerate_automorphisms(g);
    EXPECT_EQ(a.size(), 16u);
    // Only blob members move.
    for (VertexId v = 0; v < g.order(); ++v) {
        const bool in_blob = g.label(v)[0] == 'a';
        const bool fixed = std::all_of(a.members().begin(), a.members().end(),
                                       [v](const Permutation& p) { return p(v) == v; });
        EXPECT_EQ(fixed, !in_blob) << g.label(v);
    }
}

TEST(Automorphisms, GadgetGBlobsOfThree) {
    EXPECT_EQ(enumerate_automorphisms(realize({GadgetKind::g_pendant, 3, 2})).size(), 36u);
}

TEST(Automorphisms, OrbitsOfGadgetAreBlobs) {
    FiniteGraph g = realize({GadgetKind::g_pendant, 3, 3});
    auto orbs = orbits(enumerate_automorphisms(g));
    std::set<std::vector<std::string>> nontrivial;
    for (const auto& o : orbs) {
        if (o.size() < 2) continue;
        std::vector<std::string> names;
        for (VertexId v : o) names.push_back(g.label(v));
        nontrivial.insert(names);
    }
    EXPECT_EQ(nontrivial, (std::set<std::vector<std::string>>{{"a0_1", "a0_2", "a0_3"},
                                                               {"a1_1", "a1_2", "a1_3"},
                                                               {"a2_1", "a2_2", "a2_3"}}));
}

TEST(Automorphisms, TailGadgetIsRigid) {
    for (std::size_t h = 3; h <= 8; ++h) {
        EXPECT_TRUE(enumerate_automorphisms(realize({GadgetKind::h_rigid, 2, h})).trivial()) << h;
    }
}

TEST(Automorphisms, EmptyGraphRejected) {
    FiniteGraph empty = FiniteGraph::from_edge_list(0, std::vector<std::pair<VertexId, VertexId>>{});
    EXPECT_THROW(enumerate_automorphisms(empty), PreconditionError);
}

TEST(Automorphisms, MemberBudget) {
    AutomorphismOptions tight;
    tight.member_budget = 100;
    EXPECT_THROW(enumerate_automorphisms(complete(6), tight), ResourceError);
}

TEST(Preserves, VertexColoringOfPath) {
    AutomorphismSet a = enumerate_automorphisms(path(3));
    EXPECT_TRUE(preserves(a[1], Coloring::of_vertices({0, 1, 0})));
    EXPECT_FALSE(preserves(a[1], Coloring::of_vertices({0, 1, 1})));
}

TEST(Preserves, EdgeColoringOfPath) {
    AutomorphismSet a = enumerate_automorphisms(path(3));
    Coloring c;
    c.kind = ColoringKind::edge;
    c.edge = {{Edge(0, 1), 0}, {Edge(1, 2), 1}};
    EXPECT_FALSE(preserves(a[1], c));
    c.edge[Edge(1, 2)] = 0;
    EXPECT_TRUE(preserves(a[1], c));
}

TEST(Preserves, SizeMismatch) {
    EXPECT_THROW(preserves(Permutation::identity(4), Coloring::of_vertices({0, 1, 0})), DomainError);
}

TEST(AutomorphismProperty, GroupAxioms) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        FiniteGraph g = symcolor::testing::random_graph(3 + rng() % 6, 0.5, rng);
        AutomorphismSet a = enumerate_automorphisms(g);
        EXPECT_TRUE(a.contains(Permutation::identity(g.order())));
        for (const Permutation& p : a.members()) {
            EXPECT_TRUE(is_automorphism(g, p));
            EXPECT_TRUE(a.contains(p.inverse()));
            for (const Permutation& q : a.members()) EXPECT_TRUE(a.contains(p * q));
        }
    }
}

TEST(AutomorphismProperty, RefinedMatchesNaiveOnAllConnectedGraphsUpToSix) {
    std::size_t checked = 0;
    for (const FiniteGraph& g : connected_graphs(6)) {
        EXPECT_EQ(enumerate_automorphisms(g).members(), naive_automorphisms(g).members());
        ++checked;
    }
    EXPECT_EQ(checked, 1u + 1 + 2 + 6 + 21 + 112);
}

TEST(AutomorphismProperty, RefinedMatchesNaiveOnRandomGraphs) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 5 + rng() % 3;
        FiniteGraph g = symcolor::testing::random_graph(n, 0.2 + 0.6 * (rng() % 100) / 100.0, rng);
        EXPECT_EQ(enumerate_automorphisms(g).members(), naive_automorphisms(g).members());
    }
}

TEST(AutomorphismProperty, RefinedMatchesUnrefinedOnGadgets) {
    for (GadgetKind k : {GadgetKind::g_pendant, GadgetKind::g1_clique, GadgetKind::h1_independent, GadgetKind::g2_rail,
                         GadgetKind::h_rigid}) {
        for (std::size_t h = 1; h <= 3; ++h) {
            FiniteGraph g = realize({k, 2, h});
            EXPECT_EQ(enumerate_automorphisms(g).members(), enumerate_automorphisms_unrefined(g).members())
                << to_string(k) << " " << h;
        }
    }
}

TEST(AutomorphismProperty, OrbitsPartitionTheVertices) {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        FiniteGraph g = symcolor::testing::random_graph(2 + rng() % 8, 0.4, rng);
        AutomorphismSet a = enumerate_automorphisms(g);
        std::vector<int> hits(g.order(), 0);
        for (const auto& o : orbits(a)) {
            for (VertexId v : o) {
                ++hits[v];
                EXPECT_EQ(g.degree(v), g.degree(o.front()));
            }
        }
        for (int h : hits) EXPECT_EQ(h, 1);
    }
}
