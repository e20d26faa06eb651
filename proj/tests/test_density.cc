#include <arrowlab/constructions.hh>
#include <arrowlab/density.hh>
#include <arrowlab/errors.hh>

#include "oracles.hh"

#include <doctest.h>

using namespace arrowlab;

namespace
{
    auto recompute_m2(const Graph & g, const DensityReport & r) -> Rational
    {
        CHECK(static_cast<int>(r.edges.size()) == g.edges_within(r.vertices));
        int v = set_size(r.vertices);
        int e = static_cast<int>(r.edges.size());
        if (v >= 3)
            return Rational{e - 1, v - 2};
        if (v == 2 && e == 1)
            return Rational{1, 2};
        return 0;
    }
}

TEST_SUITE("density")
{
    TEST_CASE("d2 by formula and special cases")
    {
        CHECK(d2(complete_graph(2)) == Rational{1, 2});
        CHECK(d2(complete_graph(3)) == 2);
        CHECK(d2(cycle_graph(5)) == Rational{4, 3});
        CHECK(d2(Graph(1)) == 0);
        CHECK(d2(empty_graph(2)) == 0);
        CHECK_THROWS_AS((void) d2(Graph(0)), UndefinedInput);
    }

    TEST_CASE("m2 and m of named graphs")
    {
        CHECK(m2(complete_graph(3)).value == 2);
        CHECK(m2(underlying(transitive_tournament(3))).value == 2);
        CHECK(m(complete_graph(4)).value == Rational{3, 2});
        CHECK(m(Graph(1)).value == 0);
        CHECK(m2(complete_graph(2)).value == Rational{1, 2});
        for (int t = 4; t <= 8; ++t)
            CHECK(m2(cycle_graph(t)).value == Rational{t - 1, t - 2});
        for (int t = 2; t <= 9; ++t)
            CHECK(m(path_graph(t)).value == Rational{t - 1, t});
        CHECK_THROWS_AS((void) m2(Graph(0)), UndefinedInput);
    }

    TEST_CASE("trees with at least two edges have m2 = 1")
    {
        Rng rng(8);
        for (int t = 3; t <= 9; ++t)
            for (int trial = 0; trial < 5; ++trial) {
                auto tree = underlying(random_oriented_tree(t, rng));
                CHECK(m2(tree).value == 1);
                CHECK(m(tree).value == Rational{t - 1, t});
            }
        // A matching has no path on three vertices.
        Graph two_edges(5);
        two_edges.add_edge(0, 1);
        two_edges.add_edge(3, 4);
        CHECK(m2(two_edges).value == Rational{1, 2});
        two_edges.add_edge(1, 2);
        CHECK(m2(two_edges).value == 1);
    }

    TEST_CASE("induced scan equals the brute force over all subgraphs")
    {
        Rng rng(2024);
        for (int trial = 0; trial < 120; ++trial) {
            int n = 1 + static_cast<int>(rng() % 7);
            auto g = oracle::random_graph(n, 12, rng);
            auto truth = oracle::densities(g);
            auto r2 = m2(g);
            auto r1 = m(g);
            CHECK(r2.value == truth.m2);
            CHECK(r1.value == truth.m);
            CHECK(recompute_m2(g, r2) == r2.value);
            CHECK(Rational{static_cast<int>(r1.edges.size()), set_size(r1.vertices)} == r1.value);
        }
    }

    TEST_CASE("witness is the lexicographically smallest maximiser")
    {
        // Two disjoint triangles: both have m2 = 2, the first one wins.
        Graph g(6);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(0, 2);
        g.add_edge(3, 4);
        g.add_edge(4, 5);
        g.add_edge(3, 5);
        auto r = m2(g);
        CHECK(r.value == 2);
        CHECK(r.vertices == (bit(0) | bit(1) | bit(2)));
        CHECK(lex_less(bit(0) | bit(1), bit(0) | bit(2)));
        CHECK(! lex_less(bit(1), bit(1)));
    }

    TEST_CASE("maxima dominate the whole graph and grow with edges")
    {
        Rng rng(77);
        for (int trial = 0; trial < 80; ++trial) {
            auto g = oracle::random_graph(8, 20, rng);
            if (g.size() >= 3)
                CHECK(m2(g).value >= d2(g));
            CHECK(m(g).value >= Rational{g.edge_count(), g.size()});
            auto bigger = g;
            int u = static_cast<int>(rng() % 8), v = static_cast<int>(rng() % 8);
            if (u != v)
                bigger.add_edge(u, v);
            CHECK(m2(bigger).value >= m2(g).value);
            CHECK(m(bigger).value >= m(g).value);
        }
    }

    TEST_CASE("oriented overloads use the underlying graph")
    {
        CHECK(m2(transitive_tournament(4)).value == m2(complete_graph(4)).value);
        CHECK(m(directed_path(4)).value == Rational{3, 4});
    }

    TEST_CASE("size limit")
    {
        CHECK_THROWS_AS((void) m2(complete_graph(density_size_limit + 1)), TooLarge);
    }
}
