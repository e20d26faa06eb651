#include <arrowlab/canonical.hh>
#include <arrowlab/constructions.hh>
#include <arrowlab/density.hh>
#include <arrowlab/errors.hh>

#include "oracles.hh"

#include <doctest.h>

#include <cmath>
#include <map>

using namespace arrowlab;

namespace
{
    auto max_degree_of(const std::vector<Arc> & arcs) -> int
    {
        std::map<int, int> degree;
        int best = 0;
        for (auto [u, v] : arcs)
            best = std::max({best, ++degree[u], ++degree[v]});
        return best;
    }

    auto mean_max_degree(int t, int samples) -> double
    {
        double total = 0;
        for (int i = 0; i < samples; ++i) {
            Rng rng(derive_seed(42, {static_cast<std::uint64_t>(i)}));
            total += max_degree_of(random_oriented_tree_arcs(t, rng));
        }
        return total / samples;
    }

    // E[max of t independent 1 + Poisson(1) variables], the limiting law of the
    // degree sequence of a uniform labelled tree.
    auto poisson_max_model(int t) -> double
    {
        double expected = 0, cdf = 0, term = std::exp(-1.0);
        for (int k = 1; k < 40; ++k) {
            // P(max degree >= k) = 1 - P(Poisson <= k - 2)^t
            expected += 1.0 - std::pow(cdf, t);
            cdf += term;
            term /= k;
        }
        return expected;
    }
}

TEST_SUITE("constructions")
{
    TEST_CASE("single arc times source-rooted TT3")
    {
        OrientedGraph arc(2);
        arc.add_arc(0, 1);
        auto p = rooted_product(arc, rooted_tt3_source());
        CHECK(p.size() == 6);
        CHECK(p.arc_count() == 7);
        std::vector<Arc> expected{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
        CHECK(p.arcs() == expected);
        Graph two_triangles(6);
        for (auto [u, v] : expected)
            two_triangles.add_edge(u, v);
        CHECK(underlying(p) == two_triangles);
    }

    TEST_CASE("rooted product counts and layers")
    {
        Rng rng(4);
        auto small = oracle::all_oriented(3);
        for (int trial = 0; trial < 200; ++trial) {
            const auto & f = small[rng() % small.size()];
            auto h = small[rng() % small.size()].with_root(static_cast<int>(rng() % 3));
            auto p = rooted_product(f, h);
            CHECK(p.size() == f.size() * h.size());
            CHECK(p.arc_count() == f.arc_count() + f.size() * h.arc_count());
            // Each block {x} x V(H) carries a copy of H and touches other blocks only at its root.
            for (int x = 0; x < f.size(); ++x)
                for (auto [u, v] : h.arcs())
                    CHECK(p.has_arc(x * 3 + u, x * 3 + v));
            for (auto [u, v] : p.arcs())
                if (u / 3 != v / 3) {
                    CHECK(u % 3 == *h.root());
                    CHECK(v % 3 == *h.root());
                    CHECK(f.has_arc(u / 3, v / 3));
                }
            if (is_acyclic(f) && is_acyclic(h))
                CHECK(is_acyclic(p));
        }
    }

    TEST_CASE("rooted product needs a root and respects the vertex cap")
    {
        CHECK_THROWS_AS((void) rooted_product(directed_path(2), transitive_tournament(3)), InvalidInput);
        CHECK_THROWS_AS((void) rooted_product(OrientedGraph(30), rooted_tt3_sink()), TooLarge);
    }

    TEST_CASE("the three rooted TT3 variants")
    {
        CHECK(*rooted_tt3_source().root() == 0);
        CHECK(*rooted_tt3_middle().root() == 1);
        CHECK(*rooted_tt3_sink().root() == 2);
        for (const auto & v : rooted_tt3_variants())
            CHECK(underlying(v) == complete_graph(3));
    }

    TEST_CASE("forest products with rooted TT3 have m2 = 2")
    {
        for (int n = 1; n <= 4; ++n)
            for (const auto & f : oracle::all_oriented(n)) {
                if (! is_forest(underlying(f)))
                    continue;
                for (const auto & root : rooted_tt3_variants())
                    CHECK(m2(rooted_product(f, root)).value == 2);
            }
    }

    TEST_CASE("tree parameters")
    {
        for (int t = 3; t <= 8; ++t) {
            auto p = tree_params(directed_path(t));
            CHECK(p.height == t - 1);
            CHECK(p.max_degree == 2);
            CHECK(p.a == t - 1);
        }
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b) {
                auto p = tree_params(in_out_star(a, b));
                CHECK(p.height == 2);
                CHECK(p.max_degree == a + b);
                CHECK(p.a == std::max(2, a + b));
            }
        auto out_star = tree_params(in_out_star(0, 4));
        CHECK(out_star.height == 1);
        CHECK(out_star.max_degree == 4);
        CHECK(out_star.a == 4);
        CHECK_THROWS_AS((void) tree_params(directed_cycle(3)), InvalidInput);
        CHECK_THROWS_AS((void) tree_params(OrientedGraph(2)), InvalidInput);
    }

    TEST_CASE("tree parameters are invariant under relabelling")
    {
        Rng rng(10);
        for (int trial = 0; trial < 50; ++trial) {
            auto t = random_oriented_tree(9, rng);
            auto p = tree_params(t);
            auto q = tree_params(oracle::relabel_random(t, rng));
            CHECK(p.height == q.height);
            CHECK(p.max_degree == q.max_degree);
            CHECK(p.a == q.a);
            CHECK(p.height == oracle::longest_path(t) - 1);
        }
    }

    TEST_CASE("Prüfer decoding")
    {
        std::vector<int> seq{3, 3, 3, 4};
        auto g = prufer_decode(seq);
        std::vector<Edge> expected{{0, 3}, {1, 3}, {2, 3}, {3, 4}, {4, 5}};
        CHECK(g.edges() == expected);
        CHECK(prufer_decode_edges(seq) == expected);
        std::vector<int> bad{9};
        CHECK_THROWS_AS((void) prufer_decode(bad), InvalidInput);
        CHECK(prufer_decode(std::vector<int>{}).edges() == std::vector<Edge>{{0, 1}});
    }

    TEST_CASE("Prüfer decoding is a bijection onto labelled trees")
    {
        // Cayley: 5^3 sequences give 125 distinct trees on 5 vertices.
        std::set<std::vector<Edge>> trees;
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b)
                for (int c = 0; c < 5; ++c) {
                    std::vector<int> seq{a, b, c};
                    auto g = prufer_decode(seq);
                    CHECK(is_tree(g));
                    trees.insert(g.edges());
                }
        CHECK(trees.size() == 125);
    }

    TEST_CASE("random oriented trees")
    {
        CHECK(random_oriented_tree(1, 5).size() == 1);
        CHECK(random_oriented_tree(1, 5).arc_count() == 0);
        auto two = random_oriented_tree(2, 5);
        CHECK(two.arc_count() == 1);
        CHECK_THROWS_AS((void) random_oriented_tree(0, 5), InvalidInput);
        CHECK_THROWS_AS((void) random_oriented_tree(65, 5), TooLarge);
        CHECK(random_oriented_tree(20, 77) == random_oriented_tree(20, 77));
        for (int t = 1; t <= 30; ++t)
            CHECK(is_tree(underlying(random_oriented_tree(t, static_cast<std::uint64_t>(t)))));

        Rng a(9), b(9);
        auto d = random_oriented_tree(40, a);
        auto arcs = random_oriented_tree_arcs(40, b);
        std::sort(arcs.begin(), arcs.end());
        CHECK(d.arcs() == arcs);
    }

    TEST_CASE("random labelled trees are uniform on 4 vertices")
    {
        // 16 labelled trees, each with probability 1/16; sd of each count is about 31.
        std::map<std::vector<Edge>, int> counts;
        Rng rng(123);
        const int samples = 16000;
        int forward = 0;
        for (int i = 0; i < samples; ++i) {
            auto t = random_oriented_tree(4, rng);
            counts[underlying(t).edges()]++;
            for (auto [u, v] : t.arcs())
                forward += u < v;
        }
        CHECK(counts.size() == 16);
        for (auto & [tree, c] : counts) {
            CHECK(c > 1000 - 5 * 31);
            CHECK(c < 1000 + 5 * 31);
        }
        // Fair coins: 48000 arcs, half of them pointing up.
        CHECK(std::abs(forward - 24000) < 5 * 110);
    }

    TEST_CASE("mean maximum degree at t = 1000 matches the Poisson model")
    {
        double mean = mean_max_degree(1000, 200);
        double model = poisson_max_model(1000);
        CHECK(model == doctest::Approx(6.51).epsilon(0.01));
        CHECK(std::abs(mean - model) < 0.35);
    }

    TEST_CASE("mean maximum degree at t = 1000 lies within 25% of log t / log log t" * doctest::should_fail())
    {
        // The (1 +- eps) log t / log log t window is asymptotic; at t = 1000 the
        // maximum degree is about 6.5, far above 3.57 * 1.25.
        double target = std::log(1000.0) / std::log(std::log(1000.0));
        double mean = mean_max_degree(1000, 200);
        CHECK(mean >= 0.75 * target);
        CHECK(mean <= 1.25 * target);
    }
}
