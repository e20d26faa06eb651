#include <arrowlab/canonical.hh>
#include <arrowlab/constructions.hh>
#include <arrowlab/errors.hh>
#include <arrowlab/graph.hh>
#include <arrowlab/graph_io.hh>
#include <arrowlab/random.hh>
#include <arrowlab/rational.hh>

#include "oracles.hh"

#include <doctest.h>

#include <filesystem>
#include <set>

using namespace arrowlab;

TEST_SUITE("graph")
{
    TEST_CASE("underlying forgets orientation")
    {
        CHECK(underlying(transitive_tournament(3)) == complete_graph(3));
        OrientedGraph arc(2);
        arc.add_arc(0, 1);
        CHECK(underlying(arc) == complete_graph(2));
        CHECK(underlying(OrientedGraph(5)) == empty_graph(5));
    }

    TEST_CASE("every orientation has the original underlying graph")
    {
        Rng rng(11);
        for (int trial = 0; trial < 50; ++trial) {
            auto g = oracle::random_graph(7, 21, rng);
            auto d = oracle::orientation_from_mask(g, rng());
            CHECK(underlying(d) == g);
            CHECK(is_orientation_of(d, g));
        }
    }

    TEST_CASE("acyclicity")
    {
        CHECK(is_acyclic(transitive_tournament(3)));
        CHECK(! is_acyclic(directed_cycle(3)));
        CHECK(is_acyclic(OrientedGraph(0)));
        CHECK(is_acyclic(OrientedGraph(4)));
        for (int t = 1; t <= 8; ++t)
            CHECK(is_acyclic(transitive_tournament(t)));
        for (int t = 3; t <= 8; ++t)
            CHECK(! is_acyclic(directed_cycle(t)));
        CHECK_THROWS_AS((void) directed_cycle(2), InvalidInput);
    }

    TEST_CASE("acyclicity agrees with transitive closure")
    {
        Rng rng(5);
        for (int trial = 0; trial < 200; ++trial) {
            auto g = oracle::random_graph(6, 15, rng);
            auto d = oracle::orientation_from_mask(g, rng());
            CHECK(is_acyclic(d) == ! oracle::has_cycle(d));
            CHECK(topological_order(d).has_value() == is_acyclic(d));
            if (is_acyclic(d))
                CHECK(longest_path_vertices(d) == oracle::longest_path(d));
        }
    }

    TEST_CASE("loops and digons are rejected")
    {
        OrientedGraph d(3);
        CHECK_THROWS_AS(d.add_arc(1, 1), InvalidInput);
        d.add_arc(0, 1);
        CHECK_THROWS_AS(d.add_arc(1, 0), InvalidInput);
        d.add_arc(0, 1);
        CHECK(d.arc_count() == 1);
        CHECK_THROWS_AS(d.add_arc(0, 3), InvalidInput);
        Graph g(3);
        CHECK_THROWS_AS(g.add_edge(2, 2), InvalidInput);
    }

    TEST_CASE("families")
    {
        auto tt3 = transitive_tournament(3);
        CHECK(tt3.arcs() == std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}});
        CHECK(canonical(in_out_star(1, 1)) == canonical(directed_path(3)));
        CHECK(cycle_graph(4).edge_count() == 4);
        auto p = directed_path(5);
        CHECK(p.arcs() == std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
        auto s = in_out_star(2, 3);
        CHECK(s.in_degree(0) == 2);
        CHECK(s.out_degree(0) == 3);
        CHECK(s.arc_count() == 5);
        CHECK(complete_graph(6).edge_count() == 15);
        CHECK(path_graph(4).edge_count() == 3);

        std::vector<int> three{3};
        CHECK(std::get<OrientedGraph>(make_family("transitive_tournament", three)) == tt3);
        CHECK(std::get<Graph>(make_family("complete", three)) == complete_graph(3));
        std::vector<int> bad{0};
        CHECK_THROWS_AS((void) make_family("complete", bad), InvalidInput);
        CHECK_THROWS_AS((void) make_family("nonsense", three), InvalidInput);
        std::vector<int> one_two{1, 2};
        CHECK(std::get<OrientedGraph>(make_family("in_out_star", one_two)) == in_out_star(1, 2));
    }

    TEST_CASE("connectivity and forests")
    {
        CHECK(is_tree(path_graph(5)));
        CHECK(! is_tree(cycle_graph(5)));
        CHECK(is_forest(empty_graph(3)));
        CHECK(! is_connected(empty_graph(2)));
        CHECK(is_tree(Graph(1)));
    }

    TEST_CASE("canonical forms of the rooted TT3 variants are pairwise distinct")
    {
        auto v = rooted_tt3_variants();
        std::set<CanonicalForm> forms;
        for (const auto & d : v)
            forms.insert(canonical(d));
        CHECK(forms.size() == 3);
        CHECK(canonical(v[0]) != canonical(transitive_tournament(3)));
    }

    TEST_CASE("canonical form is isomorphism invariant and idempotent")
    {
        Rng rng(99);
        for (int trial = 0; trial < 60; ++trial) {
            auto g = oracle::random_graph(7, 21, rng);
            auto d = oracle::orientation_from_mask(g, rng());
            if (trial % 3 == 0)
                d = d.with_root(static_cast<int>(rng() % 7));
            auto c = canonical(d);
            CHECK(canonical(oracle::relabel_random(d, rng)) == c);
            // Rebuilding from the canonical arcs gives a fixed point.
            OrientedGraph e(c.n);
            for (auto [u, v] : c.arcs)
                e.add_arc(u, v);
            if (c.rooted)
                e = e.with_root(0);
            CHECK(canonical(e) == c);
        }
    }

    TEST_CASE("canonical form separates non-isomorphic graphs")
    {
        OrientedGraph a(2), b(2);
        a.add_arc(0, 1);
        b.add_arc(1, 0);
        CHECK(canonical(a) == canonical(b));
        CHECK(canonical(directed_path(3)) != canonical(transitive_tournament(3)));
        CHECK(canonical(in_out_star(2, 0)) != canonical(in_out_star(0, 2)));
        CHECK(canonical(cycle_graph(6)) != canonical(complete_graph(6)));
        CHECK_THROWS_AS((void) canonical(OrientedGraph(11)), TooLarge);
    }

    TEST_CASE("automorphism counts")
    {
        CHECK(automorphism_count(transitive_tournament(3)) == 1);
        CHECK(automorphism_count(directed_cycle(3)) == 3);
        CHECK(automorphism_count(in_out_star(0, 3)) == 6);
    }

    TEST_CASE("text format round trip")
    {
        auto text = to_text(rooted_tt3_middle());
        CHECK(text == "d 3\nr 1\na 0 1\na 0 2\na 1 2\n");
        auto back = parse_graph_text(text);
        CHECK(std::get<OrientedGraph>(back) == rooted_tt3_middle());
        CHECK(to_text(back) == text);

        auto g = parse_graph_text("# a comment\ng 4\ne 2 1   # trailing\n\ne 0 3\n");
        CHECK(to_text(g) == "g 4\ne 0 3\ne 1 2\n");

        Rng rng(3);
        for (int trial = 0; trial < 30; ++trial) {
            auto h = oracle::random_graph(9, 36, rng);
            CHECK(std::get<Graph>(parse_graph_text(to_text(h))) == h);
            auto d = oracle::orientation_from_mask(h, rng());
            CHECK(std::get<OrientedGraph>(parse_graph_text(to_text(d))) == d);
        }
    }

    TEST_CASE("malformed text is reported with a line number")
    {
        CHECK_THROWS_AS((void) parse_graph_text(""), MalformedInput);
        CHECK_THROWS_AS((void) parse_graph_text("x 3\n"), MalformedInput);
        CHECK_THROWS_AS((void) parse_graph_text("g 3\ne 0 5\n"), MalformedInput);
        CHECK_THROWS_AS((void) parse_graph_text("g 3\na 0 1\n"), MalformedInput);
        CHECK_THROWS_AS((void) parse_graph_text("d 3\na 0 1\na 1 0\n"), MalformedInput);
        CHECK_THROWS_AS((void) parse_graph_text("g 3\nr 0\n"), MalformedInput);
        CHECK_THROWS_AS((void) parse_graph_text("d 2\na 0 1 7\n"), MalformedInput);
        try {
            (void) parse_graph_text("g 3\ne 0 1\ne 1 x\n");
            FAIL("expected a parse error");
        }
        catch (const MalformedInput & e) {
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
    }

    TEST_CASE("graph files")
    {
        std::filesystem::create_directories(ARROWLAB_TEST_TMP);
        auto path = std::filesystem::path(ARROWLAB_TEST_TMP) / "tt3.txt";
        write_graph_file(path, transitive_tournament(3));
        CHECK(read_oriented_file(path) == transitive_tournament(3));
        CHECK(read_undirected_file(path) == complete_graph(3));
        write_graph_file(path, complete_graph(3));
        CHECK_THROWS_AS((void) read_oriented_file(path), MalformedInput);
        CHECK_THROWS_AS((void) read_graph_file(path.string() + ".missing"), MalformedInput);
    }

    TEST_CASE("seeded randomness is reproducible")
    {
        CHECK(derive_seed(1, {2, 3}) == derive_seed(1, {2, 3}));
        CHECK(derive_seed(1, {2, 3}) != derive_seed(1, {3, 2}));
        Rng a(derive_seed(7, {1})), b(derive_seed(7, {1}));
        for (int i = 0; i < 100; ++i)
            CHECK(uniform_below(a, 17) == uniform_below(b, 17));
        Rng rng(1);
        int hits = 0;
        for (int i = 0; i < 1000; ++i) {
            CHECK(uniform_below(rng, 5) < 5);
            CHECK(! bernoulli(rng, 0.0));
            CHECK(bernoulli(rng, 1.0));
            hits += bernoulli(rng, 0.5);
        }
        CHECK(hits > 430);
        CHECK(hits < 570);
    }

    TEST_CASE("rationals")
    {
        CHECK(to_string(Rational{3, 2}) == "3/2");
        CHECK(to_string(Rational{2}) == "2/1");
        CHECK(to_string(Rational{-4, 6}) == "-2/3");
        CHECK(parse_rational("6/4") == Rational{3, 2});
        CHECK(parse_rational("5") == Rational{5});
        CHECK_THROWS((void) parse_rational("1/0"));
        CHECK_THROWS((void) parse_rational("abc"));
        CHECK(binomial(5, 2) == 10);
        CHECK(binomial(3, 5) == 0);
        CHECK(binomial(1000, 3) == 166167000);
        CHECK(pow(Rational{2, 3}, -2) == Rational{9, 4});
        CHECK(to_double(Rational{1, 4}) == 0.25);
    }
}
