#include <arrowlab/experiments.hh>
#include <arrowlab/witness.hh>

#include "oracles.hh"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace arrowlab;

namespace
{
    auto is_bipartite(const Graph & g) -> bool
    {
        std::vector<int> side(g.size(), -1);
        for (int s = 0; s < g.size(); ++s) {
            if (side[s] >= 0)
                continue;
            side[s] = 0;
            std::vector<int> stack{s};
            while (! stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w = 0; w < g.size(); ++w)
                    if (g.adjacent(v, w)) {
                        if (side[w] < 0) {
                            side[w] = 1 - side[v];
                            stack.push_back(w);
                        }
                        else if (side[w] == side[v])
                            return false;
                    }
            }
        }
        return true;
    }

    auto point(double p, int trials, int successes, int exhausted = 0) -> SweepPoint
    {
        SweepPoint pt;
        pt.p = p;
        pt.trials = trials;
        pt.successes = successes;
        pt.exhausted = exhausted;
        int usable = trials - exhausted;
        pt.p_hat = static_cast<double>(successes) / usable;
        std::tie(pt.ci_lo, pt.ci_hi) = wilson_interval(successes, usable);
        pt.usable = exhausted * 5 <= trials;
        return pt;
    }

    auto two_disjoint_k4_bridged() -> Graph
    {
        Graph g(8);
        for (int base : {0, 4})
            for (int u = 0; u < 4; ++u)
                for (int v = u + 1; v < 4; ++v)
                    g.add_edge(base + u, base + v);
        g.add_edge(3, 4);
        return g;
    }
}

TEST_SUITE("experiments")
{
    TEST_CASE("G(n, p) extremes and determinism")
    {
        CHECK(sample_gnp(10, 0.0, 1).edge_count() == 0);
        CHECK(sample_gnp(10, 1.0, 1) == complete_graph(10));
        CHECK(sample_gnp(30, 0.3, 99) == sample_gnp(30, 0.3, 99));
        CHECK(sample_gnp(0, 0.5, 1).size() == 0);
        CHECK_THROWS_AS((void) sample_gnp(5, 1.5, 1), InvalidInput);
    }

    TEST_CASE("G(n, p) edge count mean")
    {
        // Mean of C(30,2) * 0.1 = 43.5; the mean of 10^4 samples has sd sqrt(39.15 / 10^4).
        double total = 0;
        for (int i = 0; i < 10000; ++i)
            total += sample_gnp(30, 0.1, derive_seed(5, {static_cast<std::uint64_t>(i)})).edge_count();
        double mean = total / 10000;
        CHECK(std::abs(mean - 43.5) < 3 * std::sqrt(39.15 / 10000));
    }

    TEST_CASE("trial seeds separate coordinates")
    {
        CHECK(trial_seed(1, 24, 0, 0) != trial_seed(1, 24, 0, 1));
        CHECK(trial_seed(1, 24, 0, 0) != trial_seed(1, 24, 1, 0));
        CHECK(trial_seed(1, 24, 0, 0) != trial_seed(1, 32, 0, 0));
        CHECK(trial_seed(1, 24, 0, 0) != trial_seed(2, 24, 0, 0));
    }

    TEST_CASE("Wilson intervals")
    {
        auto [lo, hi] = wilson_interval(50, 100);
        CHECK(lo == doctest::Approx(0.4038).epsilon(1e-3));
        CHECK(hi == doctest::Approx(0.5962).epsilon(1e-3));
        auto [lo0, hi0] = wilson_interval(0, 20);
        CHECK(lo0 == 0.0);
        CHECK(hi0 > 0.1);
        for (int s : {0, 3, 10, 17, 20}) {
            auto [a, b] = wilson_interval(s, 20);
            CHECK(a <= s / 20.0);
            CHECK(b >= s / 20.0);
        }
        // Width scales as trials^{-1/2}.
        auto [a1, b1] = wilson_interval(300, 1000);
        auto [a2, b2] = wilson_interval(1200, 4000);
        CHECK((b1 - a1) / (b2 - a2) == doctest::Approx(2.0).epsilon(0.02));
    }

    TEST_CASE("p_half interpolation")
    {
        std::vector<SweepPoint> pts{point(0.1, 100, 10), point(0.2, 100, 40), point(0.4, 100, 80)};
        auto half = find_p_half(pts);
        REQUIRE(half);
        CHECK(*half > 0.2);
        CHECK(*half < 0.4);
        // Symmetric logits around the bracket put the crossing at the geometric mean.
        std::vector<SweepPoint> sym{point(0.1, 99, 30), point(0.4, 99, 69)};
        CHECK(*find_p_half(sym) == doctest::Approx(0.2));
        std::vector<SweepPoint> none{point(0.1, 100, 10), point(0.2, 100, 20)};
        CHECK(! find_p_half(none));
        // Unusable points are skipped.
        std::vector<SweepPoint> skip{point(0.1, 100, 10), point(0.2, 100, 60, 50), point(0.4, 100, 80)};
        CHECK(! skip[1].usable);
        auto h = find_p_half(skip);
        REQUIRE(h);
        CHECK(*h > 0.2);
    }

    TEST_CASE("exponent fit")
    {
        std::vector<std::pair<int, double>> exact;
        for (int n : {10, 20, 40, 80})
            exact.emplace_back(n, 3.0 * std::pow(n, -0.7));
        auto fit = fit_exponent(exact);
        REQUIRE(fit);
        CHECK(fit->gamma == doctest::Approx(0.7));
        REQUIRE(fit->std_error);
        CHECK(*fit->std_error == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(fit->points == 4);
        std::vector<std::pair<int, double>> two{{10, 0.1}, {100, 0.01}};
        auto f2 = fit_exponent(two);
        REQUIRE(f2);
        CHECK(f2->gamma == doctest::Approx(1.0));
        CHECK(! f2->std_error);
        CHECK(! fit_exponent({{10, 0.1}}));
    }

    TEST_CASE("default grid brackets both candidate exponents")
    {
        auto grid = default_p_grid(transitive_tournament(3), 40);
        CHECK(grid.size() == 10);
        CHECK(std::is_sorted(grid.begin(), grid.end()));
        CHECK(grid.front() == doctest::Approx(std::pow(40.0, -2.0 / 3)));
        CHECK(grid[1] == doctest::Approx(std::pow(40.0, -0.65)));
        CHECK(grid.back() == doctest::Approx(std::pow(40.0, -0.35)));
        CHECK(std::find_if(grid.begin(), grid.end(), [](double p) { return std::abs(p - std::pow(40.0, -2.0 / 3)) < 1e-12; }) !=
            grid.end());
        auto path_grid = default_p_grid(directed_path(3), 40);
        CHECK(path_grid.size() == 9);
        CHECK(path_grid[4] == doctest::Approx(1.0 / 40));
    }

    TEST_CASE("TT3 sweep is monotone and deterministic")
    {
        auto plan = default_plan(transitive_tournament(3), "TT3", {30}, 60, 2024);
        auto sweep = estimate_arrow_probability(plan);
        CHECK(sweep.points.size() == plan.p_grid[0].size());
        CHECK(monotone_within_ci(sweep.points));
        for (const auto & pt : sweep.points) {
            CHECK(pt.successes <= pt.trials);
            CHECK(pt.ci_lo <= pt.p_hat);
            CHECK(pt.p_hat <= pt.ci_hi);
        }
        auto csv = sweep_csv(sweep);
        CHECK(csv.rfind("pattern,n,p,trials,successes,p_hat,ci_lo,ci_hi,exhausted\n", 0) == 0);
        plan.jobs = 3;
        CHECK(sweep_csv(estimate_arrow_probability(plan)) == csv);
        auto json = sweep_summary_json(sweep);
        CHECK(json.find("\"p_half\"") != std::string::npos);
        CHECK(json.find("\"gamma\"") != std::string::npos);
    }

    TEST_CASE("exhausted trials are counted separately")
    {
        auto plan = default_plan(transitive_tournament(3), "TT3", {24}, 10, 1);
        plan.p_grid = {{0.9}};
        plan.budget.copies = 1;
        auto sweep = estimate_arrow_probability(plan);
        CHECK(sweep.points[0].exhausted == 10);
        CHECK(sweep.points[0].successes == 0);
        CHECK(! sweep.points[0].usable);
        CHECK(! sweep.crossings[0].p_half);
    }

    TEST_CASE("plan validation")
    {
        auto plan = default_plan(transitive_tournament(3), "TT3", {24}, 0, 1);
        CHECK_THROWS_AS((void) estimate_arrow_probability(plan), InvalidInput);
        plan.trials = 1;
        plan.p_grid = {{0.3, 0.2}};
        CHECK_THROWS_AS((void) estimate_arrow_probability(plan), InvalidInput);
        plan.p_grid = {{0.0, 0.2}};
        CHECK_THROWS_AS((void) estimate_arrow_probability(plan), InvalidInput);
        plan.p_grid = {};
        CHECK_THROWS_AS((void) estimate_arrow_probability(plan), InvalidInput);
    }

    TEST_CASE("K4 packings")
    {
        CHECK(disjoint_k4_packing(complete_graph(4)).count == 1);
        auto bridged = two_disjoint_k4_bridged();
        CHECK(disjoint_k4_packing(bridged, true).count == 2);
        CHECK(disjoint_k4_packing(complete_graph(7)).count == 1);
        CHECK(disjoint_k4_packing(complete_graph(7), true).count == 1);
        CHECK(k4_copies(complete_graph(6)).size() == 15);
        CHECK(k4_copies(cycle_graph(8)).empty());
        CHECK_THROWS_AS((void) disjoint_k4_packing(Graph(21), true), TooLarge);
    }

    TEST_CASE("exact packing dominates greedy and respects vertex bound")
    {
        Rng rng(83);
        for (int trial = 0; trial < 150; ++trial) {
            int n = 4 + static_cast<int>(rng() % 9);
            auto g = sample_gnp(n, 0.75, rng);
            auto greedy = disjoint_k4_packing(g);
            auto exact = disjoint_k4_packing(g, true);
            CHECK(exact.exact);
            CHECK(exact.count >= greedy.count);
            CHECK(exact.count <= n / 4);
            CHECK(exact.count * 1 <= static_cast<int>(k4_copies(g).size()));
            VertexSet used = 0;
            for (const auto & k : exact.copies) {
                for (int v : k) {
                    CHECK(! (used & bit(v)));
                    used |= bit(v);
                }
                for (int i = 0; i < 4; ++i)
                    for (int j = i + 1; j < 4; ++j)
                        CHECK(g.adjacent(k[i], k[j]));
            }
            CHECK(static_cast<int>(exact.copies.size()) == exact.count);
        }
    }

    TEST_CASE("tree probe, subcritical regime")
    {
        // a(T) = 3 for the in-out star (1, 2).
        auto rows = tree_threshold_probe(in_out_star(1, 2), {0.5}, 50, 200, 7);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].successes == 0);
        CHECK(rows[0].exhausted == 0);
        CHECK(rows[0].core_empty == 200);
    }

    TEST_CASE("tree probe for P3 matches non-bipartiteness sample by sample")
    {
        std::vector<double> bs{0.5, 1.0, 2.0, 3.0};
        int n = 40, trials = 60;
        auto rows = tree_threshold_probe(directed_path(3), bs, n, trials, 11);
        for (std::size_t bi = 0; bi < bs.size(); ++bi) {
            int odd = 0;
            for (int t = 0; t < trials; ++t)
                odd += ! is_bipartite(sample_gnp(n, bs[bi] / n, trial_seed(11, n, static_cast<int>(bi), t)));
            CHECK(rows[bi].successes == odd);
        }
        for (std::size_t i = 1; i < rows.size(); ++i)
            CHECK(rows[i - 1].ci_lo <= rows[i].ci_hi);
        auto csv = tree_probe_csv(rows);
        CHECK(csv.rfind("b,p,trials,successes,p_hat,ci_lo,ci_hi,exhausted,core_empty\n", 0) == 0);
    }

    TEST_CASE("directed P3 threshold exponent is near 1")
    {
        // The default window of +-0.15 around 1/n does not reach P(G -> P3) = 1/2 at these sizes.
        auto p3 = directed_path(3);
        auto plan = default_plan(p3, "P3", {24, 32, 40, 48, 56}, 400, 3);
        for (std::size_t i = 0; i < plan.ns.size(); ++i)
            plan.p_grid[i] = default_p_grid(p3, plan.ns[i], 9, 0.6);
        auto sweep = estimate_arrow_probability(plan);
        REQUIRE(sweep.fit);
        CHECK(sweep.fit->points == 5);
        CHECK(sweep.fit->gamma >= 0.8);
        CHECK(sweep.fit->gamma <= 1.2);
    }

    TEST_CASE("parallel_for runs every index once and rethrows")
    {
        std::vector<int> hits(100, 0);
        parallel_for(100, 4, [&](int i) { hits[i]++; });
        CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
        CHECK_THROWS_AS(parallel_for(10, 3, [](int i) {
            if (i == 7)
                throw InvalidInput{"boom"};
        }),
            InvalidInput);
    }
}
