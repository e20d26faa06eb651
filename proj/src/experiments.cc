#include <arrowlab/constructions.hh>
#include <arrowlab/density.hh>
#include <arrowlab/experiments.hh>
#include <arrowlab/witness.hh>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

using std::optional;
using std::pair;
using std::string;
using std::vector;

namespace arrowlab
{
    namespace
    {
        enum class Outcome : char
        {
            avoided,
            forced,
            exhausted
        };

        auto fmt(double x) -> string
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.10g", x);
            return buf;
        }

        auto has_triangle(const Graph & g) -> bool
        {
            for (auto [u, v] : g.edges())
                if (g.neighbours(u) & g.neighbours(v))
                    return true;
            return false;
        }

        auto logit(int successes, int trials) -> double
        {
            // Continuity-corrected so 0 and 1 stay finite.
            double q = (successes + 0.5) / (trials + 1.0);
            return std::log(q / (1.0 - q));
        }

        auto run_trial(const Graph & g, const OrientedGraph & h, const Budget & budget) -> Outcome
        {
            try {
                return arrow(g, h, budget).verdict ? Outcome::forced : Outcome::avoided;
            }
            catch (const ResourceLimit &) {
                return Outcome::exhausted;
            }
        }

        auto fill_estimate(SweepPoint & pt) -> void
        {
            int usable = pt.trials - pt.exhausted;
            pt.usable = pt.exhausted * 5 <= pt.trials && usable > 0;
            pt.p_hat = usable > 0 ? static_cast<double>(pt.successes) / usable : 0.0;
            std::tie(pt.ci_lo, pt.ci_hi) = wilson_interval(pt.successes, usable);
        }
    }

    auto sample_gnp(int n, double p, Rng & rng) -> Graph
    {
        if (p < 0.0 || p > 1.0)
            throw InvalidInput{"edge probability must lie in [0, 1]"};
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (bernoulli(rng, p))
                    g.add_edge(u, v);
        return g;
    }

    auto sample_gnp(int n, double p, std::uint64_t seed) -> Graph
    {
        Rng rng(seed);
        return sample_gnp(n, p, rng);
    }

    auto trial_seed(std::uint64_t seed, int n, int p_index, int trial) -> std::uint64_t
    {
        return derive_seed(seed, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(p_index), static_cast<std::uint64_t>(trial)});
    }

    auto parallel_for(int count, int jobs, const std::function<void(int)> & f) -> void
    {
        jobs = std::max(1, std::min(jobs, count));
        if (jobs == 1) {
            for (int i = 0; i < count; ++i)
                f(i);
            return;
        }
        std::atomic<int> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                for (int i = next++; i < count; i = next++) {
                    try {
                        f(i);
                    }
                    catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (! failure)
                            failure = std::current_exception();
                    }
                }
            });
        for (auto & t : workers)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
    }

    auto default_p_grid(const OrientedGraph & h, int n, int points, double half_width) -> vector<double>
    {
        auto g = underlying(h);
        double centre = -1.0 / to_double(m2(g).value);
        vector<double> grid;
        for (int i = 0; i < points; ++i) {
            double e = points == 1 ? centre : centre - half_width + 2.0 * half_width * i / (points - 1);
            grid.push_back(std::pow(static_cast<double>(n), e));
        }
        if (has_triangle(g))
            grid.push_back(std::pow(static_cast<double>(n), -2.0 / 3.0));
        for (auto & p : grid)
            p = std::min(p, 1.0);
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
        return grid;
    }

    auto default_plan(const OrientedGraph & h, string name, vector<int> ns, int trials, std::uint64_t seed) -> ExperimentPlan
    {
        ExperimentPlan plan;
        plan.pattern = h;
        plan.pattern_name = std::move(name);
        plan.ns = std::move(ns);
        for (int n : plan.ns)
            plan.p_grid.push_back(default_p_grid(h, n));
        plan.trials = trials;
        plan.seed = seed;
        return plan;
    }

    auto wilson_interval(int successes, int trials, double z) -> pair<double, double>
    {
        if (trials <= 0)
            return {0.0, 1.0};
        double nn = trials, phat = successes / nn, z2 = z * z;
        double centre = (phat + z2 / (2 * nn)) / (1 + z2 / nn);
        double half = z * std::sqrt(phat * (1 - phat) / nn + z2 / (4 * nn * nn)) / (1 + z2 / nn);
        return {std::clamp(centre - half, 0.0, phat), std::clamp(centre + half, phat, 1.0)};
    }

    auto find_p_half(const vector<SweepPoint> & points) -> optional<double>
    {
        vector<const SweepPoint *> usable;
        for (const auto & pt : points)
            if (pt.usable)
                usable.push_back(&pt);
        for (std::size_t i = 0; i + 1 < usable.size(); ++i) {
            const auto & a = *usable[i];
            const auto & b = *usable[i + 1];
            if (a.p_hat < 0.5 && b.p_hat >= 0.5) {
                double la = logit(a.successes, a.trials - a.exhausted), lb = logit(b.successes, b.trials - b.exhausted);
                double xa = std::log(a.p), xb = std::log(b.p);
                double t = (lb == la) ? 0.5 : (0.0 - la) / (lb - la);
                t = std::clamp(t, 0.0, 1.0);
                return std::exp(xa + t * (xb - xa));
            }
        }
        return std::nullopt;
    }

    auto fit_exponent(const vector<pair<int, double>> & data) -> optional<ExponentFit>
    {
        int k = static_cast<int>(data.size());
        if (k < 2)
            return std::nullopt;
        double mx = 0, my = 0;
        for (auto [n, p] : data) {
            mx += std::log(static_cast<double>(n));
            my += std::log(p);
        }
        mx /= k;
        my /= k;
        double sxx = 0, sxy = 0;
        for (auto [n, p] : data) {
            double dx = std::log(static_cast<double>(n)) - mx;
            sxx += dx * dx;
            sxy += dx * (std::log(p) - my);
        }
        if (sxx == 0)
            return std::nullopt;
        double slope = sxy / sxx;
        ExponentFit fit;
        fit.gamma = -slope;
        fit.points = k;
        if (k > 2) {
            double ssr = 0;
            for (auto [n, p] : data) {
                double r = std::log(p) - (my + slope * (std::log(static_cast<double>(n)) - mx));
                ssr += r * r;
            }
            fit.std_error = std::sqrt(ssr / (k - 2) / sxx);
        }
        return fit;
    }

    auto monotone_within_ci(const vector<SweepPoint> & points) -> bool
    {
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (points[i].usable && points[j].usable && points[i].ci_lo > points[j].ci_hi)
                    return false;
        return true;
    }

    auto estimate_arrow_probability(const ExperimentPlan & plan) -> ThresholdSweep
    {
        if (plan.trials < 1)
            throw InvalidInput{"trials must be at least 1"};
        if (plan.p_grid.size() != plan.ns.size())
            throw InvalidInput{"one p grid per n is required"};

        struct Task
        {
            int point, n, p_index, trial;
            double p;
        };
        ThresholdSweep sweep;
        sweep.pattern = plan.pattern_name;
        vector<Task> tasks;
        for (std::size_t i = 0; i < plan.ns.size(); ++i) {
            auto grid = plan.p_grid[i];
            if (! std::is_sorted(grid.begin(), grid.end()))
                throw InvalidInput{"p grids must be sorted"};
            for (std::size_t k = 0; k < grid.size(); ++k) {
                if (grid[k] <= 0.0 || grid[k] >= 1.0)
                    throw InvalidInput{"grid probabilities must lie in (0, 1)"};
                SweepPoint pt;
                pt.n = plan.ns[i];
                pt.p_index = static_cast<int>(k);
                pt.p = grid[k];
                pt.trials = plan.trials;
                for (int t = 0; t < plan.trials; ++t)
                    tasks.push_back(Task{static_cast<int>(sweep.points.size()), pt.n, pt.p_index, t, pt.p});
                sweep.points.push_back(pt);
            }
        }

        vector<Outcome> outcomes(tasks.size());
        parallel_for(static_cast<int>(tasks.size()), plan.jobs, [&](int i) {
            const auto & task = tasks[i];
            auto g = sample_gnp(task.n, task.p, trial_seed(plan.seed, task.n, task.p_index, task.trial));
            outcomes[i] = run_trial(g, plan.pattern, plan.budget);
        });

        for (std::size_t i = 0; i < tasks.size(); ++i) {
            auto & pt = sweep.points[tasks[i].point];
            if (outcomes[i] == Outcome::forced)
                ++pt.successes;
            else if (outcomes[i] == Outcome::exhausted)
                ++pt.exhausted;
        }
        for (auto & pt : sweep.points)
            fill_estimate(pt);

        vector<pair<int, double>> halves;
        for (int n : plan.ns) {
            vector<SweepPoint> row;
            for (const auto & pt : sweep.points)
                if (pt.n == n)
                    row.push_back(pt);
            auto half = find_p_half(row);
            sweep.crossings.push_back(Crossing{n, half});
            if (half)
                halves.emplace_back(n, *half);
        }
        sweep.fit = fit_exponent(halves);
        return sweep;
    }

    auto sweep_csv(const ThresholdSweep & sweep) -> string
    {
        string out = "pattern,n,p,trials,successes,p_hat,ci_lo,ci_hi,exhausted\n";
        for (const auto & pt : sweep.points)
            out += sweep.pattern + "," + std::to_string(pt.n) + "," + fmt(pt.p) + "," + std::to_string(pt.trials) + "," +
                std::to_string(pt.successes) + "," + fmt(pt.p_hat) + "," + fmt(pt.ci_lo) + "," + fmt(pt.ci_hi) + "," +
                std::to_string(pt.exhausted) + "\n";
        return out;
    }

    auto sweep_summary_json(const ThresholdSweep & sweep) -> string
    {
        nlohmann::ordered_json j;
        j["pattern"] = sweep.pattern;
        auto halves = nlohmann::ordered_json::array();
        for (const auto & c : sweep.crossings) {
            nlohmann::ordered_json row;
            row["n"] = c.n;
            row["p_half"] = c.p_half ? nlohmann::ordered_json(*c.p_half) : nlohmann::ordered_json(nullptr);
            halves.push_back(row);
        }
        j["p_half"] = halves;
        if (sweep.fit) {
            j["gamma"] = sweep.fit->gamma;
            j["gamma_se"] = sweep.fit->std_error ? nlohmann::ordered_json(*sweep.fit->std_error) : nlohmann::ordered_json(nullptr);
            j["fit_points"] = sweep.fit->points;
        }
        else {
            j["gamma"] = nullptr;
            j["gamma_se"] = nullptr;
            j["fit_points"] = 0;
        }
        auto unusable = nlohmann::ordered_json::array();
        for (const auto & pt : sweep.points)
            if (! pt.usable)
                unusable.push_back({{"n", pt.n}, {"p", pt.p}});
        j["unusable_points"] = unusable;
        return j.dump(2) + "\n";
    }

    auto k4_copies(const Graph & g) -> vector<K4>
    {
        vector<K4> result;
        int n = g.size();
        for (int a = 0; a < n; ++a) {
            VertexSet na = g.neighbours(a) & ~all_vertices(a + 1);
            for_each_vertex(na, [&](int b) {
                VertexSet nab = na & g.neighbours(b) & ~all_vertices(b + 1);
                for_each_vertex(nab, [&](int c) {
                    VertexSet nabc = nab & g.neighbours(c) & ~all_vertices(c + 1);
                    for_each_vertex(nabc, [&](int d) { result.push_back(K4{a, b, c, d}); });
                });
            });
        }
        return result;
    }

    auto disjoint_k4_packing(const Graph & g, bool exact) -> Packing
    {
        auto all = k4_copies(g);
        auto mask_of = [](const K4 & k) { return bit(k[0]) | bit(k[1]) | bit(k[2]) | bit(k[3]); };

        Packing greedy;
        VertexSet used = 0;
        for (const auto & k : all)
            if (! (mask_of(k) & used)) {
                greedy.copies.push_back(k);
                used |= mask_of(k);
            }
        greedy.count = static_cast<int>(greedy.copies.size());
        if (! exact)
            return greedy;

        if (g.size() > 20)
            throw TooLarge{"exact K4 packing limited to 20 vertices"};

        Packing best = greedy;
        best.exact = true;
        vector<K4> chosen;
        auto search = [&](auto & self, const vector<int> & avail) -> void {
            VertexSet cover = 0;
            for (int i : avail)
                cover |= mask_of(all[i]);
            int bound = static_cast<int>(chosen.size()) + set_size(cover) / 4;
            if (bound <= best.count)
                return;
            if (avail.empty()) {
                best.count = static_cast<int>(chosen.size());
                best.copies = chosen;
                return;
            }
            int v = std::countr_zero(cover);
            vector<int> without;
            for (int i : avail)
                if (! (mask_of(all[i]) & bit(v)))
                    without.push_back(i);
            for (int i : avail)
                if (mask_of(all[i]) & bit(v)) {
                    vector<int> rest;
                    for (int r : without)
                        if (! (mask_of(all[r]) & mask_of(all[i])))
                            rest.push_back(r);
                    chosen.push_back(all[i]);
                    self(self, rest);
                    chosen.pop_back();
                }
            self(self, without);
        };
        vector<int> avail(all.size());
        for (std::size_t i = 0; i < all.size(); ++i)
            avail[i] = static_cast<int>(i);
        search(search, avail);
        return best;
    }

    auto tree_threshold_probe(const OrientedGraph & t, const vector<double> & b_grid, int n, int trials, std::uint64_t seed,
        const Budget & budget, int jobs) -> vector<TreeProbeRow>
    {
        if (trials < 1)
            throw InvalidInput{"trials must be at least 1"};
        int k = tree_params(t).a;
        int total = static_cast<int>(b_grid.size()) * trials;
        vector<Outcome> outcomes(total);
        vector<char> empty_core(total);
        parallel_for(total, jobs, [&](int i) {
            int bi = i / trials, trial = i % trials;
            double p = std::min(1.0, b_grid[bi] / n);
            auto g = sample_gnp(n, p, trial_seed(seed, n, bi, trial));
            empty_core[i] = k_core(g, k).core == 0;
            outcomes[i] = run_trial(g, t, budget);
        });

        vector<TreeProbeRow> rows;
        for (std::size_t bi = 0; bi < b_grid.size(); ++bi) {
            TreeProbeRow row;
            row.b = b_grid[bi];
            row.p = std::min(1.0, b_grid[bi] / n);
            row.trials = trials;
            for (int trial = 0; trial < trials; ++trial) {
                int i = static_cast<int>(bi) * trials + trial;
                if (outcomes[i] == Outcome::forced)
                    ++row.successes;
                else if (outcomes[i] == Outcome::exhausted)
                    ++row.exhausted;
                row.core_empty += empty_core[i];
            }
            int usable = trials - row.exhausted;
            row.p_hat = usable > 0 ? static_cast<double>(row.successes) / usable : 0.0;
            std::tie(row.ci_lo, row.ci_hi) = wilson_interval(row.successes, usable);
            rows.push_back(row);
        }
        return rows;
    }

    auto tree_probe_csv(const vector<TreeProbeRow> & rows) -> string
    {
        string out = "b,p,trials,successes,p_hat,ci_lo,ci_hi,exhausted,core_empty\n";
        for (const auto & r : rows)
            out += fmt(r.b) + "," + fmt(r.p) + "," + std::to_string(r.trials) + "," + std::to_string(r.successes) + "," +
                fmt(r.p_hat) + "," + fmt(r.ci_lo) + "," + fmt(r.ci_hi) + "," + std::to_string(r.exhausted) + "," +
                std::to_string(r.core_empty) + "\n";
        return out;
    }
}
