#ifndef ARROWLAB_GUARD_ARROWLAB_EXPERIMENTS_HH
#define ARROWLAB_GUARD_ARROWLAB_EXPERIMENTS_HH 1

#include <arrowlab/arrow.hh>
#include <arrowlab/graph.hh>
#include <arrowlab/random.hh>

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arrowlab
{
    /// Each of the C(n,2) pairs, in lexicographic order, is an edge with probability p.
    [[nodiscard]] auto sample_gnp(int n, double p, Rng & rng) -> Graph;
    [[nodiscard]] auto sample_gnp(int n, double p, std::uint64_t seed) -> Graph;

    /// Seed of one Monte Carlo trial; independent of scheduling order.
    [[nodiscard]] auto trial_seed(std::uint64_t seed, int n, int p_index, int trial) -> std::uint64_t;

    struct ExperimentPlan
    {
        OrientedGraph pattern;
        std::string pattern_name;
        std::vector<int> ns;
        std::vector<std::vector<double>> p_grid; ///< one sorted grid per entry of ns
        int trials = 1;
        std::uint64_t seed = 0;
        Budget budget;
        int jobs = 1;
    };

    /// `points` geometric points spanning [n^{-1/m2-w}, n^{-1/m2+w}], plus the
    /// anchor n^{-2/3} = n^{-1/m(K4)} when the pattern contains a triangle.
    [[nodiscard]] auto default_p_grid(const OrientedGraph & h, int n, int points = 9, double half_width = 0.15)
        -> std::vector<double>;

    [[nodiscard]] auto default_plan(const OrientedGraph & h, std::string name, std::vector<int> ns, int trials,
        std::uint64_t seed) -> ExperimentPlan;

    struct SweepPoint
    {
        int n = 0;
        int p_index = 0;
        double p = 0.0;
        int trials = 0;
        int successes = 0; ///< among usable (non-exhausted) trials
        int exhausted = 0;
        double p_hat = 0.0;
        double ci_lo = 0.0, ci_hi = 0.0;
        bool usable = true; ///< false when more than 20% of trials exhausted the budget
    };

    struct Crossing
    {
        int n = 0;
        std::optional<double> p_half; ///< nullopt when no grid pair brackets 1/2
    };

    struct ExponentFit
    {
        double gamma = 0.0; ///< p_half ~ n^{-gamma}
        std::optional<double> std_error;
        int points = 0;
    };

    struct ThresholdSweep
    {
        std::string pattern;
        std::vector<SweepPoint> points;
        std::vector<Crossing> crossings;
        std::optional<ExponentFit> fit;
    };

    [[nodiscard]] auto estimate_arrow_probability(const ExperimentPlan & plan) -> ThresholdSweep;

    /// 95% Wilson score interval.
    [[nodiscard]] auto wilson_interval(int successes, int trials, double z = 1.959963984540054) -> std::pair<double, double>;

    /// Logit-linear interpolation in log p between the first usable grid pair
    /// with p_hat below and at-or-above 1/2. Points must be sorted by p.
    [[nodiscard]] auto find_p_half(const std::vector<SweepPoint> & points) -> std::optional<double>;

    /// Least squares of log p_half on log n.
    [[nodiscard]] auto fit_exponent(const std::vector<std::pair<int, double>> & n_and_p_half) -> std::optional<ExponentFit>;

    /// No earlier point's interval lies strictly above a later point's interval.
    [[nodiscard]] auto monotone_within_ci(const std::vector<SweepPoint> & points) -> bool;

    /// Columns: pattern,n,p,trials,successes,p_hat,ci_lo,ci_hi,exhausted
    [[nodiscard]] auto sweep_csv(const ThresholdSweep & sweep) -> std::string;

    /// {"pattern", "p_half": [{"n", "p_half"}], "gamma", "gamma_se", ...}
    [[nodiscard]] auto sweep_summary_json(const ThresholdSweep & sweep) -> std::string;

    using K4 = std::array<int, 4>;

    struct Packing
    {
        int count = 0;
        std::vector<K4> copies;
        bool exact = false;
    };

    [[nodiscard]] auto k4_copies(const Graph & g) -> std::vector<K4>;

    /// Greedy maximal packing of vertex-disjoint K4s in lexicographic order; with
    /// `exact`, a maximum packing by branch and bound (v(G) <= 20).
    [[nodiscard]] auto disjoint_k4_packing(const Graph & g, bool exact = false) -> Packing;

    struct TreeProbeRow
    {
        double b = 0.0;
        double p = 0.0;
        int trials = 0;
        int successes = 0;
        int exhausted = 0;
        double p_hat = 0.0;
        double ci_lo = 0.0, ci_hi = 0.0;
        int core_empty = 0; ///< samples with an empty a(T)-core
    };

    /// P(G(n, b/n) -> T) for each b, with the frequency of an empty a(T)-core.
    /// Trial seeds are trial_seed(seed, n, b_index, trial).
    [[nodiscard]] auto tree_threshold_probe(const OrientedGraph & t, const std::vector<double> & b_grid, int n, int trials,
        std::uint64_t seed, const Budget & budget = {}, int jobs = 1) -> std::vector<TreeProbeRow>;

    /// Columns: b,p,trials,successes,p_hat,ci_lo,ci_hi,exhausted,core_empty
    [[nodiscard]] auto tree_probe_csv(const std::vector<TreeProbeRow> & rows) -> std::string;

    /// Runs f(i) for i in [0, count) on `jobs` threads.
    auto parallel_for(int count, int jobs, const std::function<void(int)> & f) -> void;
}

#endif
