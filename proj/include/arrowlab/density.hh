#ifndef ARROWLAB_GUARD_ARROWLAB_DENSITY_HH
#define ARROWLAB_GUARD_ARROWLAB_DENSITY_HH 1

#include <arrowlab/graph.hh>
#include <arrowlab/rational.hh>

#include <vector>

namespace arrowlab
{
    /// Subgraph scans enumerate 2^n vertex subsets; larger inputs throw TooLarge.
    inline constexpr int density_size_limit = 20;

    /// Maximum density value together with a maximising subgraph. The witness is
    /// induced on `vertices` and is the lexicographically smallest maximising subset.
    struct DensityReport
    {
        Rational value;
        VertexSet vertices = 0;
        std::vector<Edge> edges;
    };

    /// (e - 1) / (v - 2) for v >= 3; 0 for K1 and 2K1; 1/2 for K2. Other graphs throw UndefinedInput.
    [[nodiscard]] auto d2(const Graph & h) -> Rational;

    /// Maximum of d2 over all subgraphs.
    [[nodiscard]] auto m2(const Graph & h) -> DensityReport;

    /// Maximum of e/v over all non-empty subgraphs.
    [[nodiscard]] auto m(const Graph & h) -> DensityReport;

    [[nodiscard]] inline auto m2(const OrientedGraph & h) -> DensityReport { return m2(underlying(h)); }
    [[nodiscard]] inline auto m(const OrientedGraph & h) -> DensityReport { return m(underlying(h)); }

    /// True iff the sorted member list of a is lexicographically before that of b.
    [[nodiscard]] auto lex_less(VertexSet a, VertexSet b) -> bool;
}

#endif
