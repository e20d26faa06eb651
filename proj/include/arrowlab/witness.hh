#ifndef ARROWLAB_GUARD_ARROWLAB_WITNESS_HH
#define ARROWLAB_GUARD_ARROWLAB_WITNESS_HH 1

#include <arrowlab/arrow.hh>
#include <arrowlab/graph.hh>

#include <vector>

namespace arrowlab
{
    /// Exact colouring is attempted up to this many vertices.
    inline constexpr int exact_colouring_limit = 30;

    /// Colours are 0..k-1.
    struct Coloring
    {
        std::vector<int> color;
        int k = 0;
    };

    enum class ChromaticMode
    {
        automatic, ///< exact up to exact_colouring_limit vertices, greedy above
        exact,
        greedy
    };

    struct ChromaticResult
    {
        int chi = 0;       ///< exact value, or an upper bound when !exact
        Coloring coloring; ///< proper, with coloring.k == chi
        bool exact = false;
    };

    /// Branch and bound over DSATUR orderings with a greedy clique lower bound.
    [[nodiscard]] auto chromatic_number(const Graph & g, ChromaticMode mode = ChromaticMode::automatic,
        const Budget & budget = {}) -> ChromaticResult;

    [[nodiscard]] auto is_proper(const Graph & g, const Coloring & c) -> bool;

    /// Orients every edge towards the endpoint of larger colour.
    [[nodiscard]] auto ghrv_orientation(const Graph & g, const Coloring & c) -> OrientedGraph;

    struct CoreDecomposition
    {
        int k = 0;
        std::vector<int> order; ///< removed vertices, in removal order
        VertexSet core = 0;
    };

    /// Peels a minimum-degree vertex (lowest index on ties) while its degree is below k.
    [[nodiscard]] auto k_core(const Graph & g, int k) -> CoreDecomposition;

    /// g restricted to edges inside s, keeping g's labels (vertices outside s become isolated).
    [[nodiscard]] auto restrict_to(const Graph & g, VertexSet s) -> Graph;

    /// Centre in/out counts of an oriented star; throws InvalidInput for other digraphs.
    struct StarShape
    {
        int in = 0;
        int out = 0;
    };
    [[nodiscard]] auto star_shape(const OrientedGraph & s) -> StarShape;

    /// Extends an S-free orientation of the (a+b)-core of g (given on g's labels)
    /// to an S-free orientation of g, re-inserting peeled vertices in reverse
    /// order. An arc v w with w already placed points to v when w has at most
    /// a-1 in-neighbours, and to w otherwise. Throws PreconditionViolated if
    /// core_orientation is not an S-free orientation of the core.
    [[nodiscard]] auto star_free_extension(const Graph & g, const OrientedGraph & core_orientation, const OrientedGraph & s)
        -> OrientedGraph;

    /// v(T) * ceil(log2 v(G)) <= chi(G): a sufficient condition for G -> T on oriented trees T.
    /// Always false when v(G) <= 1.
    [[nodiscard]] auto chi_over_log_check(const Graph & g, const OrientedGraph & t) -> bool;
}

#endif
