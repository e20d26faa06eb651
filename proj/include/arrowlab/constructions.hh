#ifndef ARROWLAB_GUARD_ARROWLAB_CONSTRUCTIONS_HH
#define ARROWLAB_GUARD_ARROWLAB_CONSTRUCTIONS_HH 1

#include <arrowlab/graph.hh>
#include <arrowlab/random.hh>

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace arrowlab
{
    /// F∘H: one copy of H per vertex of F, F's arcs drawn between the copies'
    /// roots. Vertex (f, h) is numbered f * v(H) + h. H must be rooted; the
    /// result is unrooted.
    [[nodiscard]] auto rooted_product(const OrientedGraph & f, const OrientedGraph & h) -> OrientedGraph;

    // TT3 is 0 -> 1, 0 -> 2, 1 -> 2.
    [[nodiscard]] auto rooted_tt3_source() -> OrientedGraph;
    [[nodiscard]] auto rooted_tt3_middle() -> OrientedGraph;
    [[nodiscard]] auto rooted_tt3_sink() -> OrientedGraph;
    [[nodiscard]] auto rooted_tt3_variants() -> std::array<OrientedGraph, 3>;

    struct TreeParams
    {
        int height = 0;     ///< arcs on a longest directed path
        int max_degree = 0; ///< of the underlying tree
        int a = 0;          ///< max(height, max_degree)
    };

    /// Throws InvalidInput unless the underlying graph is a tree.
    [[nodiscard]] auto tree_params(const OrientedGraph & t) -> TreeParams;

    /// Uniform labelled tree on t vertices (Prüfer decoding), each edge oriented by a fair coin.
    [[nodiscard]] auto random_oriented_tree(int t, Rng & rng) -> OrientedGraph;
    [[nodiscard]] auto random_oriented_tree(int t, std::uint64_t seed) -> OrientedGraph;

    /// Arcs of the same random tree without the vertex cap, for statistics on large t.
    [[nodiscard]] auto random_oriented_tree_arcs(int t, Rng & rng) -> std::vector<Arc>;

    /// The tree encoded by a Prüfer sequence over labels 0..size+1, edges sorted.
    [[nodiscard]] auto prufer_decode_edges(std::span<const int> sequence) -> std::vector<Edge>;
    [[nodiscard]] auto prufer_decode(std::span<const int> sequence) -> Graph;
}

#endif
