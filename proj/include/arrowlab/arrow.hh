#ifndef ARROWLAB_GUARD_ARROWLAB_ARROW_HH
#define ARROWLAB_GUARD_ARROWLAB_ARROW_HH 1

#include <arrowlab/graph.hh>

#include <functional>
#include <optional>
#include <vector>

namespace arrowlab
{
    /// Patterns are limited to this many vertices.
    inline constexpr int pattern_size_limit = 10;

    /// One copy of the pattern in the host: `vertices[i]` is the image of pattern
    /// vertex i (-1 for isolated pattern vertices, which are never mapped) and
    /// `arcs` is the oriented arc set in host labels, sorted.
    struct Copy
    {
        std::vector<int> vertices;
        std::vector<Arc> arcs;
    };

    /// Every orientation pattern of a host subgraph that realises the pattern,
    /// one entry per distinct arc set (so automorphic embeddings collapse).
    struct CopyList
    {
        std::vector<Copy> copies;
    };

    /// Solver limits. Exhausting either raises ResourceLimit.
    struct Budget
    {
        long long nodes = 20'000'000;
        double seconds = 0.0;          ///< 0 means no time limit
        long long copies = 1'000'000;  ///< distinct pattern copies held in memory
    };

    struct SearchStats
    {
        long long nodes = 0; ///< branching decisions
        long long conflicts = 0;
        long long propagations = 0;
        long long copies = 0;
        int covered_edges = 0;
        int components = 0;
    };

    struct ArrowResult
    {
        bool verdict = false;
        /// When the verdict is false: an orientation of the host with no copy of the pattern.
        std::optional<OrientedGraph> certificate;
        SearchStats stats;
    };

    [[nodiscard]] auto enumerate_copies(const Graph & g, const OrientedGraph & h) -> CopyList;

    /// Decides whether every orientation of g contains h. Roots are ignored.
    [[nodiscard]] auto arrow(const Graph & g, const OrientedGraph & h, const Budget & budget = {}) -> ArrowResult;

    /// Calls f(image) for every injective arc-preserving map of the non-isolated
    /// vertices of h into d (image[i] == -1 for isolated i). Stops early when f
    /// returns false. If `through` >= 0 only maps using that host vertex.
    auto for_each_embedding(const OrientedGraph & d, const OrientedGraph & h, int through,
        const std::function<bool(const std::vector<int> &)> & f) -> void;

    /// Whether the digraph d contains a copy of h (isolated vertices of h included).
    [[nodiscard]] auto contains_copy(const OrientedGraph & d, const OrientedGraph & h) -> bool;

    /// Number of distinct copies (arc sets) of h in d. h must have no isolated vertices.
    [[nodiscard]] auto count_copies(const OrientedGraph & d, const OrientedGraph & h) -> long long;

    /// A certificate is valid iff it orients exactly g and contains no copy of h.
    [[nodiscard]] auto verify_certificate(const Graph & g, const OrientedGraph & h, const OrientedGraph & certificate) -> bool;

    /// Least n <= n_max with K_n -> h, found by generating h-free tournaments one
    /// vertex at a time with isomorph rejection; nullopt if none up to n_max.
    /// Requires acyclic h with at most 5 vertices and n_max <= 10.
    [[nodiscard]] auto oriented_ramsey_number(const OrientedGraph & h, int n_max, const Budget & budget = {}) -> std::optional<int>;

    /// The isomorphism classes of h-free tournaments on n vertices, as produced by
    /// the same generation procedure.
    [[nodiscard]] auto free_tournaments(const OrientedGraph & h, int n, const Budget & budget = {}) -> std::vector<OrientedGraph>;
}

#endif
