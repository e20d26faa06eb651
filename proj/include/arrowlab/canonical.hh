#ifndef ARROWLAB_GUARD_ARROWLAB_CANONICAL_HH
#define ARROWLAB_GUARD_ARROWLAB_CANONICAL_HH 1

#include <arrowlab/graph.hh>

#include <compare>
#include <vector>

namespace arrowlab
{
    /// Default bound for brute-force canonicalization (n! relabelings).
    inline constexpr int canonical_size_limit = 10;

    /// Lexicographically minimal sorted arc list over all relabelings. For rooted
    /// digraphs only relabelings sending the root to 0 are considered, so the root
    /// is part of the isomorphism type. Undirected edges are listed as (low, high).
    struct CanonicalForm
    {
        int n = 0;
        bool directed = false;
        bool rooted = false;
        std::vector<std::pair<int, int>> arcs;

        friend auto operator<=>(const CanonicalForm &, const CanonicalForm &) = default;
    };

    [[nodiscard]] auto canonical(const OrientedGraph & d, int size_limit = canonical_size_limit) -> CanonicalForm;
    [[nodiscard]] auto canonical(const Graph & g, int size_limit = canonical_size_limit) -> CanonicalForm;

    /// Relabels d by p (vertex v becomes p[v]); the root follows.
    [[nodiscard]] auto relabel(const OrientedGraph & d, std::span<const int> p) -> OrientedGraph;
    [[nodiscard]] auto relabel(const Graph & g, std::span<const int> p) -> Graph;

    /// Number of automorphisms (root-preserving when rooted), by brute force.
    [[nodiscard]] auto automorphism_count(const OrientedGraph & d, int size_limit = canonical_size_limit) -> long long;
}

#endif
