#ifndef ARROWLAB_GUARD_ARROWLAB_CONTAINERS_HH
#define ARROWLAB_GUARD_ARROWLAB_CONTAINERS_HH 1

#include <arrowlab/graph.hh>
#include <arrowlab/rational.hh>

#include <span>
#include <string>
#include <vector>

namespace arrowlab
{
    /// The l-uniform hypergraph D(n, H) on the arcs of the complete digraph on n
    /// vertices, whose edges are the arc sets of copies of H (l = e(H)).
    /// Materialised only for small cases: n <= 7, v(H) <= 4.
    struct ContainerHypergraph
    {
        int n = 0;
        int uniformity = 0;
        std::vector<Arc> vertices;           ///< arcs of the complete digraph, sorted
        std::vector<std::vector<int>> edges; ///< each a sorted list of vertex indices

        [[nodiscard]] auto vertex_index(Arc a) const -> int;

        /// Number of edges containing every arc of j.
        [[nodiscard]] auto degree(std::span<const Arc> j) const -> long long;
    };

    [[nodiscard]] auto build_container_hypergraph(int n, const OrientedGraph & h) -> ContainerHypergraph;

    /// Copies F of h on V_J ∪ S (S disjoint, |S| = v(h) - |V_J|) with J ⊆ E(F).
    /// Zero when |V_J| > v(h). J must be non-empty with at most e(h) arcs.
    [[nodiscard]] auto emb_count(std::span<const Arc> j, const OrientedGraph & h) -> long long;

    /// d(J) = C(n - |V_J|, h - |V_J|) * emb(J).
    [[nodiscard]] auto analytic_degree(int n, std::span<const Arc> j, const OrientedGraph & h) -> BigInt;

    /// f[l] = least vertex count of a sub-digraph of h with l arcs, for l = 1..e(h); f[0] is unused.
    [[nodiscard]] auto f_table(const OrientedGraph & h) -> std::vector<int>;

    /// d_j for j = 1..l (index 0 unused). Degrees in D(n, h) depend only on the
    /// isomorphism type of J, and the complete digraph is arc-transitive, so
    /// every hypergraph vertex has the same maximum j-degree: the largest
    /// analytic d(J) over j-arc subsets of h.
    [[nodiscard]] auto analytic_max_degrees(long long n, const OrientedGraph & h) -> std::vector<BigInt>;

    /// The same statistics read off a materialised hypergraph: the average over
    /// hypergraph vertices of the maximum degree of a j-set containing it.
    [[nodiscard]] auto explicit_max_degrees(const ContainerHypergraph & hg) -> std::vector<Rational>;

    struct DegreeProfile
    {
        long long n = 0;
        int l = 0;
        std::vector<int> f;
        std::vector<BigInt> d;         ///< d[j], j = 1..l
        std::vector<Rational> delta_j; ///< j = 2..l (entries 0, 1 unused)
        Rational delta;
    };

    /// Co-degree function δ = 2^{C(l,2)-1} Σ_{j=2..l} 2^{-C(j-1,2)} d_j / (d_1 τ^{j-1}),
    /// exact for rational τ > 0. δ = 0 when l < 2.
    [[nodiscard]] auto delta(long long n, const OrientedGraph & h, const Rational & tau) -> DegreeProfile;

    /// Certified comparison of δ(D(n,h), τ) against 2^{C(l,2)} h^{h-2} / D at
    /// τ = D n^{-1/m2(h)}. The irrational power of n is enclosed between
    /// dyadic rationals, so `holds` is decided exactly.
    struct CoDegreeBound
    {
        Rational bound;
        Rational delta_lo, delta_hi; ///< δ lies in [delta_lo, delta_hi]
        std::vector<double> delta_j; ///< midpoint approximations, indexed by j = 2..l
        bool holds = false;
    };

    [[nodiscard]] auto co_degree_bound_check(long long n, const OrientedGraph & h, const Rational & d_factor) -> CoDegreeBound;

    enum class SaturationOutcome
    {
        conclusion_holds,
        conclusion_fails,
        hypothesis_unmet
    };

    [[nodiscard]] auto to_string(SaturationOutcome o) -> std::string;

    /// Given an oriented f_arrow on n vertices with at most C(n,h)/(2 C(R,h))
    /// copies of h, checks |E(K_n) \ F| >= n^2 / (2 R^2). Requires R <= n <= 7.
    [[nodiscard]] auto saturation_check(int n, const OrientedGraph & f_arrow, const OrientedGraph & h, int ramsey)
        -> SaturationOutcome;
}

#endif
