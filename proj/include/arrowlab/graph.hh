#ifndef ARROWLAB_GUARD_ARROWLAB_GRAPH_HH
#define ARROWLAB_GUARD_ARROWLAB_GRAPH_HH 1

#include <arrowlab/errors.hh>

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace arrowlab
{
    /// Hard cap on vertex count: adjacency rows are single 64-bit words.
    inline constexpr int max_vertices = 64;

    using VertexSet = std::uint64_t;
    using Edge = std::pair<int, int>;
    using Arc = std::pair<int, int>;

    [[nodiscard]] constexpr auto bit(int v) -> VertexSet { return VertexSet{1} << v; }

    [[nodiscard]] constexpr auto all_vertices(int n) -> VertexSet
    {
        return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
    }

    [[nodiscard]] inline auto set_size(VertexSet s) -> int { return std::popcount(s); }

    /// Calls f(v) for each member of s, in increasing order.
    template <typename F>
    auto for_each_vertex(VertexSet s, F && f) -> void
    {
        while (s) {
            int v = std::countr_zero(s);
            s &= s - 1;
            f(v);
        }
    }

    /// Undirected simple graph on 0..n-1, stored as one adjacency bit row per vertex.
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(int n);
        Graph(int n, std::span<const Edge> edges);

        [[nodiscard]] auto size() const -> int { return _n; }
        [[nodiscard]] auto edge_count() const -> int;
        [[nodiscard]] auto adjacent(int u, int v) const -> bool { return (_adj[u] >> v) & 1; }
        [[nodiscard]] auto neighbours(int v) const -> VertexSet { return _adj[v]; }
        [[nodiscard]] auto degree(int v) const -> int { return set_size(_adj[v]); }
        [[nodiscard]] auto max_degree() const -> int;

        /// Edges (u, v) with u < v, lexicographically sorted.
        [[nodiscard]] auto edges() const -> std::vector<Edge>;

        /// Number of edges with both ends in s.
        [[nodiscard]] auto edges_within(VertexSet s) const -> int;

        /// Subgraph induced by s, relabelled to 0..|s|-1 in increasing order.
        [[nodiscard]] auto induced(VertexSet s) const -> Graph;

        auto add_edge(int u, int v) -> void;
        auto remove_edge(int u, int v) -> void;

        friend auto operator==(const Graph &, const Graph &) -> bool = default;

    private:
        auto check_vertex(int v) const -> void;

        int _n = 0;
        std::vector<VertexSet> _adj;
    };

    /// Loop-free digraph with at most one arc per vertex pair, optionally rooted.
    class OrientedGraph
    {
    public:
        OrientedGraph() = default;
        explicit OrientedGraph(int n, std::optional<int> root = std::nullopt);
        OrientedGraph(int n, std::span<const Arc> arcs, std::optional<int> root = std::nullopt);

        [[nodiscard]] auto size() const -> int { return _n; }
        [[nodiscard]] auto arc_count() const -> int;
        [[nodiscard]] auto has_arc(int u, int v) const -> bool { return (_out[u] >> v) & 1; }
        [[nodiscard]] auto out_neighbours(int v) const -> VertexSet { return _out[v]; }
        [[nodiscard]] auto in_neighbours(int v) const -> VertexSet { return _in[v]; }
        [[nodiscard]] auto neighbours(int v) const -> VertexSet { return _out[v] | _in[v]; }
        [[nodiscard]] auto out_degree(int v) const -> int { return set_size(_out[v]); }
        [[nodiscard]] auto in_degree(int v) const -> int { return set_size(_in[v]); }
        [[nodiscard]] auto root() const -> std::optional<int> { return _root; }

        /// Arcs sorted lexicographically.
        [[nodiscard]] auto arcs() const -> std::vector<Arc>;

        [[nodiscard]] auto with_root(std::optional<int> r) const -> OrientedGraph;

        /// Adds (u, v). Loops and digons throw InvalidInput; repeating an arc is a no-op.
        auto add_arc(int u, int v) -> void;

        friend auto operator==(const OrientedGraph &, const OrientedGraph &) -> bool = default;

    private:
        auto check_vertex(int v) const -> void;

        int _n = 0;
        std::vector<VertexSet> _out, _in;
        std::optional<int> _root;
    };

    [[nodiscard]] auto underlying(const OrientedGraph & d) -> Graph;

    [[nodiscard]] auto is_acyclic(const OrientedGraph & d) -> bool;

    /// A topological order, or nullopt if d has a directed cycle.
    [[nodiscard]] auto topological_order(const OrientedGraph & d) -> std::optional<std::vector<int>>;

    /// Number of vertices on a longest directed path (0 for the empty digraph). Requires acyclic d.
    [[nodiscard]] auto longest_path_vertices(const OrientedGraph & d) -> int;

    /// Orients every edge of g from lower to higher index.
    [[nodiscard]] auto index_orientation(const Graph & g) -> OrientedGraph;

    /// True iff d is an orientation of exactly the edge set of g.
    [[nodiscard]] auto is_orientation_of(const OrientedGraph & d, const Graph & g) -> bool;

    [[nodiscard]] auto is_connected(const Graph & g) -> bool;
    [[nodiscard]] auto is_forest(const Graph & g) -> bool;
    [[nodiscard]] auto is_tree(const Graph & g) -> bool;

    // Standard families.
    [[nodiscard]] auto complete_graph(int n) -> Graph;
    [[nodiscard]] auto cycle_graph(int n) -> Graph;
    [[nodiscard]] auto path_graph(int n) -> Graph;
    [[nodiscard]] auto empty_graph(int n) -> Graph;
    [[nodiscard]] auto directed_path(int t) -> OrientedGraph;
    [[nodiscard]] auto directed_cycle(int t) -> OrientedGraph;
    [[nodiscard]] auto transitive_tournament(int t) -> OrientedGraph;
    /// Centre 0, in-neighbours 1..a, out-neighbours a+1..a+b.
    [[nodiscard]] auto in_out_star(int a, int b) -> OrientedGraph;

    using AnyGraph = std::variant<Graph, OrientedGraph>;

    /// Family lookup by name: complete, cycle, path, empty, directed_path, directed_cycle,
    /// transitive_tournament, in_out_star.
    [[nodiscard]] auto make_family(std::string_view kind, std::span<const int> params) -> AnyGraph;
}

#endif
