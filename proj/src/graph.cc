#include <arrowlab/graph.hh>

#include <algorithm>
#include <string>

using std::optional;
using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace arrowlab
{
    namespace
    {
        auto check_size(int n) -> void
        {
            if (n < 0 || n > max_vertices)
                throw InvalidInput{"vertex count " + to_string(n) + " outside [0, " + to_string(max_vertices) + "]"};
        }
    }

    Graph::Graph(int n) :
        _n(n)
    {
        check_size(n);
        _adj.assign(n, 0);
    }

    Graph::Graph(int n, span<const Edge> edges) :
        Graph(n)
    {
        for (auto [u, v] : edges)
            add_edge(u, v);
    }

    auto Graph::check_vertex(int v) const -> void
    {
        if (v < 0 || v >= _n)
            throw InvalidInput{"vertex " + to_string(v) + " out of range for " + to_string(_n) + " vertices"};
    }

    auto Graph::edge_count() const -> int
    {
        int twice = 0;
        for (auto row : _adj)
            twice += set_size(row);
        return twice / 2;
    }

    auto Graph::max_degree() const -> int
    {
        int best = 0;
        for (auto row : _adj)
            best = std::max(best, set_size(row));
        return best;
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        for (int u = 0; u < _n; ++u)
            for_each_vertex(_adj[u] & ~all_vertices(u + 1), [&](int v) { result.emplace_back(u, v); });
        return result;
    }

    auto Graph::edges_within(VertexSet s) const -> int
    {
        int twice = 0;
        for_each_vertex(s, [&](int v) { twice += set_size(_adj[v] & s); });
        return twice / 2;
    }

    auto Graph::induced(VertexSet s) const -> Graph
    {
        vector<int> index(_n, -1);
        int k = 0;
        for_each_vertex(s, [&](int v) { index[v] = k++; });
        Graph result(k);
        for (auto [u, v] : edges())
            if (index[u] >= 0 && index[v] >= 0)
                result.add_edge(index[u], index[v]);
        return result;
    }

    auto Graph::add_edge(int u, int v) -> void
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw InvalidInput{"self-loop at vertex " + to_string(u)};
        _adj[u] |= bit(v);
        _adj[v] |= bit(u);
    }

    auto Graph::remove_edge(int u, int v) -> void
    {
        check_vertex(u);
        check_vertex(v);
        _adj[u] &= ~bit(v);
        _adj[v] &= ~bit(u);
    }

    OrientedGraph::OrientedGraph(int n, optional<int> root) :
        _n(n),
        _root(root)
    {
        check_size(n);
        _out.assign(n, 0);
        _in.assign(n, 0);
        if (root)
            check_vertex(*root);
    }

    OrientedGraph::OrientedGraph(int n, span<const Arc> arcs, optional<int> root) :
        OrientedGraph(n, root)
    {
        for (auto [u, v] : arcs)
            add_arc(u, v);
    }

    auto OrientedGraph::check_vertex(int v) const -> void
    {
        if (v < 0 || v >= _n)
            throw InvalidInput{"vertex " + to_string(v) + " out of range for " + to_string(_n) + " vertices"};
    }

    auto OrientedGraph::arc_count() const -> int
    {
        int total = 0;
        for (auto row : _out)
            total += set_size(row);
        return total;
    }

    auto OrientedGraph::arcs() const -> vector<Arc>
    {
        vector<Arc> result;
        for (int u = 0; u < _n; ++u)
            for_each_vertex(_out[u], [&](int v) { result.emplace_back(u, v); });
        return result;
    }

    auto OrientedGraph::with_root(optional<int> r) const -> OrientedGraph
    {
        if (r)
            check_vertex(*r);
        OrientedGraph result = *this;
        result._root = r;
        return result;
    }

    auto OrientedGraph::add_arc(int u, int v) -> void
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw InvalidInput{"loop at vertex " + to_string(u)};
        if (has_arc(v, u))
            throw InvalidInput{"digon between " + to_string(u) + " and " + to_string(v)};
        _out[u] |= bit(v);
        _in[v] |= bit(u);
    }

    auto underlying(const OrientedGraph & d) -> Graph
    {
        Graph g(d.size());
        for (auto [u, v] : d.arcs())
            g.add_edge(u, v);
        return g;
    }

    auto topological_order(const OrientedGraph & d) -> optional<vector<int>>
    {
        // Repeated source elimination, lowest index first.
        int n = d.size();
        vector<int> indeg(n), order;
        for (int v = 0; v < n; ++v)
            indeg[v] = d.in_degree(v);
        VertexSet remaining = all_vertices(n);
        while (remaining) {
            int source = -1;
            for_each_vertex(remaining, [&](int v) {
                if (source < 0 && indeg[v] == 0)
                    source = v;
            });
            if (source < 0)
                return std::nullopt;
            remaining &= ~bit(source);
            order.push_back(source);
            for_each_vertex(d.out_neighbours(source), [&](int w) { --indeg[w]; });
        }
        return order;
    }

    auto is_acyclic(const OrientedGraph & d) -> bool
    {
        return topological_order(d).has_value();
    }

    auto longest_path_vertices(const OrientedGraph & d) -> int
    {
        auto order = topological_order(d);
        if (! order)
            throw InvalidInput{"longest path requested for a digraph with a directed cycle"};
        vector<int> ending(d.size(), 1);
        int best = 0;
        for (int v : *order) {
            for_each_vertex(d.in_neighbours(v), [&](int u) { ending[v] = std::max(ending[v], ending[u] + 1); });
            best = std::max(best, ending[v]);
        }
        return best;
    }

    auto index_orientation(const Graph & g) -> OrientedGraph
    {
        OrientedGraph d(g.size());
        for (auto [u, v] : g.edges())
            d.add_arc(u, v);
        return d;
    }

    auto is_orientation_of(const OrientedGraph & d, const Graph & g) -> bool
    {
        return d.size() == g.size() && underlying(d) == g;
    }

    auto is_connected(const Graph & g) -> bool
    {
        if (g.size() == 0)
            return true;
        VertexSet seen = bit(0), frontier = bit(0);
        while (frontier) {
            VertexSet next = 0;
            for_each_vertex(frontier, [&](int v) { next |= g.neighbours(v); });
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == all_vertices(g.size());
    }

    auto is_forest(const Graph & g) -> bool
    {
        // A graph is a forest iff e = v - (number of components).
        int components = 0;
        VertexSet unseen = all_vertices(g.size());
        while (unseen) {
            ++components;
            VertexSet frontier = bit(std::countr_zero(unseen));
            unseen &= ~frontier;
            while (frontier) {
                VertexSet next = 0;
                for_each_vertex(frontier, [&](int v) { next |= g.neighbours(v); });
                frontier = next & unseen;
                unseen &= ~next;
            }
        }
        return g.edge_count() == g.size() - components;
    }

    auto is_tree(const Graph & g) -> bool
    {
        return g.size() >= 1 && is_connected(g) && g.edge_count() == g.size() - 1;
    }

    auto complete_graph(int n) -> Graph
    {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                g.add_edge(u, v);
        return g;
    }

    auto cycle_graph(int n) -> Graph
    {
        if (n < 3)
            throw InvalidInput{"cycle needs at least 3 vertices"};
        Graph g(n);
        for (int v = 0; v < n; ++v)
            g.add_edge(v, (v + 1) % n);
        return g;
    }

    auto path_graph(int n) -> Graph
    {
        if (n < 1)
            throw InvalidInput{"path needs at least 1 vertex"};
        Graph g(n);
        for (int v = 0; v + 1 < n; ++v)
            g.add_edge(v, v + 1);
        return g;
    }

    auto empty_graph(int n) -> Graph
    {
        return Graph(n);
    }

    auto directed_path(int t) -> OrientedGraph
    {
        if (t < 1)
            throw InvalidInput{"directed path needs at least 1 vertex"};
        OrientedGraph d(t);
        for (int v = 0; v + 1 < t; ++v)
            d.add_arc(v, v + 1);
        return d;
    }

    auto directed_cycle(int t) -> OrientedGraph
    {
        if (t < 3)
            throw InvalidInput{"directed cycle needs at least 3 vertices (length 2 is a digon)"};
        OrientedGraph d(t);
        for (int v = 0; v < t; ++v)
            d.add_arc(v, (v + 1) % t);
        return d;
    }

    auto transitive_tournament(int t) -> OrientedGraph
    {
        if (t < 1)
            throw InvalidInput{"transitive tournament needs at least 1 vertex"};
        OrientedGraph d(t);
        for (int u = 0; u < t; ++u)
            for (int v = u + 1; v < t; ++v)
                d.add_arc(u, v);
        return d;
    }

    auto in_out_star(int a, int b) -> OrientedGraph
    {
        if (a < 0 || b < 0 || a + b < 1)
            throw InvalidInput{"star needs a, b >= 0 with a + b >= 1"};
        OrientedGraph d(1 + a + b);
        for (int i = 1; i <= a; ++i)
            d.add_arc(i, 0);
        for (int i = a + 1; i <= a + b; ++i)
            d.add_arc(0, i);
        return d;
    }

    auto make_family(std::string_view kind, span<const int> params) -> AnyGraph
    {
        auto want = [&](std::size_t count) {
            if (params.size() != count)
                throw InvalidInput{"family '" + string{kind} + "' takes " + to_string(count) + " parameter(s)"};
            for (int p : params)
                if (p <= 0 && ! (kind == "in_out_star"))
                    throw InvalidInput{"family parameters must be positive"};
        };
        if (kind == "complete") {
            want(1);
            return complete_graph(params[0]);
        }
        if (kind == "cycle") {
            want(1);
            return cycle_graph(params[0]);
        }
        if (kind == "path") {
            want(1);
            return path_graph(params[0]);
        }
        if (kind == "empty") {
            want(1);
            return empty_graph(params[0]);
        }
        if (kind == "directed_cycle") {
            want(1);
            return directed_cycle(params[0]);
        }
        if (kind == "directed_path") {
            want(1);
            return directed_path(params[0]);
        }
        if (kind == "transitive_tournament") {
            want(1);
            return transitive_tournament(params[0]);
        }
        if (kind == "in_out_star") {
            want(2);
            return in_out_star(params[0], params[1]);
        }
        throw InvalidInput{"unknown family '" + string{kind} + "'"};
    }
}
