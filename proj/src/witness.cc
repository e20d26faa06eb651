#include <arrowlab/witness.hh>

#include <algorithm>
#include <string>

using std::to_string;
using std::vector;

namespace arrowlab
{
    namespace
    {
        auto greedy_clique(const Graph & g) -> int
        {
            int best = g.size() > 0 ? 1 : 0;
            for (int start = 0; start < g.size(); ++start) {
                VertexSet cand = g.neighbours(start);
                int size = 1;
                while (cand) {
                    int pick = -1, pick_deg = -1;
                    for_each_vertex(cand, [&](int v) {
                        int d = set_size(g.neighbours(v) & cand);
                        if (d > pick_deg) {
                            pick = v;
                            pick_deg = d;
                        }
                    });
                    ++size;
                    cand &= g.neighbours(pick);
                }
                best = std::max(best, size);
            }
            return best;
        }

        auto saturation(const Graph & g, const vector<int> & color, int v) -> VertexSet
        {
            VertexSet seen = 0;
            for_each_vertex(g.neighbours(v), [&](int w) {
                if (color[w] >= 0)
                    seen |= bit(color[w]);
            });
            return seen;
        }

        // Uncoloured vertex of maximum saturation, then maximum uncoloured degree, then lowest index.
        auto dsatur_pick(const Graph & g, const vector<int> & color) -> int
        {
            VertexSet uncoloured = 0;
            for (int v = 0; v < g.size(); ++v)
                if (color[v] < 0)
                    uncoloured |= bit(v);
            int best = -1, best_sat = -1, best_deg = -1;
            for_each_vertex(uncoloured, [&](int v) {
                int sat = set_size(saturation(g, color, v));
                int deg = set_size(g.neighbours(v) & uncoloured);
                if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                    best = v;
                    best_sat = sat;
                    best_deg = deg;
                }
            });
            return best;
        }

        auto greedy_dsatur(const Graph & g) -> Coloring
        {
            vector<int> color(g.size(), -1);
            int k = 0;
            for (int i = 0; i < g.size(); ++i) {
                int v = dsatur_pick(g, color);
                VertexSet taken = saturation(g, color, v);
                int c = std::countr_zero(~taken);
                color[v] = c;
                k = std::max(k, c + 1);
            }
            return Coloring{std::move(color), k};
        }
    }

    auto is_proper(const Graph & g, const Coloring & c) -> bool
    {
        if (static_cast<int>(c.color.size()) != g.size())
            return false;
        for (int v = 0; v < g.size(); ++v)
            if (c.color[v] < 0 || c.color[v] >= c.k)
                return false;
        for (auto [u, v] : g.edges())
            if (c.color[u] == c.color[v])
                return false;
        return true;
    }

    auto chromatic_number(const Graph & g, ChromaticMode mode, const Budget & budget) -> ChromaticResult
    {
        bool exact = mode == ChromaticMode::exact || (mode == ChromaticMode::automatic && g.size() <= exact_colouring_limit);
        if (mode == ChromaticMode::exact && g.size() > exact_colouring_limit)
            throw TooLarge{"exact colouring limited to " + to_string(exact_colouring_limit) + " vertices"};

        auto best = greedy_dsatur(g);
        if (! exact)
            return ChromaticResult{best.k, best, false};

        int lower = greedy_clique(g);
        vector<int> color(g.size(), -1);
        long long nodes = 0;

        auto search = [&](auto & self, int coloured, int used) -> void {
            if (used >= best.k || best.k == lower)
                return;
            if (coloured == g.size()) {
                best = Coloring{color, used};
                return;
            }
            if (++nodes > budget.nodes)
                throw ResourceLimit{"colouring node budget exhausted"};
            int v = dsatur_pick(g, color);
            VertexSet taken = saturation(g, color, v);
            for (int c = 0; c < used; ++c)
                if (! (taken >> c & 1)) {
                    color[v] = c;
                    self(self, coloured + 1, used);
                }
            if (used + 1 < best.k) {
                color[v] = used;
                self(self, coloured + 1, used + 1);
            }
            color[v] = -1;
        };
        search(search, 0, 0);
        return ChromaticResult{best.k, best, true};
    }

    auto ghrv_orientation(const Graph & g, const Coloring & c) -> OrientedGraph
    {
        if (! is_proper(g, c))
            throw InvalidInput{"colouring is not proper"};
        OrientedGraph d(g.size());
        for (auto [u, v] : g.edges()) {
            if (c.color[u] < c.color[v])
                d.add_arc(u, v);
            else
                d.add_arc(v, u);
        }
        return d;
    }

    auto k_core(const Graph & g, int k) -> CoreDecomposition
    {
        if (k < 0)
            throw InvalidInput{"core parameter must be non-negative"};
        CoreDecomposition result{k, {}, all_vertices(g.size())};
        while (result.core) {
            int pick = -1, pick_deg = 0;
            for_each_vertex(result.core, [&](int v) {
                int d = set_size(g.neighbours(v) & result.core);
                if (pick < 0 || d < pick_deg) {
                    pick = v;
                    pick_deg = d;
                }
            });
            if (pick_deg >= k)
                break;
            result.order.push_back(pick);
            result.core &= ~bit(pick);
        }
        return result;
    }

    auto restrict_to(const Graph & g, VertexSet s) -> Graph
    {
        Graph result(g.size());
        for (auto [u, v] : g.edges())
            if ((s >> u & 1) && (s >> v & 1))
                result.add_edge(u, v);
        return result;
    }

    auto star_shape(const OrientedGraph & s) -> StarShape
    {
        int n = s.size();
        if (n < 2 || s.arc_count() != n - 1)
            throw InvalidInput{"not an oriented star"};
        for (int c = 0; c < n; ++c)
            if (s.neighbours(c) == (all_vertices(n) & ~bit(c)))
                return StarShape{s.in_degree(c), s.out_degree(c)};
        throw InvalidInput{"not an oriented star"};
    }

    auto star_free_extension(const Graph & g, const OrientedGraph & core_orientation, const OrientedGraph & s) -> OrientedGraph
    {
        auto [a, b] = star_shape(s);
        auto decomposition = k_core(g, a + b);

        if (! is_orientation_of(core_orientation, restrict_to(g, decomposition.core)))
            throw PreconditionViolated{"core orientation does not orient exactly the (a+b)-core"};
        if (contains_copy(core_orientation, s))
            throw PreconditionViolated{"core orientation already contains the star"};

        OrientedGraph result = core_orientation.with_root(std::nullopt);
        VertexSet placed = decomposition.core;
        for (auto it = decomposition.order.rbegin(); it != decomposition.order.rend(); ++it) {
            int v = *it;
            for_each_vertex(g.neighbours(v) & placed, [&](int w) {
                if (result.in_degree(w) <= a - 1)
                    result.add_arc(w, v);
                else
                    result.add_arc(v, w);
            });
            placed |= bit(v);
        }
        return result;
    }

    auto chi_over_log_check(const Graph & g, const OrientedGraph & t) -> bool
    {
        if (! is_tree(underlying(t)))
            throw InvalidInput{"chi_over_log_check needs an oriented tree"};
        if (g.size() <= 1)
            return false;
        int ceil_log2 = 0;
        while ((1 << ceil_log2) < g.size())
            ++ceil_log2;
        int chi = chromatic_number(g, ChromaticMode::exact).chi;
        return t.size() * ceil_log2 <= chi;
    }
}
