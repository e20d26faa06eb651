#include <arrowlab/constructions.hh>

#include <algorithm>
#include <string>
#include <vector>

using std::span;
using std::to_string;
using std::vector;

namespace arrowlab
{
    auto rooted_product(const OrientedGraph & f, const OrientedGraph & h) -> OrientedGraph
    {
        if (! h.root())
            throw InvalidInput{"rooted product needs a root on the second factor"};
        int hn = h.size(), r = *h.root();
        long long total = 1LL * f.size() * hn;
        if (total > max_vertices)
            throw TooLarge{"rooted product would have " + to_string(total) + " vertices"};

        OrientedGraph result(static_cast<int>(total));
        for (auto [x, y] : f.arcs())
            result.add_arc(x * hn + r, y * hn + r);
        for (int x = 0; x < f.size(); ++x)
            for (auto [u, v] : h.arcs())
                result.add_arc(x * hn + u, x * hn + v);
        return result;
    }

    auto rooted_tt3_source() -> OrientedGraph
    {
        return transitive_tournament(3).with_root(0);
    }

    auto rooted_tt3_middle() -> OrientedGraph
    {
        return transitive_tournament(3).with_root(1);
    }

    auto rooted_tt3_sink() -> OrientedGraph
    {
        return transitive_tournament(3).with_root(2);
    }

    auto rooted_tt3_variants() -> std::array<OrientedGraph, 3>
    {
        return {rooted_tt3_source(), rooted_tt3_middle(), rooted_tt3_sink()};
    }

    auto tree_params(const OrientedGraph & t) -> TreeParams
    {
        auto g = underlying(t);
        if (! is_tree(g))
            throw InvalidInput{"tree_params needs an oriented tree"};
        TreeParams p;
        p.height = longest_path_vertices(t) - 1;
        p.max_degree = g.max_degree();
        p.a = std::max(p.height, p.max_degree);
        return p;
    }

    auto prufer_decode_edges(span<const int> sequence) -> vector<Edge>
    {
        int n = static_cast<int>(sequence.size()) + 2;
        vector<int> degree(n, 1);
        for (int x : sequence) {
            if (x < 0 || x >= n)
                throw InvalidInput{"Prüfer label out of range"};
            ++degree[x];
        }

        // Linear-time decoding: `leaf` tracks the smallest current leaf.
        vector<Edge> edges;
        edges.reserve(n - 1);
        auto add = [&](int u, int v) { edges.emplace_back(std::min(u, v), std::max(u, v)); };
        int ptr = 0;
        while (degree[ptr] != 1)
            ++ptr;
        int leaf = ptr;
        for (int x : sequence) {
            add(leaf, x);
            if (--degree[x] == 1 && x < ptr)
                leaf = x;
            else {
                ++ptr;
                while (degree[ptr] != 1)
                    ++ptr;
                leaf = ptr;
            }
        }
        add(leaf, n - 1);
        std::sort(edges.begin(), edges.end());
        return edges;
    }

    auto prufer_decode(span<const int> sequence) -> Graph
    {
        if (sequence.size() + 2 > static_cast<std::size_t>(max_vertices))
            throw TooLarge{"tree would have more than " + to_string(max_vertices) + " vertices"};
        Graph g(static_cast<int>(sequence.size()) + 2);
        for (auto [u, v] : prufer_decode_edges(sequence))
            g.add_edge(u, v);
        return g;
    }

    auto random_oriented_tree_arcs(int t, Rng & rng) -> vector<Arc>
    {
        if (t < 1)
            throw InvalidInput{"random tree needs at least one vertex"};
        vector<Edge> edges;
        if (t == 2)
            edges.emplace_back(0, 1);
        else if (t > 2) {
            vector<int> sequence(t - 2);
            for (auto & x : sequence)
                x = static_cast<int>(uniform_below(rng, t));
            edges = prufer_decode_edges(sequence);
        }

        vector<Arc> arcs;
        arcs.reserve(edges.size());
        for (auto [u, v] : edges)
            arcs.push_back(rng() >> 63 ? Arc{u, v} : Arc{v, u});
        return arcs;
    }

    auto random_oriented_tree(int t, Rng & rng) -> OrientedGraph
    {
        if (t > max_vertices)
            throw TooLarge{"tree would have more than " + to_string(max_vertices) + " vertices"};
        auto arcs = random_oriented_tree_arcs(t, rng);
        OrientedGraph d(t);
        for (auto [u, v] : arcs)
            d.add_arc(u, v);
        return d;
    }

    auto random_oriented_tree(int t, std::uint64_t seed) -> OrientedGraph
    {
        Rng rng(seed);
        return random_oriented_tree(t, rng);
    }
}
