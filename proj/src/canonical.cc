#include <arrowlab/canonical.hh>

#include <algorithm>
#include <numeric>
#include <string>

using std::pair;
using std::span;
using std::to_string;
using std::vector;

namespace arrowlab
{
    namespace
    {
        // Visits every relabeling p (old label -> new label); when pin >= 0 only
        // those with p[pin] == 0.
        template <typename F>
        auto for_each_relabeling(int n, int pin, F && f) -> void
        {
            vector<int> rest(n - (pin >= 0 ? 1 : 0));
            std::iota(rest.begin(), rest.end(), pin >= 0 ? 1 : 0);
            vector<int> p(n);
            do {
                int k = 0;
                for (int v = 0; v < n; ++v)
                    p[v] = (v == pin) ? 0 : rest[k++];
                f(p);
            } while (std::next_permutation(rest.begin(), rest.end()));
        }

        auto minimise(int n, int pin, const vector<pair<int, int>> & arcs, bool directed) -> vector<pair<int, int>>
        {
            vector<pair<int, int>> best, candidate(arcs.size());
            bool first = true;
            for_each_relabeling(n, pin, [&](const vector<int> & p) {
                for (std::size_t i = 0; i < arcs.size(); ++i) {
                    int u = p[arcs[i].first], v = p[arcs[i].second];
                    candidate[i] = (directed || u < v) ? pair{u, v} : pair{v, u};
                }
                std::sort(candidate.begin(), candidate.end());
                if (first || candidate < best) {
                    best = candidate;
                    first = false;
                }
            });
            return best;
        }

        auto check_limit(int n, int size_limit) -> void
        {
            if (n > size_limit)
                throw TooLarge{"graph on " + to_string(n) + " vertices too large for canonicalization (limit " +
                    to_string(size_limit) + ")"};
        }
    }

    auto canonical(const OrientedGraph & d, int size_limit) -> CanonicalForm
    {
        check_limit(d.size(), size_limit);
        int pin = d.root().value_or(-1);
        return CanonicalForm{d.size(), true, d.root().has_value(), minimise(d.size(), pin, d.arcs(), true)};
    }

    auto canonical(const Graph & g, int size_limit) -> CanonicalForm
    {
        check_limit(g.size(), size_limit);
        return CanonicalForm{g.size(), false, false, minimise(g.size(), -1, g.edges(), false)};
    }

    auto relabel(const OrientedGraph & d, span<const int> p) -> OrientedGraph
    {
        std::optional<int> root;
        if (d.root())
            root = p[*d.root()];
        OrientedGraph result(d.size(), root);
        for (auto [u, v] : d.arcs())
            result.add_arc(p[u], p[v]);
        return result;
    }

    auto relabel(const Graph & g, span<const int> p) -> Graph
    {
        Graph result(g.size());
        for (auto [u, v] : g.edges())
            result.add_edge(p[u], p[v]);
        return result;
    }

    auto automorphism_count(const OrientedGraph & d, int size_limit) -> long long
    {
        check_limit(d.size(), size_limit);
        auto arcs = d.arcs();
        long long count = 0;
        vector<int> p(d.size());
        std::iota(p.begin(), p.end(), 0);
        do {
            if (d.root() && p[*d.root()] != *d.root())
                continue;
            bool same = std::all_of(arcs.begin(), arcs.end(), [&](const Arc & a) { return d.has_arc(p[a.first], p[a.second]); });
            if (same)
                ++count;
        } while (std::next_permutation(p.begin(), p.end()));
        return count;
    }
}
