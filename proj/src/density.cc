#include <arrowlab/density.hh>

#include <optional>
#include <string>

using std::optional;
using std::to_string;

namespace arrowlab
{
    namespace
    {
        auto d2_of(int v, int e) -> Rational
        {
            if (v >= 3)
                return Rational{e - 1, v - 2};
            if (v == 1 && e == 0)
                return 0;
            if (v == 2)
                return e == 0 ? Rational{0} : Rational{1, 2};
            throw UndefinedInput{"d2 is undefined on " + to_string(v) + " vertices"};
        }

        auto next_same_size(VertexSet s) -> VertexSet
        {
            VertexSet c = s & -s, r = s + c;
            return (((r ^ s) >> 2) / c) | r;
        }

        // Scans vertex subsets by decreasing size. `bound(k)` is an upper bound for
        // every subset of size k, `value(s)` the exact value of the induced subgraph.
        template <typename Value, typename Bound>
        auto best_induced(const Graph & h, Value && value, Bound && bound) -> DensityReport
        {
            int n = h.size();
            if (n < 1)
                throw UndefinedInput{"maximum density needs at least one vertex"};
            if (n > density_size_limit)
                throw TooLarge{"density scan limited to " + to_string(density_size_limit) + " vertices"};

            optional<Rational> best;
            VertexSet best_set = 0;
            for (int k = n; k >= 1; --k) {
                if (best && bound(k) < *best)
                    continue;
                VertexSet limit = all_vertices(n);
                for (VertexSet s = all_vertices(k); s <= limit && s != 0; ) {
                    Rational val = value(s, k);
                    if (! best || val > *best || (val == *best && lex_less(s, best_set))) {
                        best = val;
                        best_set = s;
                    }
                    if (k == n)
                        break;
                    s = next_same_size(s);
                }
            }

            DensityReport report{*best, best_set, {}};
            for (auto [u, v] : h.edges())
                if ((best_set >> u & 1) && (best_set >> v & 1))
                    report.edges.emplace_back(u, v);
            return report;
        }
    }

    auto lex_less(VertexSet a, VertexSet b) -> bool
    {
        while (a && b) {
            int x = std::countr_zero(a), y = std::countr_zero(b);
            if (x != y)
                return x < y;
            a &= a - 1;
            b &= b - 1;
        }
        return ! a && b;
    }

    auto d2(const Graph & h) -> Rational
    {
        return d2_of(h.size(), h.edge_count());
    }

    auto m2(const Graph & h) -> DensityReport
    {
        // Deleting edges never raises d2 at fixed v >= 3, and on two vertices K2
        // beats 2K1, so induced subgraphs suffice.
        int e = h.edge_count();
        return best_induced(
            h, [&](VertexSet s, int k) { return d2_of(k, h.edges_within(s)); },
            [&](int k) -> Rational {
                if (k < 3)
                    return Rational{1, 2};
                long long most = std::min<long long>(e, 1LL * k * (k - 1) / 2);
                return Rational{most - 1, k - 2};
            });
    }

    auto m(const Graph & h) -> DensityReport
    {
        int e = h.edge_count();
        return best_induced(
            h, [&](VertexSet s, int k) { return Rational{h.edges_within(s), k}; },
            [&](int k) { return Rational{std::min<long long>(e, 1LL * k * (k - 1) / 2), k}; });
    }
}
