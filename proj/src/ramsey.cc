#include <arrowlab/arrow.hh>

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <string>

using std::map;
using std::optional;
using std::pair;
using std::to_string;
using std::vector;

namespace arrowlab
{
    namespace
    {
        // Isomorphism key for tournaments: the lexicographically smallest row
        // sequence over relabelings that list vertices in increasing order of an
        // invariant (out-degree, refined by out-neighbour degrees). Restricting to
        // invariant-respecting relabelings keeps the key a complete invariant
        // while cutting the permutation count.
        using Key = vector<VertexSet>;

        auto tournament_key(const OrientedGraph & d) -> Key
        {
            int n = d.size();
            vector<long long> inv(n);
            for (int v = 0; v < n; ++v)
                inv[v] = d.out_degree(v);
            for (int round = 0; round < 2; ++round) {
                vector<long long> next(n);
                for (int v = 0; v < n; ++v) {
                    long long sum = 0;
                    for_each_vertex(d.out_neighbours(v), [&](int w) { sum += inv[w]; });
                    next[v] = inv[v] * 4096 + sum;
                }
                inv = std::move(next);
            }

            vector<int> order(n);
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] != inv[b] ? inv[a] < inv[b] : a < b; });
            vector<pair<int, int>> groups;
            for (int i = 0; i < n;) {
                int j = i;
                while (j < n && inv[order[j]] == inv[order[i]])
                    ++j;
                groups.emplace_back(i, j);
                i = j;
            }
            for (auto [lo, hi] : groups)
                std::sort(order.begin() + lo, order.begin() + hi);

            Key best, candidate(n);
            vector<int> label(n);
            bool first = true;
            while (true) {
                for (int i = 0; i < n; ++i)
                    label[order[i]] = i;
                for (int i = 0; i < n; ++i) {
                    VertexSet row = 0;
                    for_each_vertex(d.out_neighbours(order[i]), [&](int w) { row |= bit(label[w]); });
                    candidate[i] = row;
                }
                if (first || candidate < best) {
                    best = candidate;
                    first = false;
                }
                std::size_t g = groups.size();
                while (g > 0) {
                    auto [lo, hi] = groups[g - 1];
                    if (std::next_permutation(order.begin() + lo, order.begin() + hi))
                        break;
                    --g;
                }
                if (g == 0)
                    break;
            }
            return best;
        }

        auto check_ramsey_pattern(const OrientedGraph & h, int n_max) -> void
        {
            if (h.size() > 5)
                throw TooLarge{"oriented Ramsey search limited to patterns on at most 5 vertices"};
            if (n_max > 10)
                throw TooLarge{"oriented Ramsey search limited to n_max <= 10"};
            if (! is_acyclic(h))
                throw InvalidInput{"pattern has a directed cycle, so no finite oriented Ramsey number exists"};
        }

        // One generation step: every way to add vertex k to each class, keeping
        // the h-free results up to isomorphism.
        auto extend(const vector<OrientedGraph> & level, const OrientedGraph & h, long long & nodes, const Budget & budget,
            std::chrono::steady_clock::time_point start) -> vector<OrientedGraph>
        {
            map<Key, OrientedGraph> next;
            for (const auto & t : level) {
                int k = t.size();
                for (VertexSet mask = 0; mask < (VertexSet{1} << k); ++mask) {
                    if (++nodes > budget.nodes)
                        throw ResourceLimit{"tournament search node budget exhausted"};
                    if (budget.seconds > 0.0 && (nodes & 1023) == 0 &&
                        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > budget.seconds)
                        throw ResourceLimit{"tournament search time budget exhausted"};

                    OrientedGraph child(k + 1);
                    for (auto [u, v] : t.arcs())
                        child.add_arc(u, v);
                    for (int i = 0; i < k; ++i) {
                        if (mask >> i & 1)
                            child.add_arc(k, i);
                        else
                            child.add_arc(i, k);
                    }

                    bool hit = false;
                    if (child.size() >= h.size()) {
                        if (h.arc_count() == 0)
                            hit = true;
                        else
                            // Copies avoiding vertex k already lie in t, unless t was too small to hold one.
                            for_each_embedding(child, h, k >= h.size() ? k : -1, [&](const vector<int> &) {
                                hit = true;
                                return false;
                            });
                    }
                    if (! hit)
                        next.try_emplace(tournament_key(child), std::move(child));
                }
            }
            vector<OrientedGraph> result;
            result.reserve(next.size());
            for (auto & [key, t] : next)
                result.push_back(std::move(t));
            return result;
        }
    }

    auto free_tournaments(const OrientedGraph & h, int n, const Budget & budget) -> vector<OrientedGraph>
    {
        check_ramsey_pattern(h, n);
        auto start = std::chrono::steady_clock::now();
        long long nodes = 0;
        vector<OrientedGraph> level{OrientedGraph(0)};
        if (h.size() == 0)
            return {};
        for (int k = 1; k <= n && ! level.empty(); ++k)
            level = extend(level, h, nodes, budget, start);
        return level;
    }

    auto oriented_ramsey_number(const OrientedGraph & h, int n_max, const Budget & budget) -> optional<int>
    {
        check_ramsey_pattern(h, n_max);
        if (h.size() == 0)
            return 0;
        auto start = std::chrono::steady_clock::now();
        long long nodes = 0;
        vector<OrientedGraph> level{OrientedGraph(0)};
        for (int k = 1; k <= n_max; ++k) {
            level = extend(level, h, nodes, budget, start);
            if (level.empty())
                return k;
        }
        return std::nullopt;
    }
}
