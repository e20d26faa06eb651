#include <arrowlab/arrow.hh>
#include <arrowlab/containers.hh>
#include <arrowlab/density.hh>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

using std::map;
using std::set;
using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace arrowlab
{
    namespace
    {
        auto require_pattern(const OrientedGraph & h) -> void
        {
            if (h.arc_count() < 1)
                throw InvalidInput{"container calculus needs a pattern with at least one arc"};
            for (int v = 0; v < h.size(); ++v)
                if (! h.neighbours(v))
                    throw InvalidInput{"container calculus needs a pattern without isolated vertices"};
            if (h.size() > 8)
                throw TooLarge{"container calculus limited to patterns on at most 8 vertices"};
            if (h.arc_count() > 20)
                throw TooLarge{"container calculus limited to patterns with at most 20 arcs"};
        }

        auto touched(span<const Arc> j) -> vector<int>
        {
            vector<int> vs;
            for (auto [a, b] : j) {
                vs.push_back(a);
                vs.push_back(b);
            }
            std::sort(vs.begin(), vs.end());
            vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
            return vs;
        }

        auto arcs_of_mask(const vector<Arc> & arcs, unsigned mask) -> vector<Arc>
        {
            vector<Arc> result;
            for (std::size_t i = 0; i < arcs.size(); ++i)
                if (mask >> i & 1)
                    result.push_back(arcs[i]);
            return result;
        }

        // Calls f(sorted arc set) once per copy of h whose vertex images are an
        // injective map into [n] (so the complete digraph supplies every arc).
        template <typename F>
        auto for_each_copy_in_complete(int n, const OrientedGraph & h, F && f) -> void
        {
            auto arcs = h.arcs();
            set<vector<Arc>> seen;
            vector<int> image(h.size(), -1);
            VertexSet used = 0;
            auto recurse = [&](auto & self, int v) -> void {
                if (v == h.size()) {
                    vector<Arc> b;
                    for (auto [x, y] : arcs)
                        b.emplace_back(image[x], image[y]);
                    std::sort(b.begin(), b.end());
                    if (seen.insert(b).second)
                        f(b);
                    return;
                }
                for (int x = 0; x < n; ++x)
                    if (! (used >> x & 1)) {
                        image[v] = x;
                        used |= bit(x);
                        self(self, v + 1);
                        used &= ~bit(x);
                    }
            };
            recurse(recurse, 0);
        }
    }

    auto ContainerHypergraph::vertex_index(Arc a) const -> int
    {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), a);
        if (it == vertices.end() || *it != a)
            throw InvalidInput{"not an arc of the complete digraph"};
        return static_cast<int>(it - vertices.begin());
    }

    auto ContainerHypergraph::degree(span<const Arc> j) const -> long long
    {
        vector<int> want;
        for (auto a : j)
            want.push_back(vertex_index(a));
        std::sort(want.begin(), want.end());
        want.erase(std::unique(want.begin(), want.end()), want.end());
        long long count = 0;
        for (const auto & e : edges)
            if (std::includes(e.begin(), e.end(), want.begin(), want.end()))
                ++count;
        return count;
    }

    auto build_container_hypergraph(int n, const OrientedGraph & h) -> ContainerHypergraph
    {
        require_pattern(h);
        if (n < 0 || n > 7 || h.size() > 4)
            throw TooLarge{"explicit container hypergraph limited to n <= 7 and v(H) <= 4"};
        ContainerHypergraph hg;
        hg.n = n;
        hg.uniformity = h.arc_count();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b)
                    hg.vertices.emplace_back(a, b);
        for_each_copy_in_complete(n, h, [&](const vector<Arc> & b) {
            vector<int> e;
            for (auto a : b)
                e.push_back(hg.vertex_index(a));
            std::sort(e.begin(), e.end());
            hg.edges.push_back(std::move(e));
        });
        return hg;
    }

    auto emb_count(span<const Arc> j, const OrientedGraph & h) -> long long
    {
        require_pattern(h);
        if (j.empty() || static_cast<int>(j.size()) > h.arc_count())
            throw InvalidInput{"emb_count needs 1 <= |J| <= e(H)"};
        auto vs = touched(j);
        int k = static_cast<int>(vs.size());
        if (k > h.size())
            return 0;

        // Place V_J on 0..k-1 and S on k..h-1; count copies on [h] containing J.
        vector<Arc> want;
        for (auto [a, b] : j) {
            int x = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), a) - vs.begin());
            int y = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), b) - vs.begin());
            want.emplace_back(x, y);
        }
        std::sort(want.begin(), want.end());
        want.erase(std::unique(want.begin(), want.end()), want.end());

        long long count = 0;
        for_each_copy_in_complete(h.size(), h, [&](const vector<Arc> & b) {
            if (std::includes(b.begin(), b.end(), want.begin(), want.end()))
                ++count;
        });
        return count;
    }

    auto analytic_degree(int n, span<const Arc> j, const OrientedGraph & h) -> BigInt
    {
        int k = static_cast<int>(touched(j).size());
        return binomial(n - k, h.size() - k) * emb_count(j, h);
    }

    auto f_table(const OrientedGraph & h) -> vector<int>
    {
        require_pattern(h);
        auto arcs = h.arcs();
        int l = static_cast<int>(arcs.size());
        vector<int> f(l + 1, h.size() + 1);
        f[0] = 0;
        for (unsigned mask = 1; mask < (1u << l); ++mask) {
            int j = std::popcount(mask);
            f[j] = std::min(f[j], static_cast<int>(touched(arcs_of_mask(arcs, mask)).size()));
        }
        return f;
    }

    auto analytic_max_degrees(long long n, const OrientedGraph & h) -> vector<BigInt>
    {
        require_pattern(h);
        auto arcs = h.arcs();
        int l = static_cast<int>(arcs.size());
        vector<BigInt> d(l + 1, 0);
        for (unsigned mask = 1; mask < (1u << l); ++mask) {
            auto a = arcs_of_mask(arcs, mask);
            long long k = static_cast<long long>(touched(a).size());
            BigInt value = binomial(n - k, h.size() - k) * emb_count(a, h);
            int j = std::popcount(mask);
            d[j] = std::max(d[j], value);
        }
        return d;
    }

    auto explicit_max_degrees(const ContainerHypergraph & hg) -> vector<Rational>
    {
        int l = hg.uniformity;
        int nv = static_cast<int>(hg.vertices.size());
        vector<Rational> result(l + 1, 0);
        if (nv == 0)
            return result;

        vector<vector<int>> incident(nv);
        for (std::size_t e = 0; e < hg.edges.size(); ++e)
            for (int v : hg.edges[e])
                incident[v].push_back(static_cast<int>(e));

        auto degree_of = [&](const vector<int> & j) {
            long long count = 0;
            for (int e : incident[j[0]])
                if (std::includes(hg.edges[e].begin(), hg.edges[e].end(), j.begin(), j.end()))
                    ++count;
            return count;
        };

        // A j-set of positive degree lies inside an edge, so the maximum over
        // j-sets containing v is attained inside some edge through v (or is 0).
        vector<BigInt> sums(l + 1, 0);
        for (int v = 0; v < nv; ++v) {
            vector<long long> best(l + 1, 0);
            for (int e : incident[v]) {
                vector<int> others;
                for (int w : hg.edges[e])
                    if (w != v)
                        others.push_back(w);
                for (unsigned mask = 0; mask < (1u << others.size()); ++mask) {
                    vector<int> j{v};
                    for (std::size_t i = 0; i < others.size(); ++i)
                        if (mask >> i & 1)
                            j.push_back(others[i]);
                    std::sort(j.begin(), j.end());
                    auto size = j.size();
                    best[size] = std::max(best[size], degree_of(j));
                }
            }
            for (int j = 1; j <= l; ++j)
                sums[j] += best[j];
        }
        for (int j = 1; j <= l; ++j)
            result[j] = Rational{sums[j], BigInt{nv}};
        return result;
    }

    auto delta(long long n, const OrientedGraph & h, const Rational & tau) -> DegreeProfile
    {
        if (tau <= 0)
            throw InvalidInput{"tau must be positive"};
        DegreeProfile p;
        p.n = n;
        p.l = h.arc_count();
        p.f = f_table(h);
        p.d = analytic_max_degrees(n, h);
        p.delta_j.assign(p.l + 1, 0);
        p.delta = 0;
        if (p.l < 2)
            return p;
        if (p.d[1] == 0)
            throw UndefinedInput{"average degree is zero (n < v(H)); co-degree function undefined"};

        Rational sum = 0;
        for (int j = 2; j <= p.l; ++j) {
            p.delta_j[j] = Rational{p.d[j]} / (Rational{p.d[1]} * pow(tau, j - 1));
            sum += p.delta_j[j] / pow(Rational{2}, (j - 1) * (j - 2) / 2);
        }
        p.delta = pow(Rational{2}, p.l * (p.l - 1) / 2 - 1) * sum;
        return p;
    }

    auto co_degree_bound_check(long long n, const OrientedGraph & h, const Rational & d_factor) -> CoDegreeBound
    {
        if (d_factor <= 0)
            throw InvalidInput{"D must be positive"};
        if (n < 1)
            throw InvalidInput{"n must be positive"};
        int l = h.arc_count();
        int hv = h.size();
        auto d = analytic_max_degrees(n, h);
        if (d[1] == 0)
            throw UndefinedInput{"average degree is zero (n < v(H)); co-degree function undefined"};

        Rational density = m2(h).value;
        // 1/m2 = q/p, so n^{(j-1)/m2} = x^{(j-1) q} with x = n^{1/p}.
        auto p = static_cast<unsigned>(boost::multiprecision::numerator(density));
        auto q = static_cast<int>(boost::multiprecision::denominator(density));

        CoDegreeBound result;
        result.bound = pow(Rational{2}, l * (l - 1) / 2) * pow(Rational{hv}, hv - 2) / d_factor;

        for (unsigned bits = 64; bits <= 4096; bits *= 2) {
            // r = floor(n^{1/p} 2^bits), by bisection on r^p <= n 2^{bits p}.
            BigInt target = BigInt{n} << (bits * p);
            BigInt lo = 0, hi = BigInt{1} << (bits + 64);
            while (hi - lo > 1) {
                BigInt mid = (lo + hi) >> 1;
                if (boost::multiprecision::pow(mid, p) <= target)
                    lo = mid;
                else
                    hi = mid;
            }
            bool exact = boost::multiprecision::pow(lo, p) == target;
            Rational scale = Rational{BigInt{1} << bits};
            Rational x_lo = Rational{lo} / scale, x_hi = exact ? x_lo : Rational{lo + 1} / scale;

            Rational sum_lo = 0, sum_hi = 0;
            result.delta_j.assign(l + 1, 0.0);
            for (int j = 2; j <= l; ++j) {
                Rational c = Rational{d[j]} / Rational{d[1]} * pow(d_factor, 1 - j) / pow(Rational{2}, (j - 1) * (j - 2) / 2);
                Rational t_lo = c * pow(x_lo, (j - 1) * q), t_hi = c * pow(x_hi, (j - 1) * q);
                sum_lo += t_lo;
                sum_hi += t_hi;
                result.delta_j[j] = to_double((t_lo + t_hi) / 2 * pow(Rational{2}, (j - 1) * (j - 2) / 2));
            }
            Rational front = l >= 2 ? pow(Rational{2}, l * (l - 1) / 2 - 1) : Rational{0};
            result.delta_lo = front * sum_lo;
            result.delta_hi = front * sum_hi;
            if (result.delta_hi <= result.bound) {
                result.holds = true;
                return result;
            }
            if (result.delta_lo > result.bound) {
                result.holds = false;
                return result;
            }
        }
        result.holds = false;
        return result;
    }

    auto to_string(SaturationOutcome o) -> string
    {
        switch (o) {
        case SaturationOutcome::conclusion_holds: return "conclusion_holds";
        case SaturationOutcome::conclusion_fails: return "conclusion_fails";
        case SaturationOutcome::hypothesis_unmet: return "hypothesis_unmet";
        }
        return "unknown";
    }

    auto saturation_check(int n, const OrientedGraph & f_arrow, const OrientedGraph & h, int ramsey) -> SaturationOutcome
    {
        require_pattern(h);
        if (n > 7)
            throw TooLarge{"saturation check limited to n <= 7"};
        if (f_arrow.size() != n)
            throw InvalidInput{"orientation must have exactly n vertices"};
        if (ramsey > n || ramsey < 1)
            throw InvalidInput{"saturation check needs 1 <= R <= n"};

        BigInt copies = count_copies(f_arrow, h);
        if (2 * binomial(ramsey, h.size()) * copies > binomial(n, h.size()))
            return SaturationOutcome::hypothesis_unmet;
        long long missing = 1LL * n * (n - 1) / 2 - f_arrow.arc_count();
        return 2LL * ramsey * ramsey * missing >= 1LL * n * n ? SaturationOutcome::conclusion_holds
                                                              : SaturationOutcome::conclusion_fails;
    }
}
