#include <arrowlab/arrow.hh>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <string>

using std::optional;
using std::pair;
using std::set;
using std::string;
using std::to_string;
using std::vector;

namespace arrowlab
{
    namespace
    {
        using Clock = std::chrono::steady_clock;

        class Deadline
        {
        public:
            explicit Deadline(const Budget & b) :
                _budget(b),
                _start(Clock::now())
            {
            }

            auto check_nodes(long long nodes) const -> void
            {
                if (nodes > _budget.nodes)
                    throw ResourceLimit{"node budget of " + to_string(_budget.nodes) + " exhausted"};
                if (_budget.seconds > 0.0 && (nodes & 255) == 0 && elapsed() > _budget.seconds)
                    throw ResourceLimit{"time budget of " + to_string(_budget.seconds) + "s exhausted"};
            }

        private:
            auto elapsed() const -> double
            {
                return std::chrono::duration<double>(Clock::now() - _start).count();
            }

            Budget _budget;
            Clock::time_point _start;
        };

        // A pattern vertex together with the already-placed pattern vertices it
        // must be joined to: +1 for an arc earlier -> this, -1 for this -> earlier.
        struct PlanStep
        {
            int vertex;
            vector<pair<int, int>> joins;
        };

        auto make_plan(const OrientedGraph & h) -> vector<PlanStep>
        {
            vector<PlanStep> plan;
            vector<int> position(h.size(), -1);
            VertexSet unplaced = 0;
            for (int v = 0; v < h.size(); ++v)
                if (h.neighbours(v))
                    unplaced |= bit(v);

            auto place = [&](int v) {
                PlanStep step{v, {}};
                for_each_vertex(h.neighbours(v), [&](int w) {
                    if (position[w] >= 0)
                        step.joins.emplace_back(w, h.has_arc(w, v) ? +1 : -1);
                });
                position[v] = static_cast<int>(plan.size());
                plan.push_back(std::move(step));
                unplaced &= ~bit(v);
            };

            // Breadth-first within each component, lowest index first, so every
            // vertex after a component's first has at least one join.
            while (unplaced) {
                int start = std::countr_zero(unplaced);
                vector<int> queue{start};
                place(start);
                for (std::size_t i = 0; i < queue.size(); ++i)
                    for_each_vertex(h.neighbours(queue[i]) & unplaced, [&](int w) {
                        place(w);
                        queue.push_back(w);
                    });
            }
            return plan;
        }

        // Generic backtracking embedder. `candidates(step, image)` returns the
        // host vertices compatible with the step's joins.
        template <typename Candidates, typename Visit>
        auto embed(const vector<PlanStep> & plan, int pattern_n, int host_n, Candidates && candidates, Visit && visit) -> void
        {
            vector<int> image(pattern_n, -1);
            VertexSet used = 0;
            bool stop = false;
            auto recurse = [&](auto & self, std::size_t depth) -> void {
                if (depth == plan.size()) {
                    if (! visit(image))
                        stop = true;
                    return;
                }
                const auto & step = plan[depth];
                VertexSet cand = step.joins.empty() ? all_vertices(host_n) : candidates(step, image);
                cand &= ~used;
                while (cand && ! stop) {
                    int x = std::countr_zero(cand);
                    cand &= cand - 1;
                    image[step.vertex] = x;
                    used |= bit(x);
                    self(self, depth + 1);
                    used &= ~bit(x);
                }
                image[step.vertex] = -1;
            };
            recurse(recurse, 0);
        }

        auto isolated_count(const OrientedGraph & h) -> int
        {
            int count = 0;
            for (int v = 0; v < h.size(); ++v)
                if (! h.neighbours(v))
                    ++count;
            return count;
        }

        auto check_pattern(const OrientedGraph & h) -> void
        {
            if (h.size() > pattern_size_limit)
                throw TooLarge{"pattern on " + to_string(h.size()) + " vertices exceeds the limit of " +
                    to_string(pattern_size_limit)};
        }

        struct Lit
        {
            int var;
            int val;
        };

        // Searches for an assignment of boolean edge directions that completes
        // none of the nogoods. Each nogood keeps a count of its literals that
        // are currently true; at size - 1 the last literal is forced false and
        // at size the branch fails. Failures are analysed to the first unique
        // implication point and learned as new nogoods.
        class NogoodSolver
        {
        public:
            NogoodSolver(int vars, vector<vector<Lit>> nogoods, const Deadline & deadline, SearchStats & stats) :
                _vars(vars),
                _deadline(deadline),
                _stats(stats),
                _occ(2 * vars),
                _value(vars, -1),
                _level(vars, 0),
                _reason(vars, -1),
                _seen(vars, 0),
                _activity(vars, 0.0),
                _phase(vars, 0)
            {
                for (auto & ng : nogoods)
                    add_nogood(std::move(ng));
                for (const auto & ng : _nogoods)
                    for (auto l : ng)
                        _activity[l.var] += 1.0;
            }

            // The satisfying assignment, or nullopt if every assignment completes a nogood.
            auto solve() -> optional<vector<int>>
            {
                for (std::size_t c = 0; c < _nogoods.size(); ++c) {
                    if (_nogoods[c].empty())
                        return std::nullopt;
                    if (_nogoods[c].size() == 1) {
                        auto l = _nogoods[c][0];
                        if (_value[l.var] == l.val)
                            return std::nullopt;
                        if (_value[l.var] < 0)
                            enqueue(l.var, 1 - l.val, static_cast<int>(c));
                    }
                }

                long long conflicts_since_restart = 0;
                int luby_index = 0;
                long long restart_limit = 64 * luby(luby_index);

                while (true) {
                    int conflict = propagate();
                    if (conflict >= 0) {
                        ++_stats.conflicts;
                        ++conflicts_since_restart;
                        if (decision_level() == 0)
                            return std::nullopt;
                        auto [learnt, back_level] = analyse(conflict);
                        backtrack(back_level);
                        auto uip = learnt.back();
                        int id = add_nogood(std::move(learnt));
                        enqueue(uip.var, 1 - uip.val, id);
                        _bump *= 1.0 / 0.95;
                        if (_bump > 1e100) {
                            for (auto & a : _activity)
                                a *= 1e-100;
                            _bump *= 1e-100;
                        }
                        continue;
                    }

                    if (conflicts_since_restart >= restart_limit) {
                        backtrack(0);
                        conflicts_since_restart = 0;
                        restart_limit = 64 * luby(++luby_index);
                    }

                    int var = pick();
                    if (var < 0) {
                        vector<int> result(_vars);
                        for (int v = 0; v < _vars; ++v)
                            result[v] = _value[v];
                        return result;
                    }
                    ++_stats.nodes;
                    _deadline.check_nodes(_stats.nodes);
                    _trail_lim.push_back(static_cast<int>(_trail.size()));
                    enqueue(var, _phase[var], -1);
                }
            }

        private:
            static auto luby(int i) -> long long
            {
                // Luby sequence 1 1 2 1 1 2 4 ...
                long long size = 1;
                int seq = 0;
                while (size < i + 1) {
                    ++seq;
                    size = 2 * size + 1;
                }
                long long x = i;
                while (size - 1 != x) {
                    size = (size - 1) >> 1;
                    --seq;
                    x %= size;
                }
                return 1LL << seq;
            }

            auto decision_level() const -> int { return static_cast<int>(_trail_lim.size()); }

            auto add_nogood(vector<Lit> lits) -> int
            {
                int id = static_cast<int>(_nogoods.size());
                int matched = 0;
                for (auto l : lits) {
                    _occ[2 * l.var + l.val].push_back(id);
                    // Only called with an empty propagation queue.
                    if (_value[l.var] == l.val)
                        ++matched;
                }
                _matched.push_back(matched);
                _nogoods.push_back(std::move(lits));
                return id;
            }

            auto enqueue(int var, int val, int reason) -> void
            {
                _value[var] = val;
                _level[var] = decision_level();
                _reason[var] = reason;
                _trail.push_back(var);
            }

            auto propagate() -> int
            {
                while (_qhead < static_cast<int>(_trail.size())) {
                    int var = _trail[_qhead++];
                    int val = _value[var];
                    int conflict = -1;
                    for (int c : _occ[2 * var + val]) {
                        int m = ++_matched[c];
                        int size = static_cast<int>(_nogoods[c].size());
                        if (m == size) {
                            if (conflict < 0)
                                conflict = c;
                        }
                        else if (m == size - 1 && conflict < 0) {
                            for (auto l : _nogoods[c])
                                if (_value[l.var] < 0) {
                                    enqueue(l.var, 1 - l.val, c);
                                    ++_stats.propagations;
                                    break;
                                }
                        }
                    }
                    if (conflict >= 0)
                        return conflict;
                }
                return -1;
            }

            auto analyse(int conflict) -> pair<vector<Lit>, int>
            {
                vector<Lit> learnt;
                int pending = 0, resolved = -1;
                int index = static_cast<int>(_trail.size()) - 1;
                int c = conflict;
                while (true) {
                    for (auto l : _nogoods[c]) {
                        if (l.var == resolved || _seen[l.var] || _level[l.var] == 0)
                            continue;
                        _seen[l.var] = 1;
                        _activity[l.var] += _bump;
                        if (_level[l.var] == decision_level())
                            ++pending;
                        else
                            learnt.push_back(Lit{l.var, _value[l.var]});
                    }
                    while (! _seen[_trail[index]])
                        --index;
                    resolved = _trail[index--];
                    _seen[resolved] = 0;
                    if (--pending == 0)
                        break;
                    c = _reason[resolved];
                }

                int back_level = 0;
                for (auto l : learnt) {
                    back_level = std::max(back_level, _level[l.var]);
                    _seen[l.var] = 0;
                }
                learnt.push_back(Lit{resolved, _value[resolved]});
                return {std::move(learnt), back_level};
            }

            auto backtrack(int level) -> void
            {
                if (decision_level() <= level)
                    return;
                int keep = _trail_lim[level];
                for (int i = static_cast<int>(_trail.size()) - 1; i >= keep; --i) {
                    int var = _trail[i];
                    if (i < _qhead)
                        for (int c : _occ[2 * var + _value[var]])
                            --_matched[c];
                    _phase[var] = _value[var];
                    _value[var] = -1;
                    _reason[var] = -1;
                }
                _trail.resize(keep);
                _trail_lim.resize(level);
                _qhead = std::min(_qhead, keep);
            }

            auto pick() const -> int
            {
                int best = -1;
                for (int v = 0; v < _vars; ++v)
                    if (_value[v] < 0 && (best < 0 || _activity[v] > _activity[best]))
                        best = v;
                return best;
            }

            int _vars;
            const Deadline & _deadline;
            SearchStats & _stats;
            vector<vector<Lit>> _nogoods;
            vector<int> _matched;
            vector<vector<int>> _occ;
            vector<int> _value, _level, _reason;
            vector<char> _seen;
            vector<double> _activity;
            vector<int> _phase;
            vector<int> _trail, _trail_lim;
            int _qhead = 0;
            double _bump = 1.0;
        };

        auto find_root(vector<int> & parent, int x) -> int
        {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        }
    }

    auto for_each_embedding(const OrientedGraph & d, const OrientedGraph & h, int through,
        const std::function<bool(const vector<int> &)> & f) -> void
    {
        auto plan = make_plan(h);
        embed(
            plan, h.size(), d.size(),
            [&](const PlanStep & step, const vector<int> & image) {
                VertexSet cand = all_vertices(d.size());
                for (auto [w, dir] : step.joins)
                    cand &= dir > 0 ? d.out_neighbours(image[w]) : d.in_neighbours(image[w]);
                return cand;
            },
            [&](const vector<int> & image) {
                if (through >= 0 && std::find(image.begin(), image.end(), through) == image.end())
                    return true;
                return f(image);
            });
    }

    auto contains_copy(const OrientedGraph & d, const OrientedGraph & h) -> bool
    {
        if (d.size() < h.size())
            return false;
        if (h.arc_count() == 0)
            return true;
        bool found = false;
        for_each_embedding(d, h, -1, [&](const vector<int> &) {
            found = true;
            return false;
        });
        return found;
    }

    auto count_copies(const OrientedGraph & d, const OrientedGraph & h) -> long long
    {
        if (isolated_count(h) > 0)
            throw InvalidInput{"count_copies needs a pattern without isolated vertices"};
        set<vector<Arc>> seen;
        auto arcs = h.arcs();
        for_each_embedding(d, h, -1, [&](const vector<int> & image) {
            vector<Arc> image_arcs;
            for (auto [u, v] : arcs)
                image_arcs.emplace_back(image[u], image[v]);
            std::sort(image_arcs.begin(), image_arcs.end());
            seen.insert(std::move(image_arcs));
            return true;
        });
        return static_cast<long long>(seen.size());
    }

    auto verify_certificate(const Graph & g, const OrientedGraph & h, const OrientedGraph & certificate) -> bool
    {
        return is_orientation_of(certificate, g) && ! contains_copy(certificate, h);
    }

    namespace
    {
        // Distinct copies of h in g; with a budget, aborts past its copy or time limit.
        auto collect_copies(const Graph & g, const OrientedGraph & h, const Budget * budget) -> CopyList
        {
            check_pattern(h);
            CopyList result;
            if (g.size() < h.size() || h.arc_count() == 0)
                return result;

            auto plan = make_plan(h);
            auto arcs = h.arcs();
            set<vector<Arc>> seen;
            long long visited = 0;
            auto start = std::chrono::steady_clock::now();
            embed(
                plan, h.size(), g.size(),
                [&](const PlanStep & step, const vector<int> & image) {
                    VertexSet cand = all_vertices(g.size());
                    for (auto [w, dir] : step.joins)
                        cand &= g.neighbours(image[w]);
                    return cand;
                },
                [&](const vector<int> & image) {
                    vector<Arc> image_arcs;
                    for (auto [u, v] : arcs)
                        image_arcs.emplace_back(image[u], image[v]);
                    std::sort(image_arcs.begin(), image_arcs.end());
                    if (seen.insert(image_arcs).second) {
                        result.copies.push_back(Copy{image, std::move(image_arcs)});
                        if (budget && static_cast<long long>(result.copies.size()) > budget->copies)
                            throw ResourceLimit{"more than " + to_string(budget->copies) + " pattern copies"};
                    }
                    if (budget && budget->seconds > 0.0 && (++visited & 4095) == 0 &&
                        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > budget->seconds)
                        throw ResourceLimit{"time budget of " + to_string(budget->seconds) + "s exhausted"};
                    return true;
                });
            return result;
        }
    }

    auto enumerate_copies(const Graph & g, const OrientedGraph & h) -> CopyList
    {
        return collect_copies(g, h, nullptr);
    }

    auto arrow(const Graph & g, const OrientedGraph & h, const Budget & budget) -> ArrowResult
    {
        check_pattern(h);
        ArrowResult result;

        // Cyclic patterns are avoided by any acyclic orientation.
        if (! is_acyclic(h)) {
            result.certificate = index_orientation(g);
            return result;
        }
        if (g.size() < h.size()) {
            result.certificate = index_orientation(g);
            return result;
        }
        if (h.arc_count() == 0) {
            result.verdict = true;
            return result;
        }

        auto copies = collect_copies(g, h, &budget);
        result.stats.copies = static_cast<long long>(copies.copies.size());

        // Variables are covered edges; value 0 orients low -> high.
        auto edges = g.edges();
        vector<int> edge_var(edges.size(), -1);
        auto edge_index = [&](int u, int v) {
            auto key = Edge{std::min(u, v), std::max(u, v)};
            return static_cast<int>(std::lower_bound(edges.begin(), edges.end(), key) - edges.begin());
        };
        vector<int> var_edge;
        vector<vector<Lit>> nogoods;
        nogoods.reserve(copies.copies.size());
        for (const auto & copy : copies.copies) {
            vector<Lit> lits;
            for (auto [u, v] : copy.arcs) {
                int e = edge_index(u, v);
                if (edge_var[e] < 0) {
                    edge_var[e] = static_cast<int>(var_edge.size());
                    var_edge.push_back(e);
                }
                lits.push_back(Lit{edge_var[e], u < v ? 0 : 1});
            }
            nogoods.push_back(std::move(lits));
        }
        int vars = static_cast<int>(var_edge.size());
        result.stats.covered_edges = vars;

        // Independent components of the covered-edge structure are solved separately.
        vector<int> parent(vars);
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto & ng : nogoods)
            for (std::size_t i = 1; i < ng.size(); ++i)
                parent[find_root(parent, ng[i].var)] = find_root(parent, ng[0].var);

        vector<vector<int>> component_vars;
        vector<int> component_of(vars, -1), local(vars, -1);
        for (int v = 0; v < vars; ++v) {
            int r = find_root(parent, v);
            if (component_of[r] < 0) {
                component_of[r] = static_cast<int>(component_vars.size());
                component_vars.emplace_back();
            }
            local[v] = static_cast<int>(component_vars[component_of[r]].size());
            component_vars[component_of[r]].push_back(v);
        }
        vector<vector<vector<Lit>>> component_nogoods(component_vars.size());
        for (auto & ng : nogoods) {
            int comp = component_of[find_root(parent, ng[0].var)];
            for (auto & l : ng)
                l.var = local[l.var];
            component_nogoods[comp].push_back(std::move(ng));
        }
        result.stats.components = static_cast<int>(component_vars.size());

        vector<int> order(component_vars.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return component_vars[a].size() < component_vars[b].size(); });

        Deadline deadline(budget);
        vector<int> direction(edges.size(), 0);
        for (int comp : order) {
            NogoodSolver solver(static_cast<int>(component_vars[comp].size()), std::move(component_nogoods[comp]), deadline, result.stats);
            auto assignment = solver.solve();
            if (! assignment) {
                result.verdict = true;
                return result;
            }
            for (std::size_t i = 0; i < assignment->size(); ++i)
                direction[var_edge[component_vars[comp][i]]] = (*assignment)[i];
        }

        OrientedGraph certificate(g.size());
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto [u, v] = edges[e];
            if (direction[e] == 0)
                certificate.add_arc(u, v);
            else
                certificate.add_arc(v, u);
        }
        result.certificate = std::move(certificate);
        return result;
    }
}
