#include "cli.hh"

#include <arrowlab/arrow.hh>
#include <arrowlab/constructions.hh>
#include <arrowlab/containers.hh>
#include <arrowlab/density.hh>
#include <arrowlab/errors.hh>
#include <arrowlab/experiments.hh>
#include <arrowlab/graph_io.hh>
#include <arrowlab/witness.hh>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#ifndef ARROWLAB_VERSION
#define ARROWLAB_VERSION "dev"
#endif

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using std::string;
using std::vector;

namespace arrowlab::cli
{
    namespace
    {
        auto read_bytes(const fs::path & path) -> string
        {
            std::ifstream in(path, std::ios::binary);
            if (! in)
                throw MalformedInput{"cannot open '" + path.string() + "'"};
            std::ostringstream buffer;
            buffer << in.rdbuf();
            return buffer.str();
        }

        auto vertex_list(VertexSet s) -> json
        {
            auto list = json::array();
            for_each_vertex(s, [&](int v) { list.push_back(v); });
            return list;
        }

        auto int_string(const BigInt & x) -> string
        {
            return x.str();
        }

        // Shared state of one invocation.
        struct Run
        {
            fs::path out_dir;
            std::uint64_t seed = 0;
            Budget budget;
            json params = json::object();
            vector<std::pair<string, string>> inputs;  // path, digest
            vector<std::pair<string, string>> outputs; // file name, digest

            auto input(const string & path) -> string
            {
                inputs.emplace_back(path, sha256_hex(read_bytes(path)));
                return path;
            }

            auto write(const string & name, const string & content) -> string
            {
                fs::create_directories(out_dir);
                std::ofstream f(out_dir / name, std::ios::binary);
                if (! f)
                    throw InvalidInput{"cannot write '" + (out_dir / name).string() + "'"};
                f << content;
                outputs.emplace_back(name, sha256_hex(content));
                return name;
            }
        };

        auto budget_json(const Budget & b) -> json
        {
            return json{{"nodes", b.nodes}, {"seconds", b.seconds}, {"copies", b.copies}};
        }

        auto stats_json(const SearchStats & s) -> json
        {
            return json{{"nodes", s.nodes}, {"conflicts", s.conflicts}, {"propagations", s.propagations}, {"copies", s.copies},
                {"covered_edges", s.covered_edges}, {"components", s.components}};
        }

        auto parse_list(const string & text) -> vector<string>
        {
            vector<string> items;
            std::stringstream in(text);
            string item;
            while (std::getline(in, item, ','))
                if (! item.empty())
                    items.push_back(item);
            return items;
        }

        auto parse_ints(const string & text) -> vector<int>
        {
            vector<int> result;
            for (const auto & s : parse_list(text)) {
                std::size_t used = 0;
                int v = 0;
                try {
                    v = std::stoi(s, &used);
                }
                catch (const std::exception &) {
                    used = 0;
                }
                if (used != s.size())
                    throw InvalidInput{"not an integer list: '" + text + "'"};
                result.push_back(v);
            }
            if (result.empty())
                throw InvalidInput{"empty list"};
            return result;
        }

        auto parse_doubles(const string & text) -> vector<double>
        {
            vector<double> result;
            for (const auto & s : parse_list(text)) {
                std::size_t used = 0;
                double v = 0;
                try {
                    v = std::stod(s, &used);
                }
                catch (const std::exception &) {
                    used = 0;
                }
                if (used != s.size())
                    throw InvalidInput{"not a number list: '" + text + "'"};
                result.push_back(v);
            }
            if (result.empty())
                throw InvalidInput{"empty list"};
            return result;
        }

        // Removes the options that only say where results go, so a recorded
        // command line can be replayed elsewhere.
        auto strip_locations(const vector<string> & args) -> vector<string>
        {
            vector<string> kept;
            for (std::size_t i = 0; i < args.size(); ++i) {
                const auto & a = args[i];
                if (a == "--out-dir" || a == "--manifest") {
                    ++i;
                    continue;
                }
                if (a.starts_with("--out-dir=") || a.starts_with("--manifest="))
                    continue;
                kept.push_back(a);
            }
            return kept;
        }

        auto emit(std::ostream & out, const json & j) -> void
        {
            out << j.dump(2) << "\n";
        }

        struct Options
        {
            string out_dir = ".";
            string manifest;
            std::uint64_t seed = 0;
            long long budget_nodes = Budget{}.nodes;
            double budget_seconds = 0.0;
            long long budget_copies = Budget{}.copies;

            string g_file, h_file, f_file, verify_file, cert_name = "certificate.txt", output_name;
            int nmax = 10;
            bool want_m2 = false, want_m = false, want_d2 = false;
            string family_kind;
            vector<int> family_params;
            int tree_size = 0;
            long long containers_n = 0;
            string tau_d = "1";
            string n_list, b_list;
            int trials = 100, jobs = 1, points = 9, probe_n = 0;
            double half_width = 0.15;
            string pattern_name;
            string manifest_in, replay_dir;
        };

        auto cmd_arrow(Run & run, const Options & o, std::ostream & out) -> int
        {
            auto g = read_undirected_file(run.input(o.g_file));
            auto h = read_oriented_file(run.input(o.h_file));
            run.params = json{{"graph", o.g_file}, {"pattern", o.h_file}};
            if (! o.verify_file.empty()) {
                auto cert = read_oriented_file(run.input(o.verify_file));
                run.params["verify"] = o.verify_file;
                bool ok = verify_certificate(g, h, cert);
                emit(out, json{{"command", "arrow"}, {"mode", "verify"}, {"certificate_valid", ok}});
                return ok ? success : verdict_false;
            }
            auto result = arrow(g, h, run.budget);
            json j{{"command", "arrow"}, {"verdict", result.verdict}, {"stats", stats_json(result.stats)}};
            if (! result.verdict) {
                run.params["certificate"] = o.cert_name;
                j["certificate"] = run.write(o.cert_name, to_text(*result.certificate));
            }
            emit(out, j);
            return result.verdict ? success : verdict_false;
        }

        auto cmd_ramsey(Run & run, const Options & o, std::ostream & out) -> int
        {
            auto h = read_oriented_file(run.input(o.h_file));
            run.params = json{{"pattern", o.h_file}, {"nmax", o.nmax}};
            auto r = oriented_ramsey_number(h, o.nmax, run.budget);
            json j{{"command", "ramsey"}, {"nmax", o.nmax}};
            j["ramsey_number"] = r ? json(*r) : json("exceeds n_max");
            emit(out, j);
            return success;
        }

        auto cmd_density(Run & run, const Options & o, std::ostream & out) -> int
        {
            auto g = read_undirected_file(run.input(o.g_file));
            bool all = ! (o.want_m2 || o.want_m || o.want_d2);
            run.params = json{{"graph", o.g_file}, {"m2", all || o.want_m2}, {"m", all || o.want_m}, {"d2", all || o.want_d2}};
            json j{{"command", "density"}, {"vertices", g.size()}, {"edges", g.edge_count()}};
            auto report = [](const DensityReport & r) {
                return json{{"value", to_string(r.value)}, {"witness", vertex_list(r.vertices)}, {"witness_edges", r.edges}};
            };
            if (all || o.want_d2)
                j["d2"] = to_string(d2(g));
            if (all || o.want_m2)
                j["m2"] = report(m2(g));
            if (all || o.want_m)
                j["m"] = report(m(g));
            emit(out, j);
            return success;
        }

        auto describe(const AnyGraph & g) -> json
        {
            if (auto * u = std::get_if<Graph>(&g))
                return json{{"directed", false}, {"vertices", u->size()}, {"edges", u->edge_count()}};
            const auto & d = std::get<OrientedGraph>(g);
            json j{{"directed", true}, {"vertices", d.size()}, {"arcs", d.arc_count()}};
            if (d.root())
                j["root"] = *d.root();
            return j;
        }

        auto cmd_product(Run & run, const Options & o, std::ostream & out) -> int
        {
            auto f = read_oriented_file(run.input(o.f_file));
            auto h = read_oriented_file(run.input(o.h_file));
            string name = o.output_name.empty() ? "product.txt" : o.output_name;
            run.params = json{{"f", o.f_file}, {"h", o.h_file}, {"output", name}};
            auto p = rooted_product(f, h);
            json j{{"command", "construct product"}, {"graph", describe(p)}, {"acyclic", is_acyclic(p)}};
            j["file"] = run.write(name, to_text(p));
            emit(out, j);
            return success;
        }

        auto cmd_family(Run & run, const Options & o, std::ostream & out) -> int
        {
            string name = o.output_name.empty() ? "family.txt" : o.output_name;
            run.params = json{{"kind", o.family_kind}, {"params", o.family_params}, {"output", name}};
            auto g = make_family(o.family_kind, o.family_params);
            json j{{"command", "construct family"}, {"kind", o.family_kind}, {"graph", describe(g)}};
            j["file"] = run.write(name, to_text(g));
            emit(out, j);
            return success;
        }

        auto cmd_tree(Run & run, const Options & o, std::ostream & out) -> int
        {
            string name = o.output_name.empty() ? "tree.txt" : o.output_name;
            run.params = json{{"t", o.tree_size}, {"output", name}};
            auto t = random_oriented_tree(o.tree_size, run.seed);
            auto tp = tree_params(t);
            json j{{"command", "construct tree"}, {"graph", describe(t)}, {"height", tp.height}, {"max_degree", tp.max_degree},
                {"a", tp.a}};
            j["file"] = run.write(name, to_text(t));
            emit(out, j);
            return success;
        }

        auto cmd_ghrv(Run & run, const Options & o, std::ostream & out) -> int
        {
            auto g = read_undirected_file(run.input(o.g_file));
            string name = o.output_name.empty() ? "orientation.txt" : o.output_name;
            run.params = json{{"graph", o.g_file}, {"output", name}};
            auto chi = chromatic_number(g, ChromaticMode::automatic, run.budget);
            auto d = ghrv_orientation(g, chi.coloring);
            json j{{"command", "orient ghrv"}, {"chi", chi.chi}, {"exact", chi.exact}, {"colouring", chi.coloring.color},
                {"longest_path_vertices", longest_path_vertices(d)}};
            j["file"] = run.write(name, to_text(d));
            emit(out, j);
            return success;
        }

        auto cmd_starfree(Run & run, const Options & o, std::ostream & out) -> int
        {
            auto g = read_undirected_file(run.input(o.g_file));
            auto s = read_oriented_file(run.input(o.h_file));
            string name = o.output_name.empty() ? "orientation.txt" : o.output_name;
            run.params = json{{"graph", o.g_file}, {"star", o.h_file}, {"output", name}};
            auto shape = star_shape(s);
            auto core = k_core(g, shape.in + shape.out);
            auto on_core = arrow(restrict_to(g, core.core), s, run.budget);
            json j{{"command", "orient starfree"}, {"k", core.k}, {"core", vertex_list(core.core)}, {"forced", on_core.verdict}};
            if (on_core.verdict) {
                emit(out, j);
                return verdict_false;
            }
            auto d = star_free_extension(g, *on_core.certificate, s);
            j["file"] = run.write(name, to_text(d));
            emit(out, j);
            return success;
        }

        auto cmd_containers(Run & run, const Options & o, std::ostream & out) -> int
        {
            auto h = read_oriented_file(run.input(o.h_file));
            auto d_factor = parse_rational(o.tau_d);
            run.params = json{{"pattern", o.h_file}, {"n", o.containers_n}, {"tau_D", to_string(d_factor)}};
            auto check = co_degree_bound_check(o.containers_n, h, d_factor);
            auto degrees = analytic_max_degrees(o.containers_n, h);
            auto f = f_table(h);
            int l = static_cast<int>(degrees.size()) - 1;

            std::ostringstream csv;
            csv << "j,d_j,delta_j\n";
            for (int jj = 1; jj <= l; ++jj) {
                csv << jj << "," << int_string(degrees[jj]) << ",";
                if (jj >= 2) {
                    char buf[64];
                    std::snprintf(buf, sizeof buf, "%.10g", check.delta_j[jj]);
                    csv << buf;
                }
                csv << "\n";
            }

            auto d_list = json::array();
            for (int jj = 1; jj <= l; ++jj)
                d_list.push_back(int_string(degrees[jj]));
            json j{{"command", "containers profile"}, {"n", o.containers_n}, {"l", l}, {"m2", to_string(m2(underlying(h)).value)},
                {"tau_D", to_string(d_factor)}, {"f", vector<int>(f.begin() + 1, f.end())}, {"d", d_list},
                {"delta_lo", to_string(check.delta_lo)}, {"delta_hi", to_string(check.delta_hi)}, {"bound", to_string(check.bound)},
                {"holds", check.holds}};
            j["file"] = run.write("profile.csv", csv.str());
            emit(out, j);
            return success;
        }

        auto cmd_sweep(Run & run, const Options & o, std::ostream & out) -> int
        {
            auto h = read_oriented_file(run.input(o.h_file));
            auto ns = parse_ints(o.n_list);
            string name = o.pattern_name.empty() ? fs::path(o.h_file).stem().string() : o.pattern_name;
            run.params = json{{"pattern", o.h_file}, {"name", name}, {"n_list", ns}, {"trials", o.trials}, {"jobs", o.jobs},
                {"points", o.points}, {"half_width", o.half_width}};
            if (o.trials < 1 || o.points < 1)
                throw InvalidInput{"trials and points must be positive"};

            ExperimentPlan plan;
            plan.pattern = h;
            plan.pattern_name = name;
            plan.ns = ns;
            for (int n : ns)
                plan.p_grid.push_back(default_p_grid(h, n, o.points, o.half_width));
            plan.trials = o.trials;
            plan.seed = run.seed;
            plan.budget = run.budget;
            plan.jobs = o.jobs;
            auto sweep = estimate_arrow_probability(plan);

            auto summary = sweep_summary_json(sweep);
            json j{{"command", "sweep"}};
            j["summary"] = json::parse(summary);
            j["files"] = {run.write("sweep.csv", sweep_csv(sweep)), run.write("summary.json", summary)};
            emit(out, j);
            return success;
        }

        auto cmd_trees(Run & run, const Options & o, std::ostream & out) -> int
        {
            OrientedGraph t;
            if (! o.h_file.empty())
                t = read_oriented_file(run.input(o.h_file));
            else if (o.tree_size > 0)
                t = random_oriented_tree(o.tree_size, derive_seed(run.seed, {0x7472ee}));
            else
                throw InvalidInput{"give a tree file or --random-tree"};
            auto bs = parse_doubles(o.b_list);
            run.params = json{{"tree", o.h_file}, {"random_tree", o.tree_size}, {"b_list", bs}, {"n", o.probe_n},
                {"trials", o.trials}, {"jobs", o.jobs}};
            if (o.probe_n < 1)
                throw InvalidInput{"--n must be positive"};
            auto tp = tree_params(t);
            auto rows = tree_threshold_probe(t, bs, o.probe_n, o.trials, run.seed, run.budget, o.jobs);
            json j{{"command", "trees probe"}, {"tree_vertices", t.size()}, {"height", tp.height}, {"max_degree", tp.max_degree},
                {"a", tp.a}};
            auto files = json::array();
            if (o.h_file.empty())
                files.push_back(run.write("tree.txt", to_text(t)));
            files.push_back(run.write("trees.csv", tree_probe_csv(rows)));
            j["files"] = files;
            emit(out, j);
            return success;
        }

        auto cmd_replay(const Options & o, std::ostream & out, std::ostream & err) -> int
        {
            auto manifest = json::parse(read_bytes(o.manifest_in), nullptr, false);
            if (manifest.is_discarded() || ! manifest.contains("argv") || ! manifest.contains("outputs"))
                throw MalformedInput{"'" + o.manifest_in + "' is not a run manifest"};
            fs::path dir = o.replay_dir.empty() ? fs::path(o.manifest_in).parent_path() / "replay" : fs::path(o.replay_dir);

            auto args = manifest["argv"].get<vector<string>>();
            args.insert(args.end(), {"--out-dir", dir.string(), "--manifest", (dir / "manifest.json").string()});
            std::ostringstream captured;
            int code = run(args, captured, err);

            json files = json::array();
            bool identical = code == manifest.value("exit_code", -1);
            bool stdout_match = sha256_hex(captured.str()) == manifest.value("stdout_sha256", string{});
            identical = identical && stdout_match;
            for (const auto & entry : manifest["outputs"]) {
                string file = entry.at("file");
                string expected = entry.at("sha256");
                string actual;
                if (fs::exists(dir / file))
                    actual = sha256_hex(read_bytes(dir / file));
                bool match = actual == expected;
                identical = identical && match;
                files.push_back(json{{"file", file}, {"expected", expected}, {"actual", actual}, {"match", match}});
            }
            emit(out, json{{"command", "replay"}, {"exit_code", code}, {"stdout_match", stdout_match}, {"files", files},
                          {"identical", identical}});
            return identical ? success : verdict_false;
        }
    }

    auto sha256_hex(const string & bytes) -> string
    {
        unsigned char digest[EVP_MAX_MD_SIZE];
        unsigned int length = 0;
        if (! EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr))
            throw Error{"SHA-256 failed"};
        std::ostringstream hex;
        for (unsigned i = 0; i < length; ++i)
            hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
        return hex.str();
    }

    auto run(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        Options o;
        CLI::App app{"Orientation Ramsey workbench"};
        app.name("arrowlab");
        app.require_subcommand(1);
        app.fallthrough();
        app.add_option("--out-dir", o.out_dir, "directory for output files");
        app.add_option("--manifest", o.manifest, "manifest path (default: <out-dir>/manifest.json)");
        app.add_option("--seed", o.seed, "master random seed");
        app.add_option("--budget-nodes", o.budget_nodes, "solver node budget per call");
        app.add_option("--budget-seconds", o.budget_seconds, "solver time budget per call (0 = none)");
        app.add_option("--budget-copies", o.budget_copies, "pattern copies held per solver call");

        auto * arrow_cmd = app.add_subcommand("arrow", "decide G -> H");
        arrow_cmd->add_option("graph", o.g_file)->required();
        arrow_cmd->add_option("pattern", o.h_file)->required();
        arrow_cmd->add_option("--verify", o.verify_file, "check a certificate orientation instead of solving");
        arrow_cmd->add_option("--cert", o.cert_name, "certificate file name");

        auto * ramsey_cmd = app.add_subcommand("ramsey", "oriented Ramsey number by tournament search");
        ramsey_cmd->add_option("pattern", o.h_file)->required();
        ramsey_cmd->add_option("--nmax", o.nmax)->check(CLI::Range(1, 10));

        auto * density_cmd = app.add_subcommand("density", "d2, m2 and m of a graph");
        density_cmd->add_option("graph", o.g_file)->required();
        density_cmd->add_flag("--m2", o.want_m2);
        density_cmd->add_flag("--m", o.want_m);
        density_cmd->add_flag("--d2", o.want_d2);

        auto * construct_cmd = app.add_subcommand("construct", "build graphs");
        construct_cmd->require_subcommand(1);
        auto * product_cmd = construct_cmd->add_subcommand("product", "rooted product F o H");
        product_cmd->add_option("outer", o.f_file, "F: rooted-product host digraph")->required();
        product_cmd->add_option("inner", o.h_file, "H: rooted digraph attached at each vertex")->required();
        product_cmd->add_option("-o,--output", o.output_name);
        auto * family_cmd = construct_cmd->add_subcommand("family", "named family member");
        family_cmd->add_option("kind", o.family_kind)->required();
        family_cmd->add_option("params", o.family_params)->required();
        family_cmd->add_option("-o,--output", o.output_name);
        auto * tree_cmd = construct_cmd->add_subcommand("tree", "uniform random oriented tree");
        tree_cmd->add_option("t", o.tree_size)->required()->check(CLI::Range(1, max_vertices));
        tree_cmd->add_option("-o,--output", o.output_name);

        auto * orient_cmd = app.add_subcommand("orient", "constructive orientations");
        orient_cmd->require_subcommand(1);
        auto * ghrv_cmd = orient_cmd->add_subcommand("ghrv", "colour-increasing orientation");
        ghrv_cmd->add_option("graph", o.g_file)->required();
        ghrv_cmd->add_option("-o,--output", o.output_name);
        auto * starfree_cmd = orient_cmd->add_subcommand("starfree", "star-free orientation via the core");
        starfree_cmd->add_option("graph", o.g_file)->required();
        starfree_cmd->add_option("star", o.h_file)->required();
        starfree_cmd->add_option("-o,--output", o.output_name);

        auto * containers_cmd = app.add_subcommand("containers", "container hypergraph calculus");
        containers_cmd->require_subcommand(1);
        auto * profile_cmd = containers_cmd->add_subcommand("profile", "degree profile and co-degree bound");
        profile_cmd->add_option("pattern", o.h_file)->required();
        profile_cmd->add_option("--n", o.containers_n)->required()->check(CLI::PositiveNumber);
        profile_cmd->add_option("--tau-D", o.tau_d, "D in tau = D n^{-1/m2}, a rational");

        auto * sweep_cmd = app.add_subcommand("sweep", "Monte Carlo threshold sweep on G(n,p)");
        sweep_cmd->add_option("pattern", o.h_file)->required();
        sweep_cmd->add_option("--n-list", o.n_list)->required();
        sweep_cmd->add_option("--trials", o.trials);
        sweep_cmd->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
        sweep_cmd->add_option("--points", o.points);
        sweep_cmd->add_option("--half-width", o.half_width);
        sweep_cmd->add_option("--name", o.pattern_name);

        auto * trees_cmd = app.add_subcommand("trees", "oriented tree experiments");
        trees_cmd->require_subcommand(1);
        auto * probe_cmd = trees_cmd->add_subcommand("probe", "P(G(n,b/n) -> T) over a grid of b");
        probe_cmd->add_option("tree", o.h_file);
        probe_cmd->add_option("--random-tree", o.tree_size, "use a random oriented tree on this many vertices");
        probe_cmd->add_option("--b-list", o.b_list)->required();
        probe_cmd->add_option("--n", o.probe_n)->required();
        probe_cmd->add_option("--trials", o.trials);
        probe_cmd->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);

        auto * replay_cmd = app.add_subcommand("replay", "rerun a manifest and compare digests");
        replay_cmd->add_option("manifest", o.manifest_in)->required();
        replay_cmd->add_option("--into", o.replay_dir, "directory for the replayed outputs");

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? success : usage;
        }

        if (*replay_cmd) {
            try {
                return cmd_replay(o, out, err);
            }
            catch (const MalformedInput & e) {
                err << "error: " << e.what() << "\n";
                return malformed;
            }
            catch (const std::exception & e) {
                err << "error: " << e.what() << "\n";
                return usage;
            }
        }

        Run r;
        r.out_dir = o.out_dir;
        r.seed = o.seed;
        r.budget = Budget{o.budget_nodes, o.budget_seconds, o.budget_copies};

        string command;
        for (auto * sub = app.get_subcommands().front(); sub; ) {
            command += (command.empty() ? "" : " ") + sub->get_name();
            auto subs = sub->get_subcommands();
            sub = subs.empty() ? nullptr : subs.front();
        }

        std::ostringstream captured;
        int code = success;
        string error;
        try {
            if (*arrow_cmd)
                code = cmd_arrow(r, o, captured);
            else if (*ramsey_cmd)
                code = cmd_ramsey(r, o, captured);
            else if (*density_cmd)
                code = cmd_density(r, o, captured);
            else if (*product_cmd)
                code = cmd_product(r, o, captured);
            else if (*family_cmd)
                code = cmd_family(r, o, captured);
            else if (*tree_cmd)
                code = cmd_tree(r, o, captured);
            else if (*ghrv_cmd)
                code = cmd_ghrv(r, o, captured);
            else if (*starfree_cmd)
                code = cmd_starfree(r, o, captured);
            else if (*profile_cmd)
                code = cmd_containers(r, o, captured);
            else if (*sweep_cmd)
                code = cmd_sweep(r, o, captured);
            else if (*probe_cmd)
                code = cmd_trees(r, o, captured);
        }
        catch (const MalformedInput & e) {
            code = malformed;
            error = e.what();
        }
        catch (const ResourceLimit & e) {
            code = budget;
            error = e.what();
        }
        catch (const TooLarge & e) {
            code = budget;
            error = e.what();
        }
        catch (const std::exception & e) {
            code = usage;
            error = e.what();
        }
        if (! error.empty())
            err << "error: " << error << "\n";
        out << captured.str();

        json manifest;
        manifest["tool"] = "arrowlab";
        manifest["version"] = ARROWLAB_VERSION;
        manifest["command"] = command;
        manifest["argv"] = strip_locations(args);
        manifest["params"] = r.params;
        manifest["seed"] = r.seed;
        manifest["budget"] = budget_json(r.budget);
        manifest["exit_code"] = code;
        if (! error.empty())
            manifest["error"] = error;
        auto inputs = json::array();
        for (const auto & [path, digest] : r.inputs)
            inputs.push_back(json{{"path", path}, {"sha256", digest}});
        manifest["inputs"] = inputs;
        auto outputs = json::array();
        for (const auto & [file, digest] : r.outputs)
            outputs.push_back(json{{"file", file}, {"sha256", digest}});
        manifest["outputs"] = outputs;
        manifest["stdout_sha256"] = sha256_hex(captured.str());

        try {
            fs::path path = o.manifest.empty() ? fs::path(o.out_dir) / "manifest.json" : fs::path(o.manifest);
            if (path.has_parent_path())
                fs::create_directories(path.parent_path());
            std::ofstream f(path, std::ios::binary);
            f << manifest.dump(2) << "\n";
            if (! f)
                throw std::runtime_error("cannot write manifest '" + path.string() + "'");
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << "\n";
            if (code == success)
                code = usage;
        }
        return code;
    }
}
