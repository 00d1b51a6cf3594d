#include <itlab_cli/cli.hpp>

#include <itlab/bounds.hpp>
#include <itlab/census.hpp>
#include <itlab/error.hpp>
#include <itlab/experiment.hpp>
#include <itlab/incidence.hpp>
#include <itlab/io.hpp>
#include <itlab/lll_condition.hpp>
#include <itlab/norm_graph.hpp>
#include <itlab/projective.hpp>
#include <itlab/random.hpp>
#include <itlab/random_nkrs.hpp>
#include <itlab/solve.hpp>
#include <itlab/upper_bound.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>

namespace itlab::cli
{
    namespace
    {
        using json = nlohmann::json;
        namespace fs = std::filesystem;

        struct Globals
        {
            std::uint64_t seed = 0;
            bool json = false;
            bool quiet = false;
        };

        struct GenerateArgs
        {
            std::string kind;
            std::optional<std::size_t> n, k, m;
            std::size_t r = 2;
            std::optional<std::size_t> s;
            std::optional<std::uint32_t> q;
            double p = 0.5;
            double eps = 0.5;
            double host_constant = 0.0;
            std::string host;
            std::string out;
        };

        struct SolveArgs
        {
            std::string solver = "exact";
            std::string in;
            std::string out;
            double eps = 0.5;
            std::optional<double> p;
            std::optional<std::size_t> max_steps;
            std::optional<std::uint64_t> budget;
            std::size_t t = 2;
        };

        struct VerifyArgs
        {
            std::string in;
            std::optional<std::size_t> k, s;
            std::string transversal;
            bool lll = false;
            std::string host;
            std::optional<std::uint32_t> projective_q;
            std::optional<std::uint32_t> norm_q;
            std::size_t r = 2;
            std::size_t samples = 100'000;
        };

        struct BoundsArgs
        {
            std::size_t k = 0;
            std::size_t r = 2;
            std::size_t s = 1;
            std::optional<std::size_t> n;
        };

        struct ExperimentArgs
        {
            std::string sweep;
            std::size_t k = 12, r = 2, s = 1;
            std::size_t trials = 100;
            std::vector<std::string> solvers{"nibble"};
            double eps = 0.5;
            std::optional<double> p;
            std::optional<std::size_t> max_steps;
            std::optional<std::uint64_t> budget;
            std::size_t t = 2;
            std::size_t threads = 0;
            bool no_verify = false;
            std::uint64_t verify_budget = 5'000'000;
            std::string out;
            std::string csv;
        };

        auto require(const std::optional<std::size_t> & v, const char * flag, const std::string & kind) -> std::size_t
        {
            if (! v)
                throw Error("generate --kind " + kind + " needs " + flag);
            return *v;
        }

        auto summary(const Hypergraph & g) -> json
        {
            return json{{"r", g.uniformity()}, {"parts", g.num_parts()}, {"vertices", g.num_vertices()}, {"edges", g.num_edges()}};
        }

        auto write_instance_file(const fs::path & path, const Hypergraph & g) -> void
        {
            if (path.extension() == ".json")
                write_file(path, instance_to_json(g).dump() + "\n");
            else
                write_file(path, write_instance(g));
        }

        auto sidecar_path(const fs::path & out) -> fs::path
        {
            auto p = out;
            p.replace_extension(".meta.json");
            return p;
        }

        auto generate(const GenerateArgs & a, const Globals & gl, std::ostream & out) -> int
        {
            std::optional<Hypergraph> g;
            json meta{{"kind", a.kind}, {"seed", gl.seed}};

            auto pad = [&](Hypergraph h, std::size_t s) {
                if (a.k) {
                    meta["padded"] = {{"k", *a.k}, {"s", s}};
                    return pad_to_nkrs(h, *a.k, s, derive_seed(gl.seed, 0x9ad));
                }
                return h;
            };

            if (a.kind == "random-nkrs") {
                auto n = require(a.n, "--n", a.kind);
                auto k = require(a.k, "--k", a.kind);
                auto s = a.s.value_or(1);
                meta.update({{"n", n}, {"k", k}, {"r", a.r}, {"s", s}});
                g = random_nkrs(n, k, a.r, s, gl.seed);
            }
            else if (a.kind == "projective") {
                if (! a.q)
                    throw Error("generate --kind projective needs --q");
                auto host = projective_plane_host(*a.q);
                meta.update({{"q", *a.q}, {"host_n", host.host.n()}, {"host_m", host.host.m()},
                    {"certificate", certificate_to_json(host.certificate)},
                    {"pigeonhole", verify_no_transversal_by_pigeonhole(host.host, 2)}});
                g = pad(neighbourhood_incidence_graph(host.host, 2), a.s.value_or(1));
            }
            else if (a.kind == "norm") {
                if (! a.q)
                    throw Error("generate --kind norm needs --q");
                auto floor = a.k ? *a.k : default_norm_degree_floor(*a.q);
                auto host = norm_graph_host(*a.q, floor, gl.seed);
                meta.update({{"q", *a.q}, {"host_n", host.host.n()}, {"host_m", host.host.m()},
                    {"certificate", certificate_to_json(host.certificate)}, {"attempts", host.attempts},
                    {"degree_floor", floor},
                    {"pigeonhole", verify_no_transversal_by_pigeonhole(host.host, 3)}});
                g = pad(neighbourhood_incidence_graph(host.host, 3), a.s.value_or(2));
            }
            else if (a.kind == "incidence") {
                BipartiteHost host;
                if (! a.host.empty()) {
                    host = host_from_json(json::parse(read_file(a.host)));
                    meta["host_file"] = a.host;
                }
                else {
                    auto n = require(a.n, "--n (or --host)", a.kind);
                    auto m = require(a.m, "--m (or --host)", a.kind);
                    host = random_host(n, m, a.p, gl.seed);
                    meta["host_p"] = a.p;
                }
                auto cert = certify(host, a.r);
                meta.update({{"r", a.r}, {"host_n", host.n()}, {"host_m", host.m()},
                    {"certificate", certificate_to_json(cert)},
                    {"pigeonhole", verify_no_transversal_by_pigeonhole(host, a.r)}});
                g = pad(neighbourhood_incidence_graph(host, a.r), a.s.value_or(cert.max_common_neighbours));
            }
            else if (a.kind == "upper-bound") {
                auto k = require(a.k, "--k", a.kind);
                UpperBoundOptions options;
                options.eps = a.eps;
                options.host_constant = a.host_constant;
                auto inst = assemble_upper_bound_instance(k, a.r, a.s.value_or(1), gl.seed, options);
                meta["provenance"] = to_json(inst.provenance);
                g.emplace(std::move(inst.graph));
            }
            else {
                throw Error("unknown --kind '" + a.kind + "'");
            }

            meta["instance"] = summary(*g);
            if (! a.out.empty()) {
                write_instance_file(a.out, *g);
                write_file(sidecar_path(a.out), meta.dump(1) + "\n");
                meta["out"] = a.out;
                if (gl.json)
                    out << meta.dump(1) << "\n";
                else if (! gl.quiet)
                    out << "wrote " << a.out << " (" << g->num_parts() << " parts, " << g->num_edges() << " edges) and "
                        << sidecar_path(a.out).string() << "\n";
            }
            else if (gl.json) {
                out << json{{"meta", meta}, {"graph", instance_to_json(*g)}}.dump(1) << "\n";
            }
            else {
                out << write_instance(*g);
            }
            return exit_ok;
        }

        auto solve_command(const SolveArgs & a, const Globals & gl, std::ostream & out) -> int
        {
            auto g = load_instance_file(a.in);
            SolveOptions o;
            o.solver = parse_solver(a.solver);
            o.seed = gl.seed;
            o.eps = a.eps;
            o.p = a.p;
            o.max_steps = a.max_steps;
            o.budget = a.budget;
            o.t = a.t;

            auto start = std::chrono::steady_clock::now();
            auto outcome = solve(g, o);
            auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

            auto report = to_json(outcome);
            report["solver"] = a.solver;
            report["seed"] = gl.seed;
            report["instance"] = summary(g);
            report["wall_ms"] = ms;
            if (! a.out.empty())
                write_file(a.out, report.dump(1) + "\n");
            if (gl.json)
                out << report.dump(1) << "\n";
            else if (! gl.quiet) {
                out << "status: " << outcome.status << "\n";
                if (outcome.transversal) {
                    out << "transversal:";
                    for (auto v : outcome.transversal->chosen())
                        out << ' ' << v;
                    out << "\n";
                }
                out << "steps: " << outcome.steps << "\nresamples: " << outcome.resamples << "\n";
            }
            return outcome.found() ? exit_ok : exit_failure;
        }

        auto census_json(const MatchingCensus & c) -> json
        {
            return json{{"r_sets", c.total_r_sets}, {"partial", c.partial}, {"min_edges", c.min_edges},
                {"max_edges", c.max_edges}, {"all_matchings", c.all_matchings}};
        }

        auto verify(const VerifyArgs & a, const Globals & gl, std::ostream & out) -> int
        {
            json report;
            bool ok = true;
            bool any = false;

            if (! a.in.empty()) {
                any = true;
                auto g = load_instance_file(a.in);
                json inst = summary(g);
                inst["min_part_size"] = min_part_size(g);
                inst["max_avg_degree"] = max_avg_degree(g);
                if (g.uniformity() == 2)
                    inst["local_degree"] = local_degree(g);
                if (a.k && a.s) {
                    auto check = check_nkrs(g, *a.k, *a.s);
                    inst["nkrs"] = {{"k", *a.k}, {"s", *a.s}, {"ok", check.ok}, {"reason", check.reason}};
                    ok = ok && check.ok;
                }
                else {
                    inst["census"] = census_json(matching_census(g, default_matching_census_budget, gl.seed));
                }
                if (! a.transversal.empty()) {
                    auto doc = json::parse(read_file(a.transversal));
                    auto t = transversal_from_json(doc.is_object() ? doc.at("transversal") : doc);
                    auto good = is_independent_transversal(g, t);
                    inst["transversal_independent"] = good;
                    ok = ok && good;
                }
                if (a.lll) {
                    auto c = check_lll_condition(g);
                    inst["lll_condition"] = {{"ok", c.ok}, {"part_size", c.part_size}, {"max_dependency", c.max_dependency},
                        {"value", c.value}, {"witness", c.witness ? json(g.edge_list()[*c.witness]) : json(nullptr)}};
                    ok = ok && c.ok;
                }
                report["instance"] = inst;
            }

            auto host_report = [&](const BipartiteHost & h, std::size_t r, json extra) {
                auto cert = certify(h, r);
                extra.update({{"host_n", h.n()}, {"host_m", h.m()}, {"certificate", certificate_to_json(cert)},
                    {"pigeonhole", verify_no_transversal_by_pigeonhole(h, r)}});
                return extra;
            };
            if (! a.host.empty()) {
                any = true;
                report["host"] = host_report(host_from_json(json::parse(read_file(a.host))), a.r, json::object());
            }
            if (a.projective_q) {
                any = true;
                auto h = projective_plane_host(*a.projective_q);
                auto rep = host_report(h.host, 2, {{"q", *a.projective_q}});
                auto good = rep["certificate"] == certificate_to_json(h.certificate) && rep["pigeonhole"].get<bool>();
                rep["ok"] = good;
                ok = ok && good;
                report["projective"] = rep;
            }
            if (a.norm_q) {
                any = true;
                auto ng = build_norm_graph(*a.norm_q);
                auto rel = ng.relation_host();
                std::size_t lo = rel.min_degree();
                std::size_t hi = 0;
                for (std::size_t v = 0; v < rel.n(); ++v)
                    hi = std::max(hi, rel.degree(v));
                json rep{{"q", *a.norm_q}, {"order", ng.order()}, {"min_degree", lo}, {"max_degree", hi}};
                std::size_t max_common = 0;
                if (binomial(rel.n(), 3) <= default_census_budget) {
                    max_common = common_neighbour_census(rel, 3).max_common;
                    rep["census"] = "exhaustive";
                }
                else {
                    max_common = sampled_common_neighbour_census(rel, 3, a.samples, gl.seed).max_common;
                    rep["census"] = "sampled";
                    rep["samples"] = a.samples;
                }
                rep["max_common_neighbours"] = max_common;
                auto good = lo == hi && max_common <= 2;
                rep["ok"] = good;
                ok = ok && good;
                report["norm"] = rep;
            }
            if (! any)
                throw Error("verify needs --in, --host, --projective-q or --norm-q");

            report["ok"] = ok;
            if (gl.json)
                out << report.dump(1) << "\n";
            else if (! gl.quiet)
                out << report.dump(1) << "\n" << (ok ? "verified" : "verification FAILED") << "\n";
            return ok ? exit_ok : exit_failure;
        }

        auto bounds(const BoundsArgs & a, const Globals & gl, std::ostream & out) -> int
        {
            auto b = bound_report(a.k, a.r, a.s, a.n);
            if (gl.json) {
                out << to_json(b).dump(1) << "\n";
                return exit_ok;
            }
            auto j = to_json(b);
            for (auto it = j.begin(); it != j.end(); ++it)
                out << std::left << std::setw(20) << it.key() << ' ' << it.value().dump() << "\n";
            return exit_ok;
        }

        auto experiment(const ExperimentArgs & a, const Globals & gl, std::ostream & out) -> int
        {
            ExperimentConfig cfg;
            cfg.sweep = parse_sweep(a.sweep);
            cfg.k = a.k;
            cfg.r = a.r;
            cfg.s = a.s;
            cfg.trials = a.trials;
            cfg.solvers.clear();
            for (const auto & s : a.solvers)
                cfg.solvers.push_back(parse_solver(s));
            cfg.seed = gl.seed;
            cfg.options.eps = a.eps;
            cfg.options.p = a.p;
            cfg.options.max_steps = a.max_steps;
            cfg.options.budget = a.budget;
            cfg.options.t = a.t;
            cfg.threads = a.threads;
            cfg.verify_failures = ! a.no_verify;
            cfg.verify_budget = a.verify_budget;

            auto report = run_experiment(cfg);
            auto j = to_json(report);
            if (! a.out.empty())
                write_file(a.out, j.dump(1) + "\n");
            if (! a.csv.empty())
                write_file(a.csv, to_csv(report));
            if (gl.json)
                out << j.dump(1) << "\n";
            else if (! gl.quiet)
                out << to_csv(report);
            return exit_ok;
        }
    }

    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Independent transversals: constructions, solvers and bounds", "itlab"};
        app.require_subcommand(1);
        app.set_config("--config", "", "Read options from a TOML/INI file");

        Globals gl;
        app.add_option("--seed", gl.seed, "Master seed (64-bit)");
        app.add_flag("--json", gl.json, "Print JSON instead of text");
        app.add_flag("--quiet", gl.quiet, "Suppress informational output");

        GenerateArgs gen;
        auto * g = app.add_subcommand("generate", "Build an instance");
        g->add_option("--kind", gen.kind, "Construction")
            ->required()
            ->check(CLI::IsMember({"random-nkrs", "incidence", "projective", "norm", "upper-bound"}));
        g->add_option("--n", gen.n, "Number of parts (random-nkrs) or host A-side size (incidence)");
        g->add_option("--k", gen.k, "Part size; for projective/norm/incidence pads to (n,k,r,s)");
        g->add_option("--r", gen.r, "Uniformity")->capture_default_str();
        g->add_option("--s", gen.s, "Edges per r-set of parts");
        g->add_option("--m", gen.m, "Host B-side size (incidence)");
        g->add_option("--q", gen.q, "Field order (projective, norm)");
        g->add_option("--p", gen.p, "Edge probability of a random host (incidence)")->capture_default_str();
        g->add_option("--eps", gen.eps, "Accuracy of the random-host regime (upper-bound)")->capture_default_str();
        g->add_option("--host-constant", gen.host_constant, "Override C in s >= C log k (upper-bound)");
        g->add_option("--host", gen.host, "Host JSON file (incidence)");
        g->add_option("--out", gen.out, "Instance file (.json for JSON); a .meta.json sidecar is written next to it");

        SolveArgs sol;
        auto * s = app.add_subcommand("solve", "Search for an independent transversal");
        s->add_option("--solver", sol.solver, "Solver")
            ->check(CLI::IsMember({"exact", "greedy", "lll", "nibble", "ktfree"}))
            ->capture_default_str();
        s->add_option("--in", sol.in, "Instance file")->required();
        s->add_option("--out", sol.out, "JSON report file");
        s->add_option("--eps", sol.eps, "Nibble accuracy")->capture_default_str();
        s->add_option("--p", sol.p, "Nibble activation probability");
        s->add_option("--max-steps", sol.max_steps, "Nibble step limit t*");
        s->add_option("--budget", sol.budget, "Exact placement budget or LLL round budget");
        s->add_option("--t", sol.t, "Colours for ktfree")->capture_default_str();

        VerifyArgs ver;
        auto * v = app.add_subcommand("verify", "Check instances, transversals and host certificates");
        v->add_option("--in", ver.in, "Instance file");
        v->add_option("--k", ver.k, "Expected part size");
        v->add_option("--s", ver.s, "Expected edges per r-set");
        v->add_option("--transversal", ver.transversal, "Transversal JSON (array, or a solve report)");
        v->add_flag("--lll", ver.lll, "Check the local lemma condition");
        v->add_option("--host", ver.host, "Host JSON file to certify");
        v->add_option("--r", ver.r, "Subset size for the host census")->capture_default_str();
        v->add_option("--projective-q", ver.projective_q, "Certify the projective-plane host over F_q");
        v->add_option("--norm-q", ver.norm_q, "Check the norm graph over F_{q^2}");
        v->add_option("--samples", ver.samples, "Sampled triples when the norm census is too large")->capture_default_str();

        BoundsArgs bnd;
        auto * b = app.add_subcommand("bounds", "Local lemma and first-moment bounds");
        b->add_option("--k", bnd.k, "Part size")->required();
        b->add_option("--r", bnd.r, "Uniformity")->capture_default_str();
        b->add_option("--s", bnd.s, "Edges per r-set")->capture_default_str();
        b->add_option("--n", bnd.n, "Evaluate the first moment at this n");

        ExperimentArgs exp;
        auto * e = app.add_subcommand("experiment", "Success rates on random (n,k,r,s)-graphs");
        e->add_option("--sweep", exp.sweep, "n values: n=a..b, n=a..b:step or a,b,c")->required();
        e->add_option("--k", exp.k, "Part size")->capture_default_str();
        e->add_option("--r", exp.r, "Uniformity")->capture_default_str();
        e->add_option("--s", exp.s, "Edges per r-set")->capture_default_str();
        e->add_option("--trials", exp.trials, "Trials per n")->capture_default_str();
        e->add_option("--solver", exp.solvers, "Solvers (comma separated)")->delimiter(',');
        e->add_option("--eps", exp.eps, "Nibble accuracy")->capture_default_str();
        e->add_option("--p", exp.p, "Nibble activation probability");
        e->add_option("--max-steps", exp.max_steps, "Nibble step limit");
        e->add_option("--budget", exp.budget, "Exact / LLL budget");
        e->add_option("--t", exp.t, "Colours for ktfree")->capture_default_str();
        e->add_option("--threads", exp.threads, "Worker threads (ITLAB_THREADS caps this)");
        e->add_flag("--no-verify", exp.no_verify, "Skip exact_find on failed trials");
        e->add_option("--verify-budget", exp.verify_budget, "Budget of the failure check")->capture_default_str();
        e->add_option("--out", exp.out, "JSON report file");
        e->add_option("--csv", exp.csv, "CSV of success rate against the first moment");

        for (auto * sub : {g, s, v, b, e})
            sub->fallthrough();

        try {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError & ex) {
            auto code = app.exit(ex, out, err);
            return code == 0 ? exit_ok : exit_usage;
        }

        try {
            if (g->parsed())
                return generate(gen, gl, out);
            if (s->parsed())
                return solve_command(sol, gl, out);
            if (v->parsed())
                return verify(ver, gl, out);
            if (b->parsed())
                return bounds(bnd, gl, out);
            if (e->parsed())
                return experiment(exp, gl, out);
        }
        catch (const ConstructionError & ex) {
            err << "itlab: construction failed: " << ex.what() << "\n";
            return exit_failure;
        }
        catch (const Error & ex) {
            err << "itlab: " << ex.what() << "\n";
            return exit_usage;
        }
        catch (const nlohmann::json::exception & ex) {
            err << "itlab: malformed JSON: " << ex.what() << "\n";
            return exit_usage;
        }
        return exit_usage;
    }
}
