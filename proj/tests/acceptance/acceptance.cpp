// Acceptance suite. Prints one PASS/FAIL line per criterion.
//
//     itlab_acceptance                 all criteria
//     itlab_acceptance --criterion 8   just one (repeatable)

#include <itlab/census.hpp>
#include <itlab/error.hpp>
#include <itlab/exact.hpp>
#include <itlab/experiment.hpp>
#include <itlab/host.hpp>
#include <itlab/incidence.hpp>
#include <itlab/io.hpp>
#include <itlab/kt_free.hpp>
#include <itlab/lll.hpp>
#include <itlab/lll_condition.hpp>
#include <itlab/nibble.hpp>
#include <itlab/norm_graph.hpp>
#include <itlab/random_nkrs.hpp>
#include <itlab/upper_bound.hpp>
#include <itlab/vertex_colour.hpp>
#include <itlab_cli/cli.hpp>

#include <oracles.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include <unistd.h>

using namespace itlab;
namespace fs = std::filesystem;

namespace
{
    constexpr std::uint64_t master_seed = 20240611;

    struct Outcome
    {
        bool pass = false;
        std::string detail;
    };

    using Clock = std::chrono::steady_clock;

    auto ms_since(Clock::time_point start) -> double
    {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }

    auto fmt(double x, int digits = 4) -> std::string
    {
        std::ostringstream os;
        os << std::setprecision(digits) << x;
        return os.str();
    }

    auto no_it_certificate(std::size_t k, std::size_t n_expected, double limit_ms) -> Outcome
    {
        auto start = Clock::now();
        auto inst = assemble_upper_bound_instance(k, 2, 1, derive_seed(master_seed, k));
        auto shape = check_nkrs(inst.graph, k, 1);
        auto res = exact_find(inst.graph);
        auto ms = ms_since(start);
        bool pass = shape.ok && inst.graph.num_parts() == n_expected && res.status == ExactStatus::none && ms < limit_ms;
        std::ostringstream os;
        os << "(" << inst.graph.num_parts() << "," << k << ",2,1)-graph"
           << (shape.ok ? "" : " [shape: " + shape.reason + "]") << ", q=" << inst.provenance.q.value_or(0)
           << ", exact_find " << to_string(res.status) << " after " << res.nodes << " placements of "
           << fmt(std::pow(static_cast<double>(k), static_cast<double>(n_expected)), 7) << " assignments, "
           << fmt(ms) << " ms (limit " << limit_ms << " ms)";
        return {pass, os.str()};
    }

    auto criterion_1() -> Outcome
    {
        return no_it_certificate(2, 7, 1000);
    }

    auto criterion_2() -> Outcome
    {
        return no_it_certificate(3, 13, 30000);
    }

    auto criterion_3() -> Outcome
    {
        std::size_t violations = 0;
        std::size_t padded_ok = 0;
        std::size_t r_sets = 0;
        const std::uint64_t seed3 = derive_seed(master_seed, 3);
        for (std::uint64_t i = 0; i < 50; ++i) {
            Rng rng(derive_seed(seed3, i));
            std::size_t r = 2 + i % 2;
            std::size_t n = 10 + rng.uniform_index(21);
            std::size_t m = 8 + rng.uniform_index(13);
            // Padding trims parts to k = min A-degree, which must be at least s.
            // For r = 3, G(n, m, 1/2) hosts are resampled until that holds. For
            // r = 2 a dense G(n, m, p) almost never has it, so every A-vertex
            // instead gets a uniform d-subset of B.
            BipartiteHost host;
            std::size_t s = 0;
            for (std::uint64_t attempt = 0;; ++attempt) {
                auto hs = derive_seed(derive_seed(seed3, i), attempt);
                if (r == 3) {
                    host = random_host(n, m, 0.5, hs);
                }
                else {
                    Rng pick(hs);
                    auto d = 2 + pick.uniform_index(m / 2 - 1);
                    std::vector<std::vector<std::uint32_t>> adj(n);
                    std::vector<std::uint32_t> b(m);
                    for (auto & row : adj) {
                        std::iota(b.begin(), b.end(), 0u);
                        pick.shuffle_prefix(std::span<std::uint32_t>(b), d);
                        row.assign(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(d));
                        std::sort(row.begin(), row.end());
                    }
                    host = BipartiteHost(m, std::move(adj));
                }
                s = certify(host, r).max_common_neighbours;
                if (host.min_degree() > 0 && host.min_degree() >= s)
                    break;
            }
            auto g = neighbourhood_incidence_graph(host, r);
            auto census = matching_census(g);
            r_sets += static_cast<std::size_t>(census.total_r_sets);
            for (const auto & e : census.entries)
                if (e.edges > s || ! e.is_matching)
                    ++violations;
            auto k = min_part_size(g);
            auto padded = pad_to_nkrs(g, k, s, derive_seed(seed3, 1000 + i));
            if (check_nkrs(padded, k, s).ok)
                ++padded_ok;
            else
                ++violations;
        }
        std::ostringstream os;
        os << "50 hosts (n<=30, m<=20, r in {2,3}), " << r_sets << " r-sets checked, " << violations
           << " violations, " << padded_ok << "/50 padded graphs exactly s";
        return {violations == 0 && padded_ok == 50, os.str()};
    }

    auto criterion_4() -> Outcome
    {
        const std::size_t n = 200, m = 200, r = 2;
        const double eps = 0.5;
        const double c = random_host_constant(r, eps);
        const auto s = static_cast<std::size_t>(std::ceil(c * std::log(static_cast<double>(n))));
        const double floor = (1 - eps) * std::sqrt(static_cast<double>(s) * static_cast<double>(m));
        std::size_t accepted = 0;
        std::string first_error;
        for (std::uint64_t i = 0; i < 100; ++i) {
            try {
                auto h = random_bipartite_host(n, m, r, s, eps, derive_seed(derive_seed(master_seed, 4), i));
                auto cn = common_neighbour_census(h.host, r);
                if (static_cast<double>(h.host.min_degree()) >= floor && cn.max_common <= s)
                    ++accepted;
            }
            catch (const ConstructionError & e) {
                if (first_error.empty())
                    first_error = e.what();
            }
        }
        std::ostringstream os;
        os << "C=" << fmt(c) << ", s=ceil(C ln n)=" << s << ", degree floor " << fmt(floor) << " vs m=" << m << "; "
           << accepted << "/100 accepted (need 95)";
        if (! first_error.empty())
            os << "; " << first_error;
        return {accepted >= 95, os.str()};
    }

    auto criterion_5() -> Outcome
    {
        std::ostringstream os;
        bool pass = true;

        auto start = Clock::now();
        auto g3 = build_norm_graph(3);
        std::set<std::size_t> deg3;
        for (std::size_t v = 0; v < g3.order(); ++v)
            deg3.insert(g3.relation_degree(v));
        auto c3 = common_neighbour_census(g3.relation_host(), 3);
        auto ms = ms_since(start);
        bool ok3 = g3.order() == 18 && deg3 == std::set<std::size_t>{8} && c3.max_common <= 2 && ms < 1000;
        os << "q=3: order " << g3.order() << ", degrees {" << *deg3.begin() << (deg3.size() > 1 ? ",..." : "")
           << "}, exhaustive max common " << c3.max_common << ", " << fmt(ms) << " ms";
        pass = pass && ok3;

        auto g5 = build_norm_graph(5);
        std::set<std::size_t> deg5;
        for (std::size_t v = 0; v < g5.order(); ++v)
            deg5.insert(g5.relation_degree(v));
        auto c5 = sampled_common_neighbour_census(g5.relation_host(), 3, 100'000, derive_seed(master_seed, 5));
        bool ok5 = g5.order() == 100 && deg5 == std::set<std::size_t>{24} && c5.max_common <= 2;
        os << "; q=5: order " << g5.order() << ", degrees {" << *deg5.begin() << (deg5.size() > 1 ? ",..." : "")
           << "}, 1e5 sampled triples max common " << c5.max_common;
        pass = pass && ok5;
        return {pass, os.str()};
    }

    auto criterion_6() -> Outcome
    {
        const double expected = oracle::expected_transversals(5, 2, 2, 1);
        double total = 0;
        for (std::uint64_t i = 0; i < 2000; ++i) {
            auto g = random_nkrs(5, 2, 2, 1, derive_seed(derive_seed(master_seed, 6), i));
            total += static_cast<double>(count_transversals(g).count);
        }
        double mean = total / 2000;
        double rel = std::abs(mean - expected) / expected;
        std::ostringstream os;
        os << "mean #IT over 2000 (5,2,2,1)-graphs " << fmt(mean, 5) << " vs closed form " << fmt(expected, 5)
           << " (rel. error " << fmt(100 * rel, 3) << "%, limit 5%)";
        return {rel <= 0.05, os.str()};
    }

    auto criterion_7() -> Outcome
    {
        const double p = 0.3;
        const double s0 = 20;
        auto g = random_nkrs(10, 20, 2, 4, derive_seed(master_seed, 7));
        auto state = initial_state(g, s0, max_avg_degree(g));
        Rng rng(derive_seed(master_seed, 70));
        const int rounds = 100'000;
        std::vector<double> survived(g.num_vertices(), 0);
        std::vector<double> p_v;
        bool clamped = false;
        for (int i = 0; i < rounds; ++i) {
            auto round = draw_round(g, state, p, rng);
            clamped = clamped || round.ratio_clamped;
            if (p_v.empty())
                p_v = round.p_v;
            for (VertexId v = 0; v < g.num_vertices(); ++v)
                survived[v] += round.retained[v] ? 1 : 0;
        }
        double worst = 0;
        bool formula = true;
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            worst = std::max(worst, std::abs(survived[v] / rounds - p_v[v]));
            formula = formula && std::abs(p_v[v] - (1 - static_cast<double>(g.degree(v)) * p / s0)) < 1e-12;
        }
        auto [lo, hi] = std::minmax_element(p_v.begin(), p_v.end());
        std::ostringstream os;
        os << g.num_vertices() << " vertices, p_v in [" << fmt(*lo) << "," << fmt(*hi) << "], 1e5 rounds, max |freq - p_v| "
           << fmt(worst, 3) << " (limit 0.01)" << (clamped ? ", ratio clamped" : "") << (formula ? "" : ", p_v formula mismatch");
        return {worst <= 0.01 && ! clamped && formula, os.str()};
    }

    auto criterion_8() -> Outcome
    {
        const std::uint64_t seed8 = derive_seed(master_seed, 8);
        std::size_t success = 0, invalid = 0, invariant_errors = 0;
        std::string first_error;
        for (std::uint64_t i = 0; i < 100; ++i) {
            auto g = random_nkrs(1200, 60, 2, 1, derive_seed(seed8, 2 * i));
            NibbleConfig cfg;
            cfg.seed = derive_seed(seed8, 2 * i + 1);
            cfg.check_invariants = true;
            try {
                auto res = nibble_solve(g, cfg);
                if (res.transversal) {
                    if (is_independent_transversal(g, *res.transversal))
                        ++success;
                    else
                        ++invalid;
                }
            }
            catch (const Error & e) {
                ++invariant_errors;
                if (first_error.empty())
                    first_error = e.what();
            }
        }

        ExperimentConfig trend;
        trend.sweep = {72, 96, 120, 144};
        trend.k = 12;
        trend.trials = 100;
        trend.solvers = {SolverKind::nibble};
        trend.seed = derive_seed(master_seed, 80);
        trend.verify_failures = true;
        auto report = run_experiment(trend);
        bool monotone = true;
        std::ostringstream rates;
        for (std::size_t i = 0; i < report.points.size(); ++i) {
            const auto & s = report.points[i].solvers[0];
            if (i > 0 && s.success_rate > report.points[i - 1].solvers[0].success_rate)
                monotone = false;
            rates << (i ? ", " : "") << "n=" << report.points[i].n << ": " << fmt(s.success_rate, 3) << " (failures "
                  << s.failures_with_it << " with IT, " << s.failures_without_it << " without, "
                  << s.failures_unverified << " unverified)";
        }

        std::ostringstream os;
        os << "k=60, n=1200: " << success << "/100 validated (need 90), " << invalid << " invalid, " << invariant_errors
           << " invariant errors";
        if (! first_error.empty())
            os << " [" << first_error << "]";
        os << "; k=12 trend " << (monotone ? "non-increasing" : "NOT monotone") << ": " << rates.str();
        return {success >= 90 && invalid == 0 && invariant_errors == 0 && monotone, os.str()};
    }

    auto criterion_9() -> Outcome
    {
        const std::uint64_t seed9 = derive_seed(master_seed, 9);
        std::size_t regime = 0, condition = 0, success = 0, invalid = 0;
        for (std::uint64_t i = 0; i < 100; ++i) {
            Rng rng(derive_seed(seed9, i));
            std::size_t n = 10 + rng.uniform_index(61);
            auto g = random_nkrs(n, 20, 2, 1, derive_seed(seed9, 1000 + i));
            auto need = static_cast<std::size_t>(std::ceil(2 * std::exp(1.0) * max_avg_degree(g)));
            if (min_part_size(g) >= need)
                ++regime;
            if (check_lll_condition(g).ok)
                ++condition;
            auto res = lll_sample(g, default_lll_rounds(g), derive_seed(seed9, 2000 + i));
            if (res.success) {
                if (is_independent_transversal(g, res.transversal))
                    ++success;
                else
                    ++invalid;
            }
        }
        std::ostringstream os;
        os << "100 instances (n in [10,70], k=20): " << regime << " in regime |V_i| >= ceil(2eD), " << condition
           << " satisfy check_lll_condition, " << success << " validated successes (need 99), " << invalid << " invalid";
        return {regime == 100 && condition == 100 && success >= 99 && invalid == 0, os.str()};
    }

    auto brute_clique(const Hypergraph & g, const std::vector<VertexId> & vs, std::size_t size) -> bool
    {
        std::set<std::pair<VertexId, VertexId>> adj;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            auto ed = g.edge(e);
            adj.insert({std::min(ed[0], ed[1]), std::max(ed[0], ed[1])});
        }
        if (size > vs.size())
            return false;
        std::vector<bool> pick(vs.size(), false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
        do {
            bool clique = true;
            for (std::size_t i = 0; i < vs.size() && clique; ++i)
                for (std::size_t j = i + 1; j < vs.size() && clique; ++j)
                    if (pick[i] && pick[j])
                        clique = adj.count({std::min(vs[i], vs[j]), std::max(vs[i], vs[j])}) > 0;
            if (clique)
                return true;
        } while (std::prev_permutation(pick.begin(), pick.end()));
        return false;
    }

    auto criterion_10() -> Outcome
    {
        const std::uint64_t seed10 = derive_seed(master_seed, 10);
        std::size_t bound_ok = 0, returned = 0, clique_free = 0;
        for (std::uint64_t i = 0; i < 50; ++i) {
            std::size_t t = 2 + i % 2;
            auto g = random_nkrs(16, 6, 2, 2, derive_seed(seed10, i));
            auto colouring = local_search_colouring(g, t, derive_seed(seed10, 100 + i));
            auto mono = monochromatic_subgraph(g, colouring.colour);
            bool ok = true;
            for (VertexId v = 0; v < g.num_vertices(); ++v)
                ok = ok && mono.degree(v) * t <= g.degree(v);
            bound_ok += ok ? 1 : 0;

            KtFreeConfig cfg;
            cfg.seed = derive_seed(seed10, 200 + i);
            auto res = kt_free_transversal(g, t, cfg);
            if (res.transversal) {
                ++returned;
                auto vs = res.transversal->vertices();
                if (res.transversal->is_complete() && ! brute_clique(g, vs, t + 1))
                    ++clique_free;
            }
        }
        std::ostringstream os;
        os << "50 instances, t in {2,3}: d'(v) <= d(v)/t on " << bound_ok << "/50; " << returned
           << " transversals returned, " << clique_free << " K_{t+1}-free by brute force";
        return {bound_ok == 50 && returned > 0 && clique_free == returned, os.str()};
    }

    auto brute_list_colourings(const SimpleGraph & base, const std::vector<std::vector<std::uint32_t>> & lists)
        -> std::uint64_t
    {
        std::uint64_t count = 0;
        std::vector<std::uint32_t> col(base.num_vertices);
        std::function<void(std::size_t)> rec = [&](std::size_t v) {
            if (v == base.num_vertices) {
                for (auto [a, b] : base.edges)
                    if (col[a] == col[b])
                        return;
                ++count;
                return;
            }
            for (auto c : lists[v]) {
                col[v] = c;
                rec(v + 1);
            }
        };
        rec(0);
        return count;
    }

    auto criterion_11() -> Outcome
    {
        std::size_t cases = 0, mismatches = 0;
        for (std::size_t nv = 1; nv <= 4; ++nv) {
            std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
            for (std::uint32_t a = 0; a < nv; ++a)
                for (std::uint32_t b = a + 1; b < nv; ++b)
                    pairs.emplace_back(a, b);
            for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
                SimpleGraph base{nv, {}};
                for (std::size_t e = 0; e < pairs.size(); ++e)
                    if (mask >> e & 1)
                        base.edges.push_back(pairs[e]);
                // Each list is a nonempty subset of {1,2,3}, encoded as 1..7.
                std::size_t combos = 1;
                for (std::size_t v = 0; v < nv; ++v)
                    combos *= 7;
                for (std::size_t code = 0; code < combos; ++code) {
                    std::vector<std::vector<std::uint32_t>> lists(nv);
                    auto rest = code;
                    for (std::size_t v = 0; v < nv; ++v) {
                        auto subset = rest % 7 + 1;
                        rest /= 7;
                        for (std::uint32_t c = 1; c <= 3; ++c)
                            if (subset >> (c - 1) & 1)
                                lists[v].push_back(c);
                    }
                    auto vc = build_vertex_colour_graph(base, lists);
                    auto its = count_transversals(vc.graph).count;
                    auto brute = brute_list_colourings(base, lists);
                    if (its != brute || count_list_colourings(base, lists) != brute)
                        ++mismatches;
                    ++cases;
                }
            }
        }
        std::ostringstream os;
        os << cases << " cases (all labelled graphs on <= 4 vertices, all lists in {1,2,3}), " << mismatches
           << " mismatches";
        return {mismatches == 0 && cases >= 500, os.str()};
    }

    auto strip_timing(nlohmann::json & j) -> void
    {
        if (j.is_object()) {
            for (auto it = j.begin(); it != j.end();) {
                if (it.key().find("wall_ms") != std::string::npos)
                    it = j.erase(it);
                else {
                    strip_timing(it.value());
                    ++it;
                }
            }
        }
        else if (j.is_array()) {
            for (auto & x : j)
                strip_timing(x);
        }
    }

    auto criterion_12() -> Outcome
    {
        auto dir = fs::temp_directory_path() / ("itlab_acceptance_" + std::to_string(::getpid()));
        fs::create_directories(dir);
        auto path = [&](const std::string & name) { return (dir / name).string(); };

        struct Case
        {
            std::string name;
            std::vector<std::string> args;
            std::vector<std::string> files;
        };
        std::vector<Case> cases{
            {"generate random-nkrs", {"--seed", "11", "--json", "generate", "--kind", "random-nkrs", "--n", "60", "--k", "12", "--out", path("a.ith")}, {"a.ith", "a.meta.json"}},
            {"generate incidence", {"--seed", "12", "--json", "generate", "--kind", "incidence", "--n", "12", "--m", "9", "--p", "0.4", "--r", "2", "--out", path("b.json")}, {"b.json", "b.meta.json"}},
            {"generate projective", {"--seed", "13", "--json", "generate", "--kind", "projective", "--q", "3", "--k", "3", "--out", path("c.ith")}, {"c.ith", "c.meta.json"}},
            {"generate norm", {"--seed", "14", "--json", "generate", "--kind", "norm", "--q", "5", "--k", "4", "--out", path("d.ith")}, {"d.ith", "d.meta.json"}},
            {"generate upper-bound", {"--seed", "15", "--json", "generate", "--kind", "upper-bound", "--k", "3", "--out", path("e.ith")}, {"e.ith", "e.meta.json"}},
            {"solve exact", {"--seed", "16", "--json", "solve", "--solver", "exact", "--in", path("a.ith")}, {}},
            {"solve greedy", {"--seed", "16", "--json", "solve", "--solver", "greedy", "--in", path("a.ith")}, {}},
            {"solve lll", {"--seed", "16", "--json", "solve", "--solver", "lll", "--in", path("a.ith")}, {}},
            {"solve nibble", {"--seed", "16", "--json", "solve", "--solver", "nibble", "--in", path("a.ith")}, {}},
            {"solve ktfree", {"--seed", "16", "--json", "solve", "--solver", "ktfree", "--in", path("a.ith"), "--t", "2"}, {}},
            {"solve exact none", {"--json", "solve", "--solver", "exact", "--in", path("e.ith")}, {}},
            {"verify", {"--seed", "17", "--json", "verify", "--in", path("a.ith"), "--lll"}, {}},
            {"verify hosts", {"--seed", "18", "--json", "verify", "--projective-q", "3", "--norm-q", "5", "--samples", "20000"}, {}},
            {"bounds", {"--json", "bounds", "--k", "12", "--r", "2", "--s", "1"}, {}},
            {"experiment", {"--seed", "19", "--json", "experiment", "--sweep", "n=20..40:10", "--k", "6", "--trials", "10", "--solver", "nibble,greedy,lll", "--out", path("exp.json")}, {"exp.json"}},
        };

        std::size_t identical = 0;
        std::string first_diff;
        for (const auto & c : cases) {
            std::vector<nlohmann::json> outputs;
            std::vector<std::vector<std::string>> contents;
            std::vector<int> codes;
            for (int rep = 0; rep < 2; ++rep) {
                std::ostringstream out, err;
                codes.push_back(cli::run(c.args, out, err));
                auto j = nlohmann::json::parse(out.str(), nullptr, false);
                strip_timing(j);
                outputs.push_back(j);
                std::vector<std::string> files;
                for (const auto & f : c.files) {
                    auto text = read_file(dir / f);
                    if (fs::path(f).extension() == ".json") {
                        auto fj = nlohmann::json::parse(text);
                        strip_timing(fj);
                        text = fj.dump();
                    }
                    files.push_back(text);
                }
                contents.push_back(files);
            }
            bool same = codes[0] == codes[1] && ! outputs[0].is_discarded() && outputs[0] == outputs[1]
                && contents[0] == contents[1];
            if (same)
                ++identical;
            else if (first_diff.empty())
                first_diff = c.name;
        }
        fs::remove_all(dir);
        std::ostringstream os;
        os << identical << "/" << cases.size() << " subcommand runs reproduce identical JSON and files (timing excluded)";
        if (! first_diff.empty())
            os << "; first difference: " << first_diff;
        return {identical == cases.size(), os.str()};
    }

    struct Criterion
    {
        int id;
        const char * title;
        Outcome (*run)();
    };

    const Criterion criteria[] = {
        {1, "no-IT certificate, k=2", criterion_1},
        {2, "no-IT certificate, k=3", criterion_2},
        {3, "incidence graph structure", criterion_3},
        {4, "random host at n=m=200", criterion_4},
        {5, "norm graph", criterion_5},
        {6, "first-moment oracle", criterion_6},
        {7, "truncation law", criterion_7},
        {8, "nibble invariants and trend", criterion_8},
        {9, "local lemma regime", criterion_9},
        {10, "K_{t+1}-free reduction", criterion_10},
        {11, "list-colouring bridge", criterion_11},
        {12, "reproducibility", criterion_12},
    };
}

auto main(int argc, char ** argv) -> int
{
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--criterion" && i + 1 < argc)
            selected.insert(std::stoi(argv[++i]));
        else {
            std::cerr << "usage: itlab_acceptance [--criterion N]...\n";
            return 2;
        }
    }

    int failures = 0;
    for (const auto & c : criteria) {
        if (! selected.empty() && ! selected.count(c.id))
            continue;
        Outcome o;
        auto start = Clock::now();
        try {
            o = c.run();
        }
        catch (const std::exception & e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        auto seconds = ms_since(start) / 1000;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.title << ": "
                  << o.detail << "  [" << fmt(seconds, 3) << " s]" << std::endl;
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
