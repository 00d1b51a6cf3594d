#include <itlab/bounds.hpp>
#include <itlab/error.hpp>
#include <itlab/exact.hpp>
#include <itlab/experiment.hpp>
#include <itlab/random.hpp>
#include <itlab/random_nkrs.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace itlab
{
    namespace
    {
        auto to_size(std::string_view text) -> std::size_t
        {
            std::size_t value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
                throw Error("sweep: '" + std::string(text) + "' is not a non-negative integer");
            return value;
        }

        auto quantile(std::vector<double> values, double q) -> double
        {
            if (values.empty())
                return 0;
            std::sort(values.begin(), values.end());
            auto idx = static_cast<std::size_t>(std::ceil(q * static_cast<double>(values.size()))) ;
            return values[std::min(values.size() - 1, idx == 0 ? 0 : idx - 1)];
        }

        auto run_trial(const ExperimentConfig & cfg, std::size_t n, std::size_t trial) -> TrialRecord
        {
            TrialRecord rec;
            rec.n = n;
            rec.trial = trial;
            rec.seed = trial_seed(cfg.seed, n, trial);
            auto g = random_nkrs(n, cfg.k, cfg.r, cfg.s, rec.seed);

            bool any_failed = false;
            for (std::size_t j = 0; j < cfg.solvers.size(); ++j) {
                auto options = cfg.options;
                options.solver = cfg.solvers[j];
                options.seed = derive_seed(rec.seed, 1 + static_cast<std::uint64_t>(cfg.solvers[j]));
                auto start = std::chrono::steady_clock::now();
                SolverTrial run;
                run.solver = cfg.solvers[j];
                try {
                    auto out = solve(g, options);
                    run.status = out.status;
                    run.found = out.found();
                    run.steps = out.steps;
                    run.resamples = out.resamples;
                }
                catch (const Error & e) {
                    run.status = std::string("error: ") + e.what();
                }
                run.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
                if (run.solver == SolverKind::exact && run.status != "budget-exhausted")
                    rec.verification = run.found ? "it-exists" : "no-it";
                any_failed = any_failed || ! run.found;
                rec.runs.push_back(std::move(run));
            }
            if (any_failed && cfg.verify_failures && rec.verification.empty()) {
                auto exact = exact_find(g, cfg.verify_budget);
                rec.verification = exact.status == ExactStatus::found ? "it-exists"
                    : exact.status == ExactStatus::none              ? "no-it"
                                                                     : "unknown";
            }
            return rec;
        }
    }

    auto parse_sweep(std::string_view text) -> std::vector<std::size_t>
    {
        if (text.substr(0, 2) == "n=")
            text.remove_prefix(2);
        std::vector<std::size_t> values;
        if (auto dots = text.find(".."); dots != std::string_view::npos) {
            auto lo = to_size(text.substr(0, dots));
            auto rest = text.substr(dots + 2);
            std::size_t step = 1;
            if (auto colon = rest.find(':'); colon != std::string_view::npos) {
                step = to_size(rest.substr(colon + 1));
                rest = rest.substr(0, colon);
            }
            auto hi = to_size(rest);
            if (step == 0 || hi < lo)
                throw Error("sweep: empty range '" + std::string(text) + "'");
            for (auto n = lo; n <= hi; n += step)
                values.push_back(n);
        }
        else {
            while (! text.empty()) {
                auto comma = text.find(',');
                values.push_back(to_size(text.substr(0, comma)));
                text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
            }
        }
        if (values.empty())
            throw Error("sweep: no values");
        return values;
    }

    auto experiment_threads(std::size_t requested) -> std::size_t
    {
        std::size_t threads = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
        if (const char * env = std::getenv("ITLAB_THREADS")) {
            std::size_t cap = 0;
            std::string_view s(env);
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
            if (ec == std::errc{} && cap > 0)
                threads = std::min(threads, cap);
        }
        return std::max<std::size_t>(1, threads);
    }

    auto trial_seed(std::uint64_t master, std::size_t n, std::size_t trial) -> std::uint64_t
    {
        return derive_seed(derive_seed(master, n), trial);
    }

    auto run_experiment(const ExperimentConfig & cfg) -> ExperimentReport
    {
        if (cfg.sweep.empty())
            throw Error("experiment: empty sweep");
        if (cfg.solvers.empty())
            throw Error("experiment: no solvers");

        ExperimentReport report;
        report.config = cfg;
        report.threads = experiment_threads(cfg.threads);
        auto total = cfg.sweep.size() * cfg.trials;
        report.trials.resize(total);

        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            while (true) {
                auto idx = next.fetch_add(1);
                if (idx >= total)
                    return;
                try {
                    report.trials[idx] = run_trial(cfg, cfg.sweep[idx / cfg.trials], idx % cfg.trials);
                }
                catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (! failure)
                        failure = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (std::size_t i = 1; i < report.threads; ++i)
            pool.emplace_back(worker);
        worker();
        for (auto & t : pool)
            t.join();
        if (failure)
            std::rethrow_exception(failure);

        for (std::size_t p = 0; p < cfg.sweep.size(); ++p) {
            PointSummary point;
            point.n = cfg.sweep[p];
            point.trials = cfg.trials;
            point.first_moment_log = first_moment(point.n, cfg.k, cfg.r, cfg.s);
            point.expected_count = std::exp(point.first_moment_log);
            for (std::size_t j = 0; j < cfg.solvers.size(); ++j) {
                SolverSummary sum;
                sum.solver = cfg.solvers[j];
                sum.trials = cfg.trials;
                std::vector<double> times;
                double steps = 0;
                double resamples = 0;
                for (std::size_t t = 0; t < cfg.trials; ++t) {
                    const auto & rec = report.trials[p * cfg.trials + t];
                    const auto & run = rec.runs[j];
                    times.push_back(run.wall_ms);
                    steps += static_cast<double>(run.steps);
                    resamples += static_cast<double>(run.resamples);
                    if (run.found)
                        ++sum.successes;
                    else if (rec.verification == "it-exists")
                        ++sum.failures_with_it;
                    else if (rec.verification == "no-it")
                        ++sum.failures_without_it;
                    else
                        ++sum.failures_unverified;
                }
                auto n = static_cast<double>(std::max<std::size_t>(1, cfg.trials));
                sum.success_rate = static_cast<double>(sum.successes) / n;
                sum.mean_steps = steps / n;
                sum.mean_resamples = resamples / n;
                for (auto x : times)
                    sum.wall_ms_mean += x / n;
                sum.wall_ms_median = quantile(times, 0.5);
                sum.wall_ms_p90 = quantile(times, 0.9);
                point.solvers.push_back(sum);
            }
            report.points.push_back(std::move(point));
        }
        return report;
    }

    auto to_json(const ExperimentReport & report) -> nlohmann::json
    {
        const auto & cfg = report.config;
        auto solvers = nlohmann::json::array();
        for (auto s : cfg.solvers)
            solvers.push_back(to_string(s));
        nlohmann::json params{
            {"k", cfg.k}, {"r", cfg.r}, {"s", cfg.s},
            {"sweep", cfg.sweep},
            {"trials", cfg.trials},
            {"solvers", solvers},
            {"seed", cfg.seed},
            {"eps", cfg.options.eps},
            {"verify_failures", cfg.verify_failures},
        };
        if (cfg.options.p)
            params["p"] = *cfg.options.p;
        if (cfg.options.max_steps)
            params["max_steps"] = *cfg.options.max_steps;

        auto points = nlohmann::json::array();
        for (const auto & p : report.points) {
            auto per = nlohmann::json::array();
            for (const auto & s : p.solvers)
                per.push_back({
                    {"solver", to_string(s.solver)},
                    {"trials", s.trials},
                    {"successes", s.successes},
                    {"success_rate", s.success_rate},
                    {"mean_steps", s.mean_steps},
                    {"mean_resamples", s.mean_resamples},
                    {"wall_ms_mean", s.wall_ms_mean},
                    {"wall_ms_median", s.wall_ms_median},
                    {"wall_ms_p90", s.wall_ms_p90},
                    {"failures_with_it", s.failures_with_it},
                    {"failures_without_it", s.failures_without_it},
                    {"failures_unverified", s.failures_unverified},
                });
            points.push_back({
                {"n", p.n},
                {"trials", p.trials},
                {"first_moment_log", std::isfinite(p.first_moment_log) ? nlohmann::json(p.first_moment_log) : nlohmann::json("-inf")},
                {"expected_count", std::isfinite(p.expected_count) ? nlohmann::json(p.expected_count) : nlohmann::json("inf")},
                {"solvers", per},
            });
        }

        auto seeds = nlohmann::json::array();
        for (const auto & t : report.trials) {
            auto runs = nlohmann::json::array();
            for (const auto & r : t.runs)
                runs.push_back({
                    {"solver", to_string(r.solver)},
                    {"status", r.status},
                    {"steps", r.steps},
                    {"resamples", r.resamples},
                    {"wall_ms", r.wall_ms},
                });
            seeds.push_back({{"n", t.n}, {"trial", t.trial}, {"seed", t.seed}, {"verification", t.verification}, {"runs", runs}});
        }
        return nlohmann::json{{"params", params}, {"points", points}, {"trials", seeds}};
    }

    auto to_csv(const ExperimentReport & report) -> std::string
    {
        std::ostringstream out;
        out.precision(10);
        out << "n,expected_count,first_moment_log,solver,success_rate\n";
        for (const auto & p : report.points)
            for (const auto & s : p.solvers)
                out << p.n << ',' << p.expected_count << ',' << p.first_moment_log << ',' << to_string(s.solver) << ','
                    << s.success_rate << '\n';
        return out.str();
    }
}
