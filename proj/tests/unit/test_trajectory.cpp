#include <itlab/nibble.hpp>
#include <itlab/random_nkrs.hpp>
#include <itlab/trajectory.hpp>

#include <doctest.h>

using namespace itlab;

TEST_SUITE("trajectory")
{
    TEST_CASE("targets follow the recursions")
    {
        NibbleResult run;
        run.eps = 0.5;
        run.p = 0.1;
        run.status = NibbleStatus::success;
        run.completion = "lll";
        run.final_ratio = 6.0;
        run.completion_ratio = two_e;
        NibbleStepRecord on_target;
        on_target.step = 0;
        on_target.size_retention = 1 - 0.1 / 1.375;
        on_target.degree_retention = 1 - 0.1 / 1.125;
        NibbleStepRecord off_target = on_target;
        off_target.step = 1;
        off_target.size_retention = 0.5;
        off_target.degree_retention = 0.99;
        off_target.degree_bound_exceeded = true;
        // Record 0 describes the starting state and has no step diagnostic.
        run.trajectory = {NibbleStepRecord{}, on_target, off_target};

        auto rep = trajectory_report(run);
        REQUIRE(rep.steps.size() == 2);
        CHECK(rep.steps[0].size_target == doctest::Approx(0.1 / 1.375));
        CHECK(rep.steps[0].degree_target == doctest::Approx(0.1 / 1.125));
        CHECK(rep.steps[0].size_within);
        CHECK(rep.steps[0].degree_within);
        CHECK(! rep.steps[1].size_within);
        CHECK(! rep.steps[1].degree_within);
        CHECK(rep.size_within_fraction == doctest::Approx(0.5));
        CHECK(rep.degree_within_fraction == doctest::Approx(0.5));
        CHECK(rep.flagged_steps == 1);
        CHECK(rep.completed);
        CHECK(rep.terminal_ratio_ok);
        auto j = to_json(rep);
        CHECK(j["steps"].size() == 2);
    }

    TEST_CASE("a real run produces a consistent report")
    {
        auto g = random_nkrs(300, 40, 2, 1, 2);
        NibbleConfig cfg;
        cfg.seed = 2;
        auto run = nibble_solve(g, cfg);
        auto rep = trajectory_report(run);
        CHECK(rep.steps.size() + 1 == run.trajectory.size());
        CHECK(rep.completed == (run.status == NibbleStatus::success));
        CHECK(rep.size_within_fraction >= 0.0);
        CHECK(rep.size_within_fraction <= 1.0);
        for (std::size_t i = 1; i < run.trajectory.size(); ++i)
            CHECK(run.trajectory[i].s < run.trajectory[i - 1].s);
    }
}
