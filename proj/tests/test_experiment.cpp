#include <gdom/experiment.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace gdom;

namespace
{
    auto gnp_config(int n, double p, int samples, std::vector<std::string> tasks, std::uint64_t seed = 11) -> ExperimentConfig
    {
        ExperimentConfig c;
        c.family = {Family::gnp, n, p, 0, {}};
        c.samples = samples;
        c.tasks = std::move(tasks);
        c.seed = seed;
        return c;
    }

    auto csv_of(const ExperimentResult & r) -> std::string
    {
        std::ostringstream out;
        write_csv(out, r.rows);
        return out.str();
    }

    auto rows_for(const ExperimentResult & r, const std::string & task) -> std::vector<CsvRow>
    {
        std::vector<CsvRow> selected;
        for (const auto & row : r.rows)
            if (row.task == task)
                selected.push_back(row);
        return selected;
    }
}

TEST(Experiment, ByteIdenticalAcrossRunsAndWorkerCounts)
{
    auto config = gnp_config(10, 0.4, 24, {"gamma", "gamma_R", "beta1", "audit", "construct:random-global"});
    const auto reference = csv_of(run_experiment(config));
    EXPECT_EQ(csv_of(run_experiment(config)), reference);
    for (int workers : {2, 3, 8, 64}) {
        config.workers = workers;
        EXPECT_EQ(csv_of(run_experiment(config)), reference) << workers;
    }
}

TEST(Experiment, SeedChangesOutput)
{
    auto a = run_experiment(gnp_config(10, 0.4, 10, {"gamma"}, 1));
    auto b = run_experiment(gnp_config(10, 0.4, 10, {"gamma"}, 2));
    EXPECT_NE(csv_of(a), csv_of(b));
}

TEST(Experiment, RowShape)
{
    auto r = run_experiment(gnp_config(9, 0.5, 3, {"gamma", "beta1"}, 5));
    ASSERT_EQ(r.rows.size(), 6U);
    EXPECT_EQ(r.rows[0].graph_id, "gnp-0");
    EXPECT_EQ(r.rows[1].graph_id, "gnp-0");
    EXPECT_EQ(r.rows[2].graph_id, "gnp-1");
    EXPECT_EQ(r.rows[0].seed, derive_seed(5, 0));
    EXPECT_EQ(r.rows[4].seed, derive_seed(5, 2));
    EXPECT_EQ(r.rows[1].method, "blossom");

    const auto g = generate({Family::gnp, 9, 0.5, 0, {}}, derive_seed(5, 1));
    EXPECT_EQ(r.rows[2].m, g.size());
    EXPECT_EQ(*r.rows[2].value, exact_value(g, Variant::dominating).value);
    EXPECT_EQ(*r.rows[3].value, max_matching(g).size());

    std::istringstream lines(csv_of(r));
    std::string header;
    std::getline(lines, header);
    EXPECT_EQ(header, csv_header);
    std::string first;
    std::getline(lines, first);
    EXPECT_EQ(std::count(first.begin(), first.end(), ','), 13);
    EXPECT_EQ(first.back(), ',');
}

TEST(Experiment, TimingFillsElapsed)
{
    auto config = gnp_config(8, 0.5, 2, {"gamma"});
    config.timing = true;
    for (const auto & row : run_experiment(config).rows)
        ASSERT_TRUE(row.elapsed_ms.has_value());
}

TEST(Experiment, Summary)
{
    auto r = run_experiment(gnp_config(10, 0.5, 30, {"gamma", "eq-restrained"}, 3));
    ASSERT_EQ(r.summary.size(), 2U);
    const auto & gamma = r.summary[0];
    EXPECT_EQ(gamma.task, "gamma");
    EXPECT_EQ(gamma.count, 30);
    double sum = 0.0;
    for (const auto & row : rows_for(r, "gamma"))
        sum += *row.value;
    EXPECT_NEAR(gamma.mean, sum / 30.0, 1e-12);
    EXPECT_LE(gamma.min, gamma.mean);
    EXPECT_GE(gamma.max, gamma.mean);
    EXPECT_FALSE(gamma.fraction_satisfied().has_value());
    EXPECT_EQ(r.summary[1].judged, 30);
    auto j = to_json(r.summary[1]);
    EXPECT_TRUE(j.contains("fraction_satisfied"));
    EXPECT_EQ(r.violations, 0);
}

TEST(Experiment, InfeasibleRowsForTotalVariants)
{
    auto r = run_experiment(gnp_config(12, 0.05, 10, {"gamma_t", "eq-trestrained"}, 4));
    int infeasible = 0;
    for (const auto & row : r.rows)
        if (row.satisfied == "infeasible") {
            ++infeasible;
            EXPECT_FALSE(row.value.has_value());
        }
    EXPECT_GT(infeasible, 0);
}

TEST(Experiment, LemmaTasksHoldWheneverJudged)
{
    auto r = run_experiment(gnp_config(12, 0.85, 20, {"lemma-restrained", "lemma-trestrained"}, 8));
    for (const auto & s : r.summary) {
        EXPECT_GT(s.judged, 0) << s.task;
        EXPECT_EQ(s.satisfied, s.judged) << s.task;
    }
}

TEST(Experiment, ConstructionTasks)
{
    auto config = gnp_config(12, 0.6, 10, {"construct:derand-global", "construct:derand-roman", "construct:restrained-matching",
        "construct:restrained-smallorder"}, 9);
    auto r = run_experiment(config);
    EXPECT_EQ(r.violations, 0);
    for (const auto & row : rows_for(r, "construct:derand-global")) {
        EXPECT_EQ(row.method, "derand-global");
        if (row.delta_prime >= 1) {
            EXPECT_EQ(row.satisfied, "true");
            EXPECT_LE(*row.value, *row.rhs_bound + 1e-9);
        }
    }
    for (const auto & row : rows_for(r, "construct:restrained-smallorder"))
        EXPECT_EQ(row.satisfied, "na");
}

TEST(Experiment, ExtremalGlobalFamily)
{
    ExperimentConfig c;
    c.family = {Family::alon_global, 0, 0.0, 3, {}};
    c.samples = 5;
    c.tasks = {"extremal-global", "gamma_g"};
    auto r = run_experiment(c);
    for (const auto & row : rows_for(r, "extremal-global"))
        EXPECT_EQ(row.satisfied, "true") << row.graph_id;
}

TEST(Experiment, WeberTaskReportsK)
{
    auto r = run_experiment(gnp_config(20, 0.5, 4, {"weber"}, 2));
    for (const auto & row : r.rows)
        EXPECT_EQ(*row.rhs_bound, weber_point(20, 0.5).k);
}

TEST(Experiment, ValidationErrors)
{
    EXPECT_THROW(run_experiment(gnp_config(10, 0.5, 0, {"gamma"})), ParameterError);
    EXPECT_THROW(run_experiment(gnp_config(10, 0.5, 2, {})), ParameterError);
    EXPECT_THROW(run_experiment(gnp_config(10, 0.5, 2, {"gamma_x"})), ParameterError);
    EXPECT_THROW(run_experiment(gnp_config(10, 0.5, 2, {"construct:nope"})), ParameterError);
    EXPECT_THROW(run_experiment(gnp_config(50, 0.5, 2, {"gamma_r"})), SizeGuardError);
    EXPECT_THROW(run_experiment(gnp_config(200, 0.5, 2, {"gamma"})), SizeGuardError);
    EXPECT_NO_THROW(run_experiment(gnp_config(200, 0.5, 1, {"beta1"})));

    ExperimentConfig c;
    c.family = {Family::cycle, 8, 0.0, 0, {}};
    c.tasks = {"weber"};
    EXPECT_THROW(run_experiment(c), ParameterError);
    c.tasks = {"extremal-global"};
    EXPECT_THROW(run_experiment(c), ParameterError);
    c.tasks = {"gamma"};
    c.workers = 0;
    EXPECT_THROW(run_experiment(c), ParameterError);
}

TEST(Experiment, GuardMessageNamesTask)
{
    try {
        run_experiment(gnp_config(50, 0.5, 2, {"gamma", "audit"}));
        FAIL();
    }
    catch (const SizeGuardError & e) {
        EXPECT_NE(std::string(e.what()).find("task audit"), std::string::npos);
    }
}

TEST(Experiment, ConfigFromJson)
{
    auto j = json::parse(R"({"family": {"name": "disjoint_union", "parts": [3, 4]}, "samples": 2, "tasks": ["gamma"], "seed": 7, "workers": 2})");
    auto c = experiment_config_from_json(j);
    EXPECT_EQ(c.family.family, Family::disjoint_union);
    EXPECT_EQ(c.family.parts, (std::vector<int>{3, 4}));
    EXPECT_EQ(c.seed, 7U);
    EXPECT_EQ(c.workers, 2);
    auto r = run_experiment(c);
    EXPECT_EQ(*r.rows[0].value, 2);
    EXPECT_EQ(r.rows[0].n, 7);

    EXPECT_THROW(experiment_config_from_json(json::parse(R"({"samples": 2})")), ParseError);
    EXPECT_THROW(experiment_config_from_json(json::parse(R"({"family": {"name": "tree"}, "tasks": []})")), std::exception);
}
