#include "corpus.hpp"

#include <gdom/constructors.hpp>
#include <gdom/exact.hpp>
#include <gdom/formulas.hpp>
#include <gdom/generators.hpp>
#include <gdom/matching.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace gdom;
using gdom::testing::graph_of;

namespace
{
    auto profile_with(int delta, int delta_prime) -> DegreeProfile
    {
        DegreeProfile p;
        p.delta = delta;
        p.delta_prime = delta_prime;
        return p;
    }

    /// Enumerates every completion of the undecided vertices and averages the proof objective.
    auto enumerated_expectation(const Graph & g, Variant variant, const std::vector<Decision> & partial, double p) -> double
    {
        const int n = g.order();
        std::vector<int> open;
        for (int v = 0; v < n; ++v)
            if (partial[v] == Decision::undecided)
                open.push_back(v);
        double total = 0.0;
        for (unsigned mask = 0; mask < (1U << open.size()); ++mask) {
            std::vector<bool> in(n, false);
            double prob = 1.0;
            for (int v = 0; v < n; ++v)
                in[v] = partial[v] == Decision::in;
            for (std::size_t i = 0; i < open.size(); ++i) {
                const bool chosen = mask & (1U << i);
                in[open[i]] = chosen;
                prob *= chosen ? p : 1.0 - p;
            }
            int a = 0, b = 0, c = 0;
            for (int v = 0; v < n; ++v) {
                a += in[v];
                bool closed_hit = in[v], open_hit = false, complement_hit = in[v];
                for (int u = 0; u < n; ++u) {
                    if (u == v)
                        continue;
                    if (g.adjacent(u, v)) {
                        closed_hit = closed_hit || in[u];
                        open_hit = open_hit || in[u];
                    }
                    else
                        complement_hit = complement_hit || in[u];
                }
                b += variant == Variant::total ? ! open_hit : ! closed_hit;
                c += ! complement_hit;
            }
            double objective = a + b;
            if (variant == Variant::global)
                objective += c;
            if (variant == Variant::roman)
                objective = 2.0 * a + b;
            total += prob * objective;
        }
        return total;
    }

    const Variant sampled[] = {Variant::dominating, Variant::total, Variant::global, Variant::roman};
}

TEST(DefaultP, Examples)
{
    EXPECT_DOUBLE_EQ(default_p(profile_with(5, 1), Variant::global), 0.75);
    EXPECT_DOUBLE_EQ(default_p(profile_with(1, 0), Variant::roman), 0.0);
    EXPECT_NEAR(default_p(profile_with(3, 3), Variant::global), 0.5, 1e-15);
    EXPECT_NEAR(default_p(profile_with(1, 0), Variant::dominating), std::log(2.0) / 2.0, 1e-15);
    EXPECT_DOUBLE_EQ(default_p(profile_with(1, 0), Variant::total), 0.0);
}

TEST(DefaultP, PreconditionErrors)
{
    EXPECT_THROW(default_p(profile_with(3, 0), Variant::global), ParameterError);
    EXPECT_THROW(default_p(profile_with(0, 0), Variant::roman), ParameterError);
    EXPECT_THROW(default_p(profile_with(0, 0), Variant::total), ParameterError);
    EXPECT_THROW(default_p(profile_with(3, 3), Variant::restrained), ParameterError);
}

TEST(DefaultP, ExpectationAtDefaultEqualsClosedForm)
{
    for (int d = 1; d <= 60; ++d) {
        const double pg = default_p(profile_with(d, d), Variant::global);
        EXPECT_NEAR(pg + 2.0 * std::pow(1.0 - pg, 1.0 + d), formulas::global_upper(1, d), 1e-12) << d;
        const double pr = default_p(profile_with(d, d), Variant::roman);
        EXPECT_NEAR(2.0 * pr + std::pow(1.0 - pr, 1.0 + d), formulas::roman_upper(1, d), 1e-12) << d;
    }
}

TEST(RandomConstruct, DominatingAtExtremeRates)
{
    auto g = petersen_graph();
    for (double p : {0.0, 1.0}) {
        auto outcome = random_construct(g, Variant::dominating, {p, 3, 1});
        EXPECT_EQ(outcome.certificate.set(), VertexSet::full(10));
        EXPECT_EQ(outcome.size_or_weight, 10);
    }
}

TEST(RandomConstruct, AlwaysValid)
{
    auto corpus = gdom::testing::random_corpus(100, 2, 16, {0.2, 0.5, 0.8}, 51);
    for (auto & [name, g] : corpus)
        for (auto variant : sampled) {
            if (variant == Variant::total && isolated_vertex(g))
                continue;
            for (double p : {0.0, 0.25, 0.5, 0.75, 1.0})
                for (std::uint64_t seed = 0; seed < 50; ++seed) {
                    auto outcome = random_construct(g, variant, {p, seed, 1});
                    ASSERT_TRUE(check_certificate(g, outcome.certificate).valid) << name << " " << to_string(variant) << " p=" << p;
                    ASSERT_EQ(outcome.certificate.value(), outcome.size_or_weight);
                }
        }
}

TEST(RandomConstruct, BestOfTrialsIsMinimumAndDeterministic)
{
    auto g = petersen_graph();
    auto summary = sample_constructions(g, Variant::global, {0.5, 9, 200});
    ASSERT_EQ(summary.values.size(), 200U);
    EXPECT_EQ(summary.best.size_or_weight, *std::min_element(summary.values.begin(), summary.values.end()));
    EXPECT_EQ(sample_constructions(g, Variant::global, {0.5, 9, 200}).values, summary.values);
    EXPECT_THROW(random_construct(g, Variant::global, {0.5, 9, 0}), ParameterError);
    EXPECT_THROW(random_construct(g, Variant::global, {1.5, 9, 1}), ParameterError);
}

TEST(RandomConstruct, PetersenGlobalMonteCarlo)
{
    auto g = petersen_graph();
    auto summary = sample_constructions(g, Variant::global, {0.5, 2024, 1000});
    double sum = 0.0, sum_sq = 0.0;
    for (int x : summary.values) {
        sum += x;
        sum_sq += double(x) * x;
    }
    const double mean = sum / 1000.0;
    const double stderr_mean = std::sqrt((sum_sq - 1000.0 * mean * mean) / 999.0 / 1000.0);
    EXPECT_LE(mean, 6.25 + 3.0 * stderr_mean);
    EXPECT_LE(summary.best.size_or_weight, 6);
}

TEST(ConditionalExpectation, Examples)
{
    auto c4 = cycle_graph(4);
    std::vector<Decision> open(4, Decision::undecided);
    EXPECT_NEAR(conditional_expectation(c4, Variant::dominating, open, 0.3), 0.3 * 4 + 4 * std::pow(0.7, 3), 1e-12);

    auto g = petersen_graph();
    std::vector<Decision> all_in(10, Decision::in), all_out(10, Decision::out);
    for (auto v : sampled)
        EXPECT_DOUBLE_EQ(conditional_expectation(g, v, all_in, 0.4), v == Variant::roman ? 20.0 : 10.0);
    EXPECT_DOUBLE_EQ(conditional_expectation(g, Variant::roman, all_out, 0.4), 10.0);
    EXPECT_DOUBLE_EQ(conditional_expectation(g, Variant::global, all_out, 0.4), 20.0);
    EXPECT_THROW(conditional_expectation(g, Variant::roman, std::vector<Decision>(9, Decision::in), 0.4), ParameterError);
}

TEST(ConditionalExpectation, MatchesEnumerationOverCompletions)
{
    Rng rng(61);
    for (auto & [name, g] : gdom::testing::random_corpus(40, 1, 9, {0.3, 0.6}, 62))
        for (auto variant : sampled)
            for (int trial = 0; trial < 3; ++trial) {
                std::vector<Decision> partial(g.order());
                for (auto & d : partial)
                    d = static_cast<Decision>(rng.below(3));
                const double p = rng.uniform();
                EXPECT_NEAR(conditional_expectation(g, variant, partial, p), enumerated_expectation(g, variant, partial, p), 1e-9)
                    << name << " " << to_string(variant);
            }
}

TEST(Derandomized, Examples)
{
    auto global = derandomized_construct(petersen_graph(), Variant::global);
    EXPECT_LE(global.size_or_weight, 6);
    EXPECT_NEAR(*global.guarantee, 6.25, 1e-12);

    auto roman = derandomized_construct(cycle_graph(10), Variant::roman);
    EXPECT_LE(roman.size_or_weight, 9);
    EXPECT_NEAR(*roman.guarantee, 9.113378920963653, 1e-9);

    auto k2 = derandomized_construct(complete_graph(2), Variant::dominating);
    EXPECT_EQ(k2.size_or_weight, 1);
    EXPECT_NEAR(*k2.guarantee, std::log(2.0) + 1.0, 1e-12);
}

TEST(Derandomized, MonotoneTraceAndGuarantee)
{
    auto corpus = gdom::testing::corpus_with_families();
    for (auto & [name, g] : corpus) {
        const auto profile = degree_profile(g);
        for (auto variant : sampled) {
            const bool eligible = variant == Variant::global ? profile.delta_prime >= 1 : profile.delta >= 1;
            if (! eligible) {
                EXPECT_THROW(derandomized_construct(g, variant), std::exception) << name;
                continue;
            }
            auto outcome = derandomized_construct(g, variant);
            ASSERT_EQ(outcome.trace.size(), static_cast<std::size_t>(g.order() + 1));
            for (std::size_t i = 1; i < outcome.trace.size(); ++i)
                EXPECT_LE(outcome.trace[i], outcome.trace[i - 1] + 1e-12) << name;
            EXPECT_LE(outcome.size_or_weight, outcome.trace.back() + 1e-9) << name;
            EXPECT_TRUE(check_certificate(g, outcome.certificate).valid) << name << " " << to_string(variant);
            EXPECT_TRUE(outcome.meets_guarantee()) << name << " " << to_string(variant);
            EXPECT_LE(outcome.trace.front(), bound_guarantee(g, variant) + 1e-9) << name;
        }
    }
}

TEST(Derandomized, CustomRateGuaranteesInitialExpectation)
{
    auto g = petersen_graph();
    auto outcome = derandomized_construct(g, Variant::dominating, 0.9);
    EXPECT_DOUBLE_EQ(*outcome.guarantee, *outcome.expectation);
    EXPECT_TRUE(outcome.meets_guarantee());
}

TEST(RestrainedSmallOrder, CirculantClearsCondition)
{
    std::vector<int> jumps{1, 2, 3, 4, 5};
    auto g = circulant_graph(20, jumps);
    ASSERT_EQ(degree_profile(g).delta, 10);
    auto outcome = restrained_small_order(g, Variant::restrained);
    EXPECT_TRUE(check_certificate(g, outcome.certificate).valid);
    EXPECT_LE(outcome.size_or_weight, 6);
    EXPECT_NEAR(*outcome.guarantee, 6.177991405087947, 1e-9);
}

TEST(RestrainedSmallOrder, CycleFailsCondition)
{
    EXPECT_THROW(restrained_small_order(cycle_graph(6), Variant::restrained), ParameterError);
}

TEST(RestrainedSmallOrder, K10TotalRestrained)
{
    auto g = complete_graph(10);
    auto outcome = restrained_small_order(g, Variant::total_restrained);
    EXPECT_EQ(outcome.certificate.variant, Variant::total_restrained);
    EXPECT_TRUE(check_certificate(g, outcome.certificate).valid);
    EXPECT_LE(outcome.size_or_weight, 3);
}

TEST(RestrainedFromMatching, C6Trace)
{
    // 1-based D = {1,4}, M = {12, 34, 56}
    auto g = cycle_graph(6);
    Matching m{{{0, 1}, {2, 3}, {4, 5}}};
    std::vector<int> d{0, 3};
    auto outcome = restrained_from_matching(g, Variant::restrained, VertexSet::from_indices(6, d), m);
    EXPECT_EQ(outcome.certificate.set().indices(), (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ(outcome.size_or_weight, 4);
    EXPECT_EQ(outcome.matching->touching, 2);
    EXPECT_DOUBLE_EQ(*outcome.guarantee, 4.0);
    EXPECT_TRUE(check_certificate(g, outcome.certificate).valid);
}

TEST(RestrainedFromMatching, TwoK2KeepsEverything)
{
    auto g = graph_of(4, {{0, 1}, {2, 3}});
    Matching m{{{0, 1}, {2, 3}}};
    std::vector<int> d{0, 2};
    auto outcome = restrained_from_matching(g, Variant::restrained, VertexSet::from_indices(4, d), m);
    EXPECT_EQ(outcome.size_or_weight, 4);
    EXPECT_EQ(outcome.matching->touching, 2);
}

TEST(RestrainedFromMatching, K4)
{
    auto g = complete_graph(4);
    auto outcome = restrained_from_matching(g, Variant::restrained);
    EXPECT_LE(outcome.size_or_weight, 2);
    EXPECT_TRUE(check_certificate(g, outcome.certificate).valid);
    EXPECT_TRUE(outcome.matching->exact_base);
}

TEST(RestrainedFromMatching, RejectsBadInputs)
{
    auto g = cycle_graph(6);
    Matching overlapping{{{0, 1}, {1, 2}}};
    EXPECT_THROW(restrained_from_matching(g, Variant::restrained, VertexSet(6), overlapping), ParameterError);
    EXPECT_THROW(restrained_from_matching(graph_of(3, {{0, 1}}), Variant::total_restrained), InfeasibleError);
    EXPECT_THROW(restrained_from_matching(g, Variant::roman), ParameterError);
}

TEST(RestrainedFromMatching, SizeIdentityOnCorpus)
{
    for (auto & [name, g] : gdom::testing::corpus_with_families()) {
        const int n = g.order();
        const int beta = max_matching(g).size();
        auto plain = restrained_from_matching(g, Variant::restrained);
        EXPECT_TRUE(check_certificate(g, plain.certificate).valid) << name;
        EXPECT_EQ(plain.size_or_weight, n - 2 * (beta - plain.matching->touching)) << name;
        EXPECT_LE(plain.size_or_weight, n - 2 * beta + 2 * exact_value(g, Variant::dominating).value) << name;
        if (isolated_vertex(g))
            continue;
        auto total = restrained_from_matching(g, Variant::total_restrained);
        EXPECT_TRUE(check_certificate(g, total.certificate).valid) << name;
        EXPECT_EQ(total.size_or_weight, n - 2 * (beta - total.matching->touching)) << name;
        EXPECT_LE(total.size_or_weight, n - 2 * beta + 2 * exact_value(g, Variant::total).value) << name;
    }
}

TEST(RestrainedFromMatching, PerfectMatchingSpecialisation)
{
    int checked = 0;
    for (auto & [name, g] : gdom::testing::corpus_with_families()) {
        if (isolated_vertex(g) || ! has_perfect_matching(g))
            continue;
        ++checked;
        const int n = g.order();
        const int delta = degree_profile(g).delta;
        auto base = derandomized_construct(g, Variant::dominating).certificate.set();
        auto plain = restrained_from_matching(g, Variant::restrained, base, max_matching(g));
        EXPECT_LE(plain.size_or_weight, formulas::restrained_perfect_matching_upper(n, delta) + formulas::slack) << name;
        auto tbase = derandomized_construct(g, Variant::total).certificate.set();
        auto total = restrained_from_matching(g, Variant::total_restrained, tbase, max_matching(g));
        EXPECT_TRUE(check_certificate(g, total.certificate).valid) << name;
        EXPECT_LE(total.size_or_weight, formulas::total_restrained_perfect_matching_upper(n, delta) + formulas::slack) << name;
    }
    EXPECT_GT(checked, 50);
}

TEST(ConstructByName, Dispatch)
{
    auto g = petersen_graph();
    for (auto method : construction_methods) {
        if (method.find("smallorder") != std::string_view::npos) {
            EXPECT_THROW(construct_by_name(g, method, std::nullopt, 1, 5), ParameterError);
            continue;
        }
        auto outcome = construct_by_name(g, method, std::nullopt, 1, 5);
        EXPECT_TRUE(check_certificate(g, outcome.certificate).valid) << method;
        EXPECT_TRUE(outcome.meets_guarantee()) << method;
    }
    EXPECT_THROW(construct_by_name(g, "random-weak", std::nullopt, 1, 1), ParameterError);
}
