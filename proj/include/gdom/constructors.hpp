#pragma once

#include <gdom/certificates.hpp>
#include <gdom/errors.hpp>
#include <gdom/exact.hpp>
#include <gdom/formulas.hpp>
#include <gdom/graph.hpp>
#include <gdom/matching.hpp>
#include <gdom/rng.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gdom
{
    struct SamplingPlan
    {
        double p = 0.5;
        std::uint64_t seed = 0;
        int trials = 1;
    };

    /// Extra bookkeeping of the matching-based restrained construction.
    struct MatchingDetails
    {
        int beta1 = 0;
        int touching = 0;       ///< k, matching edges with an end in the base set
        int base_size = 0;
        bool exact_base = false;
    };

    struct ConstructionOutcome
    {
        Certificate certificate;
        int size_or_weight = 0;
        std::optional<double> guarantee;    ///< bound the outcome is certified against
        std::optional<double> expectation;  ///< objective before any vertex is fixed
        std::vector<double> trace;          ///< derandomization: objective after each fixing step
        std::optional<MatchingDetails> matching;

        auto meets_guarantee() const -> bool
        {
            return ! guarantee || size_or_weight <= *guarantee + formulas::slack;
        }
    };

    enum class Decision : std::uint8_t
    {
        undecided,
        in,
        out
    };

    namespace detail
    {
        inline auto check_sampled_variant(Variant variant) -> void
        {
            if (variant != Variant::dominating && variant != Variant::total && variant != Variant::global && variant != Variant::roman)
                throw ParameterError("randomized constructions exist for dominating, total, global and roman only");
        }

        inline auto check_probability(double p) -> void
        {
            if (! (p >= 0.0 && p <= 1.0))
                throw ParameterError("probability must lie in [0, 1]");
        }

        /// Vertices not dominated by a in the complement: outside a and adjacent to all of a.
        inline auto undominated_in_complement(const Graph & g, const VertexSet & a) -> VertexSet
        {
            VertexSet result(g.order());
            for (int v = 0; v < g.order(); ++v)
                if (! a.test(v) && a.is_subset_of(g.neighbors(v)))
                    result.set(v);
            return result;
        }

        /// Turns the sampled (or fixed) set A into the variant's certificate.
        inline auto complete_from_sample(const Graph & g, Variant variant, const VertexSet & a) -> Certificate
        {
            const int n = g.order();
            switch (variant) {
            case Variant::dominating:
                return Certificate::of_set(variant, a | ~g.closed_neighborhood(a));
            case Variant::global:
                return Certificate::of_set(variant, a | ~g.closed_neighborhood(a) | undominated_in_complement(g, a));
            case Variant::roman:
                return Certificate::of_roman(complete_roman(g, a));
            case Variant::total: {
                VertexSet d = a;
                for (int v = 0; v < n; ++v)
                    if (! g.neighbors(v).intersects(a))
                        d.set(g.neighbors(v).first());
                return Certificate::of_set(variant, std::move(d));
            }
            default:
                throw ParameterError("variant has no sampling completion");
            }
        }

        inline auto outcome_of(Certificate cert) -> ConstructionOutcome
        {
            ConstructionOutcome out;
            out.size_or_weight = cert.value();
            out.certificate = std::move(cert);
            return out;
        }
    }

    /// Sampling probability whose expectation matches each closed-form bound.
    inline auto default_p(const DegreeProfile & profile, Variant variant) -> double
    {
        switch (variant) {
        case Variant::global: {
            if (profile.delta_prime < 1)
                throw ParameterError("global construction needs min(delta, delta_bar) >= 1");
            const double d = profile.delta_prime;
            return 1.0 - 1.0 / (std::pow(2.0, 1.0 / d) * std::pow(1.0 + d, 1.0 / d));
        }
        case Variant::roman: {
            if (profile.delta < 1)
                throw ParameterError("roman construction needs delta >= 1");
            const double d = profile.delta;
            return 1.0 - std::pow(2.0 / (1.0 + d), 1.0 / d);
        }
        case Variant::dominating: {
            if (profile.delta < 1)
                throw ParameterError("dominating construction needs delta >= 1");
            const double d = profile.delta;
            return std::min(1.0, std::log(d + 1.0) / (d + 1.0));
        }
        case Variant::total: {
            if (profile.delta < 1)
                throw ParameterError("total construction needs delta >= 1");
            const double d = profile.delta;
            return std::min(1.0, std::log(d) / d);
        }
        default:
            throw ParameterError("no sampling probability for variant " + std::string(to_string(variant)));
        }
    }

    /// The relaxed-bound probabilities: global min{1, (ln(d'+1)+ln 2)/(d'+1)}, roman (ln(d+1)-ln 2)/(d+1).
    inline auto relaxed_p(const DegreeProfile & profile, Variant variant) -> double
    {
        if (variant == Variant::global) {
            const double d = profile.delta_prime;
            return std::min(1.0, (std::log(d + 1.0) + std::log(2.0)) / (d + 1.0));
        }
        if (variant == Variant::roman) {
            if (profile.delta < 1)
                throw ParameterError("roman construction needs delta >= 1");
            const double d = profile.delta;
            return std::clamp((std::log(d + 1.0) - std::log(2.0)) / (d + 1.0), 0.0, 1.0);
        }
        return default_p(profile, variant);
    }

    /// The closed-form bound the derandomized construction of `variant` is certified against.
    inline auto bound_guarantee(const Graph & g, Variant variant) -> double
    {
        const auto profile = degree_profile(g);
        const int n = g.order();
        switch (variant) {
        case Variant::dominating: return formulas::domination_upper(n, profile.delta);
        case Variant::total: return formulas::total_upper(n, profile.delta);
        case Variant::global: return formulas::global_upper(n, profile.delta_prime);
        case Variant::roman: return formulas::roman_upper(n, profile.delta);
        default: throw ParameterError("no closed-form guarantee for variant");
        }
    }

    /**
     * Objective of the sampling argument conditioned on a partial assignment: each
     * undecided vertex joins A with probability p. Dominating: E|A| + E|V - N[A]|.
     * Global adds the vertices of the complement left undominated. Roman: 2E|A| + E|V - N[A]|.
     * Total: E|A| + E|{v : N(v) misses A}|.
     */
    inline auto conditional_expectation(const Graph & g, Variant variant, std::span<const Decision> partial, double p) -> double
    {
        detail::check_sampled_variant(variant);
        detail::check_probability(p);
        const int n = g.order();
        if (static_cast<int>(partial.size()) != n)
            throw ParameterError("partial assignment size does not match graph order");

        VertexSet in(n), open(n);
        for (int v = 0; v < n; ++v) {
            if (partial[v] == Decision::in)
                in.set(v);
            else if (partial[v] == Decision::undecided)
                open.set(v);
        }
        const double q = 1.0 - p;
        auto miss = [&](bool hit, int undecided) { return hit ? 0.0 : std::pow(q, undecided); };

        double a_term = in.count() + p * open.count();
        double missed = 0.0;
        for (int v = 0; v < n; ++v) {
            const auto & nv = g.neighbors(v);
            if (variant == Variant::total) {
                missed += miss(nv.intersects(in), nv.count_common(open));
                continue;
            }
            const bool self_in = in.test(v), self_open = open.test(v);
            missed += miss(self_in || nv.intersects(in), nv.count_common(open) + self_open);
            if (variant == Variant::global) {
                // closed complement neighbourhood: v and its non-neighbours
                const bool hit = self_in || in.count() - nv.count_common(in) > (self_in ? 1 : 0);
                missed += miss(hit, open.count() - nv.count_common(open));
            }
        }
        return (variant == Variant::roman ? 2.0 * a_term : a_term) + missed;
    }

    /// Best of plan.trials independent samples, plus every trial's size.
    struct SampleSummary
    {
        ConstructionOutcome best;
        std::vector<int> values;
    };

    inline auto sample_constructions(const Graph & g, Variant variant, const SamplingPlan & plan) -> SampleSummary
    {
        detail::check_sampled_variant(variant);
        detail::check_probability(plan.p);
        if (plan.trials < 1)
            throw ParameterError("trials must be >= 1");
        require_feasible(g, variant);

        const int n = g.order();
        SampleSummary summary;
        summary.values.reserve(plan.trials);
        for (int trial = 0; trial < plan.trials; ++trial) {
            Rng rng(derive_seed(plan.seed, static_cast<std::uint64_t>(trial)));
            VertexSet a(n);
            for (int v = 0; v < n; ++v)
                if (rng.bernoulli(plan.p))
                    a.set(v);
            auto outcome = detail::outcome_of(detail::complete_from_sample(g, variant, a));
            summary.values.push_back(outcome.size_or_weight);
            if (trial == 0 || outcome.size_or_weight < summary.best.size_or_weight)
                summary.best = std::move(outcome);
        }
        return summary;
    }

    inline auto random_construct(const Graph & g, Variant variant, const SamplingPlan & plan) -> ConstructionOutcome
    {
        return sample_constructions(g, variant, plan).best;
    }

    /**
     * Method of conditional expectations: fixes vertices in index order to whichever of
     * in/out gives the smaller conditional objective (ties go to out). The final objective
     * never exceeds the initial expectation, which at the default p is at most the bound.
     */
    inline auto derandomized_construct(const Graph & g, Variant variant, std::optional<double> p = std::nullopt) -> ConstructionOutcome
    {
        detail::check_sampled_variant(variant);
        require_feasible(g, variant);
        const bool default_rate = ! p.has_value();
        const double rate = p.value_or(default_p(degree_profile(g), variant));
        detail::check_probability(rate);

        const int n = g.order();
        std::vector<Decision> partial(n, Decision::undecided);
        std::vector<double> trace;
        trace.reserve(n + 1);
        trace.push_back(conditional_expectation(g, variant, partial, rate));
        for (int v = 0; v < n; ++v) {
            partial[v] = Decision::out;
            const double if_out = conditional_expectation(g, variant, partial, rate);
            partial[v] = Decision::in;
            const double if_in = conditional_expectation(g, variant, partial, rate);
            if (if_out <= if_in) {
                partial[v] = Decision::out;
                trace.push_back(if_out);
            }
            else
                trace.push_back(if_in);
        }

        VertexSet a(n);
        for (int v = 0; v < n; ++v)
            if (partial[v] == Decision::in)
                a.set(v);
        auto outcome = detail::outcome_of(detail::complete_from_sample(g, variant, a));
        outcome.expectation = trace.front();
        outcome.guarantee = default_rate ? bound_guarantee(g, variant) : trace.front();
        outcome.trace = std::move(trace);
        return outcome;
    }

    /// Restrained variants when n < delta^2/(ln delta + 1): the derandomized dominating
    /// (resp. total dominating) set is already restrained because every degree exceeds its size.
    inline auto restrained_small_order(const Graph & g, Variant variant) -> ConstructionOutcome
    {
        if (variant != Variant::restrained && variant != Variant::total_restrained)
            throw ParameterError("small-order construction is for restrained and total_restrained");
        const auto profile = degree_profile(g);
        const int n = g.order();
        if (! formulas::small_order_condition(n, profile.delta))
            throw ParameterError("degree condition not met: need delta >= 1 and n < delta^2/(ln delta + 1)");

        const bool total = variant == Variant::total_restrained;
        auto base = derandomized_construct(g, total ? Variant::total : Variant::dominating);
        auto cert = Certificate::of_set(variant, base.certificate.set());
        if (auto verdict = check_certificate(g, cert); ! verdict)
            throw std::logic_error("small-order set failed the restrained check at vertex " + std::to_string(verdict.witness));
        auto outcome = detail::outcome_of(std::move(cert));
        outcome.expectation = base.expectation;
        outcome.guarantee = total ? formulas::total_upper(n, profile.delta) : formulas::domination_upper(n, profile.delta);
        return outcome;
    }

    /**
     * Given a (total) dominating set and a matching, keep out only the matching edges with
     * both ends outside the set; everything else joins. Outside vertices are then matched
     * to each other, so the result is (total) restrained of size n - 2(beta_1 - k).
     */
    inline auto restrained_from_matching(const Graph & g, Variant variant, const VertexSet & base, const Matching & m) -> ConstructionOutcome
    {
        if (variant != Variant::restrained && variant != Variant::total_restrained)
            throw ParameterError("matching construction is for restrained and total_restrained");
        const int n = g.order();
        if (base.width() != n)
            throw ParameterError("base set width does not match graph order");
        if (! is_matching(g, m))
            throw ParameterError("not a matching of this graph");

        VertexSet result = VertexSet::full(n);
        int touching = 0;
        for (auto [u, v] : m.edges) {
            if (base.test(u) || base.test(v))
                ++touching;
            else {
                result.reset(u);
                result.reset(v);
            }
        }
        auto outcome = detail::outcome_of(Certificate::of_set(variant, std::move(result)));
        outcome.guarantee = static_cast<double>(n - 2 * m.size() + 2 * base.count());
        outcome.matching = MatchingDetails{m.size(), touching, base.count(), false};
        return outcome;
    }

    /// Base set is the exact minimum (total) dominating set for n <= 24, otherwise derandomized.
    inline auto restrained_from_matching(const Graph & g, Variant variant) -> ConstructionOutcome
    {
        if (variant != Variant::restrained && variant != Variant::total_restrained)
            throw ParameterError("matching construction is for restrained and total_restrained");
        const bool total = variant == Variant::total_restrained;
        const Variant base_variant = total ? Variant::total : Variant::dominating;
        require_feasible(g, base_variant);

        const bool exact = g.order() <= max_brute_force_order;
        VertexSet base = exact ? exact_value(g, base_variant).witness.set()
                               : derandomized_construct(g, base_variant).certificate.set();
        auto outcome = restrained_from_matching(g, variant, base, max_matching(g));
        outcome.matching->exact_base = exact;
        return outcome;
    }

    inline constexpr std::string_view construction_methods[] = {"random-dom", "random-total", "random-global",
        "random-roman", "derand-dom", "derand-total", "derand-global", "derand-roman", "restrained-smallorder",
        "trestrained-smallorder", "restrained-matching", "trestrained-matching"};

    /// Dispatch on the CLI method names. `p` overrides the default rate for the sampling methods.
    inline auto construct_by_name(const Graph & g, std::string_view method, std::optional<double> p,
        std::uint64_t seed, int trials) -> ConstructionOutcome
    {
        auto sampled = [](std::string_view suffix) -> std::optional<Variant> {
            if (suffix == "dom") return Variant::dominating;
            if (suffix == "total") return Variant::total;
            if (suffix == "global") return Variant::global;
            if (suffix == "roman") return Variant::roman;
            return std::nullopt;
        };
        if (method.starts_with("random-"))
            if (auto v = sampled(method.substr(7))) {
                require_feasible(g, *v);
                const double rate = p.value_or(default_p(degree_profile(g), *v));
                auto outcome = random_construct(g, *v, SamplingPlan{rate, seed, trials});
                outcome.expectation = conditional_expectation(g, *v, std::vector<Decision>(g.order(), Decision::undecided), rate);
                return outcome;
            }
        if (method.starts_with("derand-"))
            if (auto v = sampled(method.substr(7)))
                return derandomized_construct(g, *v, p);
        if (method == "restrained-smallorder")
            return restrained_small_order(g, Variant::restrained);
        if (method == "trestrained-smallorder")
            return restrained_small_order(g, Variant::total_restrained);
        if (method == "restrained-matching")
            return restrained_from_matching(g, Variant::restrained);
        if (method == "trestrained-matching")
            return restrained_from_matching(g, Variant::total_restrained);
        throw ParameterError("unknown construction method '" + std::string(method) + "'");
    }
}
