#pragma once

#include <gdom/bounds.hpp>
#include <gdom/certificates.hpp>
#include <gdom/constructors.hpp>
#include <gdom/errors.hpp>
#include <gdom/exact.hpp>
#include <gdom/generators.hpp>
#include <gdom/graph.hpp>
#include <gdom/json.hpp>
#include <gdom/matching.hpp>
#include <gdom/rng.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace gdom
{
    /**
     * Tasks, evaluated once per sampled graph:
     *   gamma, gamma_t, gamma_g, gamma_r, gamma_tr, gamma_R   exact value
     *   beta1                                                matching number
     *   eq-restrained, eq-trestrained                        gamma_r = gamma, gamma_tr = gamma_t
     *   lemma-restrained, lemma-trestrained                  delta > gamma (gamma_t) => the minimum witness is (total) restrained
     *   weber                                                gamma in {k+1, k+2} (gnp only)
     *   extremal-global                                      gamma_g = gamma(H) + 1 (alon_global only)
     *   audit                                                number of bound failures
     *   construct:<method>                                   construction size against its guarantee
     */
    struct ExperimentConfig
    {
        FamilySpec family;
        int samples = 1;
        std::vector<std::string> tasks;
        std::uint64_t seed = 0;
        int workers = 1;
        bool timing = false;  ///< fill elapsed_ms; off keeps the CSV byte-reproducible
    };

    struct CsvRow
    {
        std::string graph_id;
        std::uint64_t seed = 0;
        int n = 0, m = 0, delta = 0, Delta = 0, delta_prime = 0, beta1 = 0;
        std::string task, method;
        std::optional<double> value, rhs_bound;
        std::string satisfied = "na";  ///< true, false, na or infeasible
        std::optional<double> elapsed_ms;
    };

    struct SummaryStats
    {
        std::string task;
        int count = 0;
        double mean = 0.0, stderr_mean = 0.0, min = 0.0, max = 0.0;
        int judged = 0, satisfied = 0;

        auto fraction_satisfied() const -> std::optional<double>
        {
            if (judged == 0)
                return std::nullopt;
            return static_cast<double>(satisfied) / judged;
        }
    };

    struct ExperimentResult
    {
        std::vector<CsvRow> rows;
        std::vector<SummaryStats> summary;  ///< in task order
        int violations = 0;                 ///< failed audit or construction-guarantee rows
    };

    inline auto experiment_config_from_json(const json & j) -> ExperimentConfig
    {
        try {
            ExperimentConfig c;
            const auto & f = j.at("family");
            c.family.family = parse_family(f.at("name").get<std::string>());
            c.family.n = f.value("n", 0);
            c.family.p = f.value("p", 0.0);
            c.family.delta = f.value("delta", 0);
            c.family.parts = f.value("parts", std::vector<int>{});
            c.samples = j.value("samples", 1);
            c.tasks = j.at("tasks").get<std::vector<std::string>>();
            c.seed = j.value("seed", std::uint64_t{0});
            c.workers = j.value("workers", 1);
            c.timing = j.value("timing", false);
            return c;
        }
        catch (const json::exception & e) {
            throw ParseError(0, std::string("malformed experiment config: ") + e.what());
        }
    }

    namespace detail
    {
        inline auto family_order(const FamilySpec & f) -> int
        {
            switch (f.family) {
            case Family::alon_global: return extremal_clique_size(f.delta) + 2 * f.delta + 1;
            case Family::roman_extremal: return extremal_clique_size(f.delta) + f.delta;
            case Family::disjoint_union: {
                int total = 0;
                for (int part : f.parts)
                    total += part;
                return total;
            }
            default: return f.n;
            }
        }

        inline auto task_exact_variant(const std::string & task) -> std::optional<Variant>
        {
            for (auto v : all_variants)
                if (parameter_name(v) == task)
                    return v;
            return std::nullopt;
        }

        /// Every exact variant a task needs, for guard checks before any work starts.
        inline auto task_needs(const std::string & task) -> std::vector<Variant>
        {
            if (auto v = task_exact_variant(task))
                return {*v};
            if (task == "eq-restrained") return {Variant::dominating, Variant::restrained};
            if (task == "eq-trestrained") return {Variant::total, Variant::total_restrained};
            if (task == "lemma-restrained" || task == "weber") return {Variant::dominating};
            if (task == "lemma-trestrained") return {Variant::total};
            if (task == "extremal-global") return {Variant::global, Variant::dominating};
            if (task == "audit") return {all_variants.begin(), all_variants.end()};
            if (task == "beta1" || task.starts_with("construct:")) return {};
            throw ParameterError("unknown experiment task '" + task + "'");
        }

        inline auto validate(const ExperimentConfig & c) -> void
        {
            if (c.samples < 1)
                throw ParameterError("experiment needs samples >= 1");
            if (c.tasks.empty())
                throw ParameterError("experiment needs at least one task");
            if (c.workers < 1)
                throw ParameterError("experiment needs workers >= 1");
            const int n = family_order(c.family);
            for (const auto & task : c.tasks) {
                for (auto v : task_needs(task)) {
                    const bool restrained = v == Variant::restrained || v == Variant::total_restrained;
                    const int guard = restrained ? max_exact_restrained_order : max_exact_covering_order;
                    if (n > guard)
                        throw SizeGuardError("task " + task + ": exact " + std::string(to_string(v)) + " supports n <= " + std::to_string(guard) + ", family has n = " + std::to_string(n));
                }
                if (task == "weber" && c.family.family != Family::gnp)
                    throw ParameterError("task weber needs the gnp family");
                if (task == "extremal-global" && c.family.family != Family::alon_global)
                    throw ParameterError("task extremal-global needs the alon_global family");
                if (task.starts_with("construct:")) {
                    auto method = task.substr(10);
                    if (std::find(std::begin(construction_methods), std::end(construction_methods), method) == std::end(construction_methods))
                        throw ParameterError("unknown construction method in task '" + task + "'");
                }
            }
        }

        /// Per-sample memo of exact solutions.
        class SampleContext
        {
        public:
            explicit SampleContext(const Graph & g) :
                graph(g)
            {
            }

            auto solve(Variant v) -> std::optional<Solution>
            {
                if (auto it = _cache.find(v); it != _cache.end())
                    return it->second;
                std::optional<Solution> result;
                if (! (requires_min_degree_one(v) && isolated_vertex(graph)))
                    result = exact_value(graph, v);
                _cache.emplace(v, result);
                return result;
            }

            const Graph & graph;

        private:
            std::map<Variant, std::optional<Solution>> _cache;
        };

        inline auto verdict(bool ok) -> std::string { return ok ? "true" : "false"; }

        inline auto run_task(SampleContext & ctx, const ExperimentConfig & config, const std::string & task,
            std::uint64_t sample_seed, CsvRow & row) -> void
        {
            const auto & g = ctx.graph;
            const auto profile = degree_profile(g);
            row.method = "exact";

            if (auto v = task_exact_variant(task)) {
                if (auto s = ctx.solve(*v))
                    row.value = s->value;
                else
                    row.satisfied = "infeasible";
                return;
            }
            if (task == "beta1") {
                row.method = "blossom";
                row.value = row.beta1;
                return;
            }
            if (task == "eq-restrained" || task == "eq-trestrained") {
                const bool total = task == "eq-trestrained";
                auto base = ctx.solve(total ? Variant::total : Variant::dominating);
                auto restrained = ctx.solve(total ? Variant::total_restrained : Variant::restrained);
                if (! base || ! restrained) {
                    row.satisfied = "infeasible";
                    return;
                }
                row.value = restrained->value;
                row.rhs_bound = base->value;
                row.satisfied = verdict(restrained->value == base->value);
                return;
            }
            if (task == "lemma-restrained" || task == "lemma-trestrained") {
                const bool total = task == "lemma-trestrained";
                row.method = "witness";
                auto base = ctx.solve(total ? Variant::total : Variant::dominating);
                if (! base) {
                    row.satisfied = "infeasible";
                    return;
                }
                row.value = base->value;
                row.rhs_bound = profile.delta;
                if (profile.delta > base->value)
                    row.satisfied = verdict(check_set(g, total ? Variant::total_restrained : Variant::restrained, base->witness.set()).valid);
                return;
            }
            if (task == "weber") {
                const auto w = weber_point(g.order(), 1.0 - config.family.p);
                const int gamma = ctx.solve(Variant::dominating)->value;
                row.value = gamma;
                row.rhs_bound = w.k;
                row.satisfied = verdict(w.predicts(gamma));
                return;
            }
            if (task == "extremal-global") {
                const int f = extremal_clique_size(config.family.delta);
                std::vector<int> h(f + config.family.delta);
                std::iota(h.begin(), h.end(), 0);
                const int gamma_h = exact_value(induced_subgraph(g, h), Variant::dominating).value;
                const int global = ctx.solve(Variant::global)->value;
                row.value = global;
                row.rhs_bound = gamma_h + 1;
                row.satisfied = verdict(global == gamma_h + 1);
                return;
            }
            if (task == "audit") {
                ExactValues exact;
                for (auto v : all_variants)
                    if (auto s = ctx.solve(v))
                        exact.set(v, s->value);
                exact.gamma_complement = exact_value(complement(g), Variant::dominating).value;
                const int failed = failures(audit(g, exact));
                row.value = failed;
                row.rhs_bound = 0;
                row.satisfied = verdict(failed == 0);
                return;
            }
            // construct:<method>
            row.method = task.substr(10);
            try {
                auto outcome = construct_by_name(g, row.method, std::nullopt, sample_seed, 1);
                row.value = outcome.size_or_weight;
                row.rhs_bound = outcome.guarantee;
                const bool valid = check_certificate(g, outcome.certificate).valid;
                row.satisfied = outcome.guarantee ? verdict(valid && outcome.meets_guarantee()) : verdict(valid);
            }
            catch (const InfeasibleError &) {
                row.satisfied = "infeasible";
            }
            catch (const ParameterError &) {
                // precondition of the construction not met on this sample
                row.satisfied = "na";
            }
        }

        inline auto run_sample(const ExperimentConfig & config, int index) -> std::vector<CsvRow>
        {
            const std::uint64_t sample_seed = derive_seed(config.seed, static_cast<std::uint64_t>(index));
            const Graph g = generate(config.family, sample_seed);
            const auto profile = degree_profile(g);
            SampleContext ctx(g);

            CsvRow base;
            base.graph_id = std::string(to_string(config.family.family)) + "-" + std::to_string(index);
            base.seed = sample_seed;
            base.n = g.order();
            base.m = g.size();
            base.delta = profile.delta;
            base.Delta = profile.Delta;
            base.delta_prime = profile.delta_prime;
            base.beta1 = max_matching(g).size();

            std::vector<CsvRow> rows;
            for (const auto & task : config.tasks) {
                CsvRow row = base;
                row.task = task;
                const auto start = std::chrono::steady_clock::now();
                run_task(ctx, config, task, sample_seed, row);
                if (config.timing)
                    row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
                rows.push_back(std::move(row));
            }
            return rows;
        }

        inline auto format_number(const std::optional<double> & x) -> std::string
        {
            if (! x)
                return "";
            if (*x == std::floor(*x) && std::abs(*x) < 1e15)
                return std::to_string(static_cast<long long>(*x));
            char buffer[64];
            std::snprintf(buffer, sizeof(buffer), "%.6f", *x);
            return buffer;
        }
    }

    inline auto run_experiment(const ExperimentConfig & config) -> ExperimentResult
    {
        detail::validate(config);
        std::vector<std::vector<CsvRow>> per_sample(config.samples);
        std::vector<std::exception_ptr> errors(config.samples);
        std::atomic<int> next{0};
        auto worker = [&] {
            for (int i = next++; i < config.samples; i = next++) {
                try {
                    per_sample[i] = detail::run_sample(config, i);
                }
                catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };
        {
            std::vector<std::jthread> pool;
            for (int w = 0; w < std::min(config.workers, config.samples); ++w)
                pool.emplace_back(worker);
        }
        for (auto & e : errors)
            if (e)
                std::rethrow_exception(e);

        ExperimentResult result;
        for (auto & rows : per_sample)
            for (auto & row : rows)
                result.rows.push_back(std::move(row));

        for (const auto & task : config.tasks) {
            SummaryStats s;
            s.task = task;
            double sum = 0.0, sum_sq = 0.0;
            for (const auto & row : result.rows) {
                if (row.task != task)
                    continue;
                if (row.satisfied == "true" || row.satisfied == "false") {
                    ++s.judged;
                    s.satisfied += row.satisfied == "true";
                    if (row.satisfied == "false" && (task == "audit" || task.starts_with("construct:")))
                        ++result.violations;
                }
                if (! row.value)
                    continue;
                const double x = *row.value;
                s.min = s.count == 0 ? x : std::min(s.min, x);
                s.max = s.count == 0 ? x : std::max(s.max, x);
                ++s.count;
                sum += x;
                sum_sq += x * x;
            }
            if (s.count > 0) {
                s.mean = sum / s.count;
                if (s.count > 1) {
                    const double variance = std::max(0.0, (sum_sq - s.count * s.mean * s.mean) / (s.count - 1));
                    s.stderr_mean = std::sqrt(variance / s.count);
                }
            }
            result.summary.push_back(s);
        }
        return result;
    }

    inline constexpr const char * csv_header = "graph_id,seed,n,m,delta,Delta,delta_prime,beta1,task,method,value,rhs_bound,satisfied,elapsed_ms";

    inline auto write_csv(std::ostream & out, const std::vector<CsvRow> & rows) -> void
    {
        out << csv_header << '\n';
        for (const auto & r : rows)
            out << r.graph_id << ',' << r.seed << ',' << r.n << ',' << r.m << ',' << r.delta << ',' << r.Delta << ','
                << r.delta_prime << ',' << r.beta1 << ',' << r.task << ',' << r.method << ','
                << detail::format_number(r.value) << ',' << detail::format_number(r.rhs_bound) << ','
                << r.satisfied << ',' << detail::format_number(r.elapsed_ms) << '\n';
    }

    inline auto to_json(const SummaryStats & s) -> json
    {
        json j{{"task", s.task}, {"count", s.count}, {"mean", s.mean}, {"stderr", s.stderr_mean},
            {"min", s.min}, {"max", s.max}};
        if (auto f = s.fraction_satisfied())
            j["fraction_satisfied"] = *f;
        return j;
    }
}
