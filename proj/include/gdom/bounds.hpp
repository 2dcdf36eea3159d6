#pragma once

#include <gdom/certificates.hpp>
#include <gdom/errors.hpp>
#include <gdom/exact.hpp>
#include <gdom/formulas.hpp>
#include <gdom/graph.hpp>
#include <gdom/matching.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gdom
{
    /// Structural parameters every bound is evaluated from.
    struct BoundParams
    {
        int n = 0;
        int delta = 0, Delta = 0, delta_bar = 0, Delta_bar = 0, delta_prime = 0;
        std::optional<int> beta1;
        bool connected = true;
        bool complement_connected = true;

        auto has_perfect_matching() const -> std::optional<bool>
        {
            if (! beta1)
                return std::nullopt;
            return *beta1 == n / 2;
        }
    };

    inline auto bound_params(const Graph & g) -> BoundParams
    {
        const auto profile = degree_profile(g);
        BoundParams p;
        p.n = g.order();
        p.delta = profile.delta;
        p.Delta = profile.Delta;
        p.delta_bar = profile.delta_bar;
        p.Delta_bar = profile.Delta_bar;
        p.delta_prime = profile.delta_prime;
        p.beta1 = max_matching(g).size();
        p.connected = is_connected(g);
        p.complement_connected = is_connected(complement(g));
        return p;
    }

    enum class BoundKind
    {
        upper,          ///< parameter <= rhs
        lower,          ///< parameter >= rhs
        sandwich,       ///< gamma <= gamma_R <= 2 gamma
        equality,       ///< gamma_g = max{gamma, gamma(complement)}
        disjunction,    ///< gamma_g = max{gamma, gamma(complement)} or gamma_g <= rhs
        informational   ///< existence statement, not checkable on a single graph
    };

    enum class Severity
    {
        failure,
        warning
    };

    struct BoundReport
    {
        std::string bound_id;
        Variant parameter = Variant::dominating;
        BoundKind kind = BoundKind::upper;
        bool applicable = false;
        std::string reason;             ///< failed precondition when not applicable
        std::optional<double> rhs;
        std::string descriptor;         ///< human-readable statement of the bound
        Severity severity = Severity::failure;
    };

    inline constexpr std::array<std::string_view, 22> checkable_bound_ids = {"thm1-dom", "thm3-global-eq",
        "thm4-global-disj", "thm5-global", "thm6-roman-sandwich", "thm7-roman-lb", "thm8-restrained",
        "thm9-trestrained", "thm-main1-global", "cor2-global", "thm-main-roman", "cor1-roman",
        "prop2-restrained", "prop2-trestrained", "thm-beta-restrained", "thm-beta-trestrained",
        "cor-pm-restrained", "cor-pm-trestrained", "ore", "mccuaig", "reed", "weber-k"};

    inline constexpr std::array<std::string_view, 2> informational_bound_ids = {"thm2-dom-tight", "alon-hypergraph"};

    inline auto evaluate_bound(const BoundParams & p, std::string_view id) -> BoundReport
    {
        BoundReport r;
        r.bound_id = std::string(id);
        r.applicable = true;
        const int n = p.n;
        auto require = [&](bool condition, const char * why) {
            if (r.applicable && ! condition) {
                r.applicable = false;
                r.reason = why;
            }
        };
        auto need_beta = [&] {
            if (! p.beta1)
                throw ParameterError("bound " + std::string(id) + " needs the matching number");
        };

        if (id == "thm1-dom") {
            r.descriptor = "gamma <= (ln(delta+1)+1)/(delta+1) n";
            r.rhs = formulas::domination_upper(n, p.delta);
        }
        else if (id == "thm3-global-eq") {
            r.parameter = Variant::global;
            r.kind = BoundKind::equality;
            r.descriptor = "G or its complement disconnected => gamma_g = max{gamma, gamma(complement)}";
            require(! p.connected || ! p.complement_connected, "G and its complement are both connected");
        }
        else if (id == "thm4-global-disj") {
            r.parameter = Variant::global;
            r.kind = BoundKind::disjunction;
            r.descriptor = "gamma_g = max{gamma, gamma(complement)} or gamma_g <= min{Delta, Delta_bar} + 1";
            r.rhs = std::min(p.Delta, p.Delta_bar) + 1.0;
        }
        else if (id == "thm5-global") {
            r.parameter = Variant::global;
            if (p.delta == p.delta_bar && p.delta <= 2) {
                r.descriptor = "delta = delta_bar <= 2 => gamma_g <= delta + 2";
                r.rhs = p.delta + 2.0;
            }
            else {
                r.descriptor = "gamma_g <= max{delta, delta_bar} + 1";
                r.rhs = std::max(p.delta, p.delta_bar) + 1.0;
            }
        }
        else if (id == "thm6-roman-sandwich") {
            r.parameter = Variant::roman;
            r.kind = BoundKind::sandwich;
            r.descriptor = "gamma <= gamma_R <= 2 gamma";
        }
        else if (id == "thm7-roman-lb") {
            r.parameter = Variant::roman;
            r.kind = BoundKind::lower;
            r.descriptor = "Delta >= 1 => gamma_R >= 2n/(Delta+1)";
            // edgeless graphs have gamma_R = n < 2n
            require(p.Delta >= 1, "needs Delta >= 1");
            r.rhs = 2.0 * n / (p.Delta + 1.0);
        }
        else if (id == "thm8-restrained") {
            r.parameter = Variant::restrained;
            r.descriptor = "delta >= 2 => gamma_r <= n - Delta";
            require(p.delta >= 2, "needs delta >= 2");
            r.rhs = static_cast<double>(n - p.Delta);
        }
        else if (id == "thm9-trestrained") {
            r.parameter = Variant::total_restrained;
            r.descriptor = "connected, n >= 4, delta >= 2, Delta <= n-2 => gamma_tr <= n - Delta/2 - 1";
            require(p.connected, "needs a connected graph");
            require(n >= 4, "needs n >= 4");
            require(p.delta >= 2, "needs delta >= 2");
            require(p.Delta <= n - 2, "needs Delta <= n - 2");
            r.rhs = n - p.Delta / 2.0 - 1.0;
        }
        else if (id == "thm-main1-global") {
            r.parameter = Variant::global;
            r.descriptor = "gamma_g <= (1 - d'/(2^{1/d'} (1+d')^{1+1/d'})) n";
            require(p.delta_prime > 0, "needs min(delta, delta_bar) > 0");
            if (r.applicable)
                r.rhs = formulas::global_upper(n, p.delta_prime);
        }
        else if (id == "cor2-global") {
            r.parameter = Variant::global;
            r.descriptor = "gamma_g <= (ln(d'+1) + ln 2 + 1)/(d'+1) n";
            r.rhs = formulas::global_upper_relaxed(n, p.delta_prime);
        }
        else if (id == "thm-main-roman") {
            r.parameter = Variant::roman;
            r.descriptor = "gamma_R <= 2(1 - 2^{1/delta} delta/(1+delta)^{1+1/delta}) n";
            require(p.delta > 0, "needs delta > 0");
            if (r.applicable)
                r.rhs = formulas::roman_upper(n, p.delta);
        }
        else if (id == "cor1-roman") {
            r.parameter = Variant::roman;
            r.descriptor = "gamma_R <= (2 ln(delta+1) - ln 4 + 2)/(delta+1) n";
            require(p.delta > 0, "needs delta > 0");
            if (r.applicable)
                r.rhs = formulas::roman_upper_relaxed(n, p.delta);
        }
        else if (id == "prop2-restrained" || id == "prop2-trestrained") {
            const bool total = id == "prop2-trestrained";
            r.parameter = total ? Variant::total_restrained : Variant::restrained;
            r.descriptor = total ? "delta > 0, n < delta^2/(ln delta + 1) => gamma_tr <= (ln delta + 1)/delta n"
                                 : "delta > 0, n < delta^2/(ln delta + 1) => gamma_r <= (ln(delta+1)+1)/(delta+1) n";
            require(p.delta > 0, "needs delta > 0");
            require(formulas::small_order_condition(n, p.delta), "needs n < delta^2/(ln delta + 1)");
            if (r.applicable)
                r.rhs = total ? formulas::total_upper(n, p.delta) : formulas::domination_upper(n, p.delta);
        }
        else if (id == "thm-beta-restrained" || id == "thm-beta-trestrained") {
            const bool total = id == "thm-beta-trestrained";
            need_beta();
            r.parameter = total ? Variant::total_restrained : Variant::restrained;
            r.descriptor = total ? "gamma_tr <= (2 ln delta + delta + 2)/delta n - 2 beta_1"
                                 : "gamma_r <= (2 ln(delta+1) + delta + 3)/(delta+1) n - 2 beta_1";
            require(p.delta > 0, "needs delta > 0");
            if (r.applicable)
                r.rhs = total ? formulas::total_restrained_matching_upper(n, p.delta, *p.beta1)
                              : formulas::restrained_matching_upper(n, p.delta, *p.beta1);
        }
        else if (id == "cor-pm-restrained" || id == "cor-pm-trestrained") {
            const bool total = id == "cor-pm-trestrained";
            need_beta();
            r.parameter = total ? Variant::total_restrained : Variant::restrained;
            r.descriptor = total ? "perfect matching => gamma_tr <= 2n (ln delta + 1)/delta + eps"
                                 : "perfect matching => gamma_r <= 2n (ln(delta+1)+1)/(delta+1) + eps";
            require(p.delta > 0, "needs delta > 0");
            require(*p.has_perfect_matching(), "needs a perfect matching");
            if (r.applicable)
                r.rhs = total ? formulas::total_restrained_perfect_matching_upper(n, p.delta)
                              : formulas::restrained_perfect_matching_upper(n, p.delta);
        }
        else if (id == "ore") {
            r.descriptor = "delta >= 1 => gamma <= n/2";
            require(p.delta >= 1, "needs delta >= 1");
            r.rhs = n / 2.0;
        }
        else if (id == "mccuaig") {
            r.descriptor = "connected, delta >= 2, not one of seven exceptional graphs => gamma <= 2n/5";
            r.severity = Severity::warning;
            require(p.connected, "needs a connected graph");
            require(p.delta >= 2, "needs delta >= 2");
            r.rhs = 2.0 * n / 5.0;
        }
        else if (id == "reed") {
            r.descriptor = "connected, delta >= 3 => gamma <= 3n/8";
            require(p.connected, "needs a connected graph");
            require(p.delta >= 3, "needs delta >= 3");
            r.rhs = 3.0 * n / 8.0;
        }
        else if (id == "weber-k") {
            r.kind = BoundKind::informational;
            r.descriptor = "random G(n,p): gamma in {k+1, k+2} with k = floor(log n - 2 log log n + log log e), base 1/q";
            require(false, "asymptotic statement about random graphs; see weber_point");
        }
        else if (id == "thm2-dom-tight") {
            r.kind = BoundKind::informational;
            r.descriptor = "some large graphs have gamma >= (ln(delta+1)+1)/(delta+1) n (1+o(1))";
            require(false, "existence statement, not checkable");
        }
        else if (id == "alon-hypergraph") {
            r.kind = BoundKind::informational;
            r.descriptor = "k-uniform hypergraphs: tau <= (ln k/k)(n+m)";
            require(false, "hypergraph statement, not checkable on graphs");
        }
        else
            throw ParameterError("unknown bound id '" + std::string(id) + "'");
        if (! r.applicable)
            r.rhs.reset();
        return r;
    }

    inline auto evaluate_all_bounds(const BoundParams & p) -> std::vector<BoundReport>
    {
        std::vector<BoundReport> result;
        for (auto id : checkable_bound_ids)
            result.push_back(evaluate_bound(p, id));
        for (auto id : informational_bound_ids)
            result.push_back(evaluate_bound(p, id));
        return result;
    }

    /// Exact parameter values; absent entries are either infeasible or not computed.
    struct ExactValues
    {
        std::optional<int> gamma, gamma_t, gamma_g, gamma_r, gamma_tr, gamma_R;
        std::optional<int> gamma_complement;

        auto get(Variant v) const -> const std::optional<int> &
        {
            return const_cast<ExactValues &>(*this).slot(v);
        }

        auto set(Variant v, int value) -> void { slot(v) = value; }

    private:
        auto slot(Variant v) -> std::optional<int> &
        {
            switch (v) {
            case Variant::dominating: return gamma;
            case Variant::total: return gamma_t;
            case Variant::global: return gamma_g;
            case Variant::restrained: return gamma_r;
            case Variant::total_restrained: return gamma_tr;
            case Variant::roman: return gamma_R;
            }
            return gamma;
        }
    };

    /// All six parameters (skipping infeasible total variants) plus gamma of the complement.
    inline auto compute_exact_values(const Graph & g) -> ExactValues
    {
        ExactValues values;
        for (auto v : all_variants) {
            if (requires_min_degree_one(v) && isolated_vertex(g))
                continue;
            values.set(v, exact_value(g, v).value);
        }
        values.gamma_complement = exact_value(complement(g), Variant::dominating).value;
        return values;
    }

    struct Violation
    {
        std::string bound_id;
        double lhs = 0.0;
        double rhs = 0.0;
        Severity severity = Severity::failure;
        std::string message;
    };

    /**
     * Checks every applicable bound against the supplied exact values. Returns the
     * violations; mccuaig violations come back with warning severity.
     */
    inline auto audit(const Graph & g, const ExactValues & exact) -> std::vector<Violation>
    {
        const auto params = bound_params(g);
        std::vector<Violation> violations;
        auto need = [&](const std::optional<int> & value, std::string_view name) -> double {
            if (! value)
                throw ParameterError("audit needs exact value " + std::string(name));
            return *value;
        };
        auto flag = [&](const BoundReport & r, double lhs, double rhs, std::string message) {
            violations.push_back({r.bound_id, lhs, rhs, r.severity, std::move(message)});
        };

        for (auto id : checkable_bound_ids) {
            const auto r = evaluate_bound(params, id);
            if (! r.applicable || r.kind == BoundKind::informational)
                continue;
            const auto & value = exact.get(r.parameter);
            switch (r.kind) {
            case BoundKind::upper: {
                const double lhs = need(value, parameter_name(r.parameter));
                if (lhs > *r.rhs + formulas::slack)
                    flag(r, lhs, *r.rhs, std::string(parameter_name(r.parameter)) + " exceeds upper bound");
                break;
            }
            case BoundKind::lower: {
                const double lhs = need(value, parameter_name(r.parameter));
                if (lhs < *r.rhs - formulas::slack)
                    flag(r, lhs, *r.rhs, std::string(parameter_name(r.parameter)) + " below lower bound");
                break;
            }
            case BoundKind::sandwich: {
                const double gamma = need(exact.gamma, "gamma");
                const double roman = need(exact.gamma_R, "gamma_R");
                if (roman < gamma)
                    flag(r, roman, gamma, "gamma_R < gamma");
                if (roman > 2 * gamma)
                    flag(r, roman, 2 * gamma, "gamma_R > 2 gamma");
                break;
            }
            case BoundKind::equality:
            case BoundKind::disjunction: {
                const double global = need(exact.gamma_g, "gamma_g");
                const double larger = std::max(need(exact.gamma, "gamma"), need(exact.gamma_complement, "gamma(complement)"));
                const bool equal = global == larger;
                if (r.kind == BoundKind::equality && ! equal)
                    flag(r, global, larger, "gamma_g differs from max{gamma, gamma(complement)}");
                if (r.kind == BoundKind::disjunction && ! equal && global > *r.rhs + formulas::slack)
                    flag(r, global, *r.rhs, "neither branch of the disjunction holds");
                break;
            }
            case BoundKind::informational:
                break;
            }
        }
        return violations;
    }

    inline auto failures(const std::vector<Violation> & violations) -> int
    {
        return static_cast<int>(std::count_if(violations.begin(), violations.end(),
            [](const Violation & v) { return v.severity == Severity::failure; }));
    }

    struct WeberPoint
    {
        int n = 0;
        double q = 0.0;
        int k = 0;
        std::array<int, 2> predicted{};  ///< {k+1, k+2}

        auto predicts(int gamma) const -> bool { return gamma == predicted[0] || gamma == predicted[1]; }
    };

    /// k = floor(log n - 2 log log n + log log e), logarithms to base 1/q.
    inline auto weber_point(int n, double q) -> WeberPoint
    {
        if (n < 4)
            throw ParameterError("weber_point needs n >= 4");
        if (! (q > 0.0 && q < 1.0))
            throw ParameterError("weber_point needs 0 < q < 1");
        const double base = std::log(1.0 / q);
        auto lg = [&](double x) { return std::log(x) / base; };
        const double value = lg(n) - 2.0 * lg(lg(n)) + lg(lg(std::exp(1.0)));
        WeberPoint w;
        w.n = n;
        w.q = q;
        w.k = static_cast<int>(std::floor(value));
        w.predicted = {w.k + 1, w.k + 2};
        return w;
    }
}
