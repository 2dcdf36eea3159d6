#pragma once

#include <gdom/errors.hpp>
#include <gdom/graph.hpp>
#include <gdom/vertex_set.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gdom
{
    enum class Variant
    {
        dominating,
        total,
        global,
        restrained,
        total_restrained,
        roman
    };

    inline constexpr std::array all_variants = {Variant::dominating, Variant::total, Variant::global,
        Variant::restrained, Variant::total_restrained, Variant::roman};

    inline auto to_string(Variant v) -> std::string_view
    {
        switch (v) {
        case Variant::dominating: return "dominating";
        case Variant::total: return "total";
        case Variant::global: return "global";
        case Variant::restrained: return "restrained";
        case Variant::total_restrained: return "total_restrained";
        case Variant::roman: return "roman";
        }
        return "?";
    }

    /// The parameter name for a variant: gamma, gamma_t, gamma_g, gamma_r, gamma_tr, gamma_R.
    inline auto parameter_name(Variant v) -> std::string_view
    {
        switch (v) {
        case Variant::dominating: return "gamma";
        case Variant::total: return "gamma_t";
        case Variant::global: return "gamma_g";
        case Variant::restrained: return "gamma_r";
        case Variant::total_restrained: return "gamma_tr";
        case Variant::roman: return "gamma_R";
        }
        return "?";
    }

    /// Accepts either the variant name or the parameter name.
    inline auto parse_variant(std::string_view name) -> Variant
    {
        for (auto v : all_variants)
            if (to_string(v) == name || parameter_name(v) == name)
                return v;
        throw ParameterError("unknown variant '" + std::string(name) + "'");
    }

    inline auto requires_min_degree_one(Variant v) -> bool
    {
        return v == Variant::total || v == Variant::total_restrained;
    }

    /// f : V -> {0, 1, 2}.
    class RomanFunction
    {
    public:
        RomanFunction() = default;

        explicit RomanFunction(std::vector<std::uint8_t> assignment) :
            _assignment(std::move(assignment))
        {
            for (auto value : _assignment)
                if (value > 2)
                    throw ParameterError("Roman function values must lie in {0, 1, 2}");
        }

        /// Constant function on n vertices.
        RomanFunction(int n, std::uint8_t value) :
            RomanFunction(std::vector<std::uint8_t>(n, value))
        {
        }

        auto order() const -> int { return static_cast<int>(_assignment.size()); }
        auto operator[](int v) const -> int { return _assignment[v]; }
        auto assignment() const -> const std::vector<std::uint8_t> & { return _assignment; }

        /// D_value = { v : f(v) = value }.
        auto level_set(int value) const -> VertexSet
        {
            VertexSet result(order());
            for (int v = 0; v < order(); ++v)
                if (_assignment[v] == value)
                    result.set(v);
            return result;
        }

        friend auto operator==(const RomanFunction &, const RomanFunction &) -> bool = default;

    private:
        std::vector<std::uint8_t> _assignment;
    };

    /// f(V(G)) = |D_1| + 2|D_2|.
    inline auto weight(const RomanFunction & f) -> int
    {
        int total = 0;
        for (auto value : f.assignment())
            total += value;
        return total;
    }

    struct Certificate
    {
        Variant variant = Variant::dominating;
        std::variant<VertexSet, RomanFunction> payload;

        static auto of_set(Variant variant, VertexSet set) -> Certificate
        {
            if (variant == Variant::roman)
                throw ParameterError("roman certificates carry an assignment, not a set");
            return Certificate{variant, std::move(set)};
        }

        static auto of_roman(RomanFunction f) -> Certificate
        {
            return Certificate{Variant::roman, std::move(f)};
        }

        auto width() const -> int
        {
            return std::visit([](const auto & p) {
                if constexpr (std::is_same_v<std::decay_t<decltype(p)>, VertexSet>)
                    return p.width();
                else
                    return p.order();
            }, payload);
        }

        auto set() const -> const VertexSet & { return std::get<VertexSet>(payload); }
        auto roman() const -> const RomanFunction & { return std::get<RomanFunction>(payload); }

        /// |X| for set variants, weight for roman.
        auto value() const -> int
        {
            return variant == Variant::roman ? weight(roman()) : set().count();
        }
    };

    enum class Clause
    {
        none,
        not_dominated,                ///< vertex outside X with no neighbour in X
        not_dominated_in_complement,  ///< vertex outside X with no complement-neighbour in X
        no_outside_neighbor,          ///< vertex outside X with no neighbour outside X
        no_inside_neighbor,           ///< vertex inside X with no neighbour inside X
        roman_zero_without_two        ///< f(v) = 0 with no neighbour u having f(u) = 2
    };

    inline auto to_string(Clause c) -> std::string_view
    {
        switch (c) {
        case Clause::none: return "none";
        case Clause::not_dominated: return "not dominated";
        case Clause::not_dominated_in_complement: return "not dominated in complement";
        case Clause::no_outside_neighbor: return "no neighbour outside the set";
        case Clause::no_inside_neighbor: return "no neighbour inside the set";
        case Clause::roman_zero_without_two: return "value 0 without a neighbour of value 2";
        }
        return "?";
    }

    struct Verdict
    {
        bool valid = true;
        int witness = -1;   ///< lowest-index violating vertex when invalid
        Clause reason = Clause::none;

        static auto ok() -> Verdict { return {}; }
        static auto fail(int v, Clause c) -> Verdict { return {false, v, c}; }

        explicit operator bool() const { return valid; }
    };

    namespace detail
    {
        /// The clause v violates for a set variant, or Clause::none.
        inline auto violated_clause(const Graph & g, Variant variant, const VertexSet & x, int v) -> Clause
        {
            const auto & nv = g.neighbors(v);
            const bool inside = x.test(v);
            const int inside_neighbors = nv.count_common(x);
            const int outside_neighbors = nv.count() - inside_neighbors;
            if (! inside && inside_neighbors == 0)
                return Clause::not_dominated;
            switch (variant) {
            case Variant::global:
                // v's closed complement neighbourhood is v plus its non-neighbours
                if (! inside && inside_neighbors == x.count())
                    return Clause::not_dominated_in_complement;
                break;
            case Variant::total:
                if (inside && inside_neighbors == 0)
                    return Clause::no_inside_neighbor;
                break;
            case Variant::restrained:
                if (! inside && outside_neighbors == 0)
                    return Clause::no_outside_neighbor;
                break;
            case Variant::total_restrained:
                if (inside && inside_neighbors == 0)
                    return Clause::no_inside_neighbor;
                if (! inside && outside_neighbors == 0)
                    return Clause::no_outside_neighbor;
                break;
            default:
                break;
            }
            return Clause::none;
        }
    }

    inline auto check_certificate(const Graph & g, const Certificate & cert) -> Verdict
    {
        const int n = g.order();
        if (cert.width() != n)
            throw ParameterError("certificate width " + std::to_string(cert.width()) + " does not match graph order " + std::to_string(n));

        if (cert.variant == Variant::roman) {
            const auto & f = cert.roman();
            const auto twos = f.level_set(2);
            for (int v = 0; v < n; ++v)
                if (f[v] == 0 && ! g.neighbors(v).intersects(twos))
                    return Verdict::fail(v, Clause::roman_zero_without_two);
            return Verdict::ok();
        }

        const auto & x = cert.set();
        for (int v = 0; v < n; ++v)
            if (auto c = detail::violated_clause(g, cert.variant, x, v); c != Clause::none)
                return Verdict::fail(v, c);
        return Verdict::ok();
    }

    inline auto check_set(const Graph & g, Variant variant, const VertexSet & x) -> Verdict
    {
        return check_certificate(g, Certificate::of_set(variant, x));
    }

    /// f = 2 on s, 0 on N[s] - s, 1 elsewhere. Always a Roman dominating function, of weight 2|s| + |V - N[s]|.
    inline auto complete_roman(const Graph & g, const VertexSet & s) -> RomanFunction
    {
        const int n = g.order();
        if (s.width() != n)
            throw ParameterError("set width does not match graph order");
        const auto closed = g.closed_neighborhood(s);
        std::vector<std::uint8_t> f(n, 1);
        for (int v = 0; v < n; ++v) {
            if (s.test(v))
                f[v] = 2;
            else if (closed.test(v))
                f[v] = 0;
        }
        return RomanFunction(std::move(f));
    }
}
