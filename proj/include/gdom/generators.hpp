#pragma once

#include <gdom/errors.hpp>
#include <gdom/graph.hpp>
#include <gdom/rng.hpp>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gdom
{
    enum class Family
    {
        gnp,
        alon_global,
        roman_extremal,
        path,
        cycle,
        complete,
        disjoint_union
    };

    inline auto to_string(Family f) -> std::string_view
    {
        switch (f) {
        case Family::gnp: return "gnp";
        case Family::alon_global: return "alon_global";
        case Family::roman_extremal: return "roman_extremal";
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::disjoint_union: return "disjoint_union";
        }
        return "?";
    }

    inline auto parse_family(std::string_view name) -> Family
    {
        for (auto f : {Family::gnp, Family::alon_global, Family::roman_extremal, Family::path,
                 Family::cycle, Family::complete, Family::disjoint_union})
            if (to_string(f) == name)
                return f;
        throw ParameterError("unknown graph family '" + std::string(name) + "'");
    }

    /// Which parameters matter depends on the family: gnp uses n and p; the extremal
    /// families use delta; path, cycle, complete use n; disjoint_union uses parts (clique sizes).
    struct FamilySpec
    {
        Family family = Family::gnp;
        int n = 0;
        double p = 0.0;
        int delta = 0;
        std::vector<int> parts;
    };

    inline auto path_graph(int n) -> Graph
    {
        GraphBuilder b(n);
        for (int v = 0; v + 1 < n; ++v)
            b.add_edge(v, v + 1);
        return std::move(b).build();
    }

    inline auto cycle_graph(int n) -> Graph
    {
        if (n < 3)
            throw ParameterError("cycle needs n >= 3");
        GraphBuilder b(n);
        for (int v = 0; v < n; ++v)
            b.add_edge(v, (v + 1) % n);
        return std::move(b).build();
    }

    inline auto complete_graph(int n) -> Graph
    {
        GraphBuilder b(n);
        b.add_clique(0, n);
        return std::move(b).build();
    }

    /// K_{1,leaves} with centre 0.
    inline auto star_graph(int leaves) -> Graph
    {
        GraphBuilder b(leaves + 1);
        for (int v = 1; v <= leaves; ++v)
            b.add_edge(0, v);
        return std::move(b).build();
    }

    /// Circulant graph: v ~ v +- j (mod n) for each jump j.
    inline auto circulant_graph(int n, std::span<const int> jumps) -> Graph
    {
        GraphBuilder b(n);
        for (int v = 0; v < n; ++v)
            for (int j : jumps) {
                if (j <= 0 || 2 * j > n)
                    throw ParameterError("circulant jump out of range");
                b.add_edge(v, (v + j) % n);
            }
        return std::move(b).build();
    }

    /// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i ~ i+5.
    inline auto petersen_graph() -> Graph
    {
        GraphBuilder b(10);
        for (int i = 0; i < 5; ++i) {
            b.add_edge(i, (i + 1) % 5);
            b.add_edge(5 + i, 5 + (i + 2) % 5);
            b.add_edge(i, i + 5);
        }
        return std::move(b).build();
    }

    inline auto gnp_graph(int n, double p, Rng & rng) -> Graph
    {
        if (! (p >= 0.0 && p <= 1.0))
            throw ParameterError("gnp needs 0 <= p <= 1");
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.bernoulli(p))
                    b.add_edge(u, v);
        return std::move(b).build();
    }

    /// |F| = floor(delta ln delta) in both extremal constructions.
    inline auto extremal_clique_size(int delta) -> int
    {
        return static_cast<int>(std::floor(delta * std::log(static_cast<double>(delta))));
    }

    namespace detail
    {
        /// Clique F on 0..f-1, then delta vertices each joined to a uniform delta-subset of F.
        inline auto attach_random_subsets(GraphBuilder & b, int f, int delta, Rng & rng) -> void
        {
            b.add_clique(0, f);
            std::vector<int> pool(f);
            for (int i = 0; i < delta; ++i) {
                std::iota(pool.begin(), pool.end(), 0);
                for (int j = 0; j < delta; ++j) {
                    auto r = j + static_cast<int>(rng.below(static_cast<std::uint64_t>(f - j)));
                    std::swap(pool[j], pool[r]);
                    b.add_edge(f + i, pool[j]);
                }
            }
        }

        inline auto check_extremal_delta(int delta) -> void
        {
            if (delta < 3)
                throw ParameterError("extremal constructions need delta >= 3, got " + std::to_string(delta));
        }
    }

    /// Vertex layout: F = 0..f-1, attached vertices f..f+delta-1, then the K_{delta+1} component.
    inline auto alon_global_graph(int delta, Rng & rng) -> Graph
    {
        detail::check_extremal_delta(delta);
        const int f = extremal_clique_size(delta);
        GraphBuilder b(f + 2 * delta + 1);
        detail::attach_random_subsets(b, f, delta, rng);
        b.add_clique(f + delta, delta + 1);
        return std::move(b).build();
    }

    inline auto roman_extremal_graph(int delta, Rng & rng) -> Graph
    {
        detail::check_extremal_delta(delta);
        const int f = extremal_clique_size(delta);
        GraphBuilder b(f + delta);
        detail::attach_random_subsets(b, f, delta, rng);
        return std::move(b).build();
    }

    inline auto generate(const FamilySpec & spec, std::uint64_t seed) -> Graph
    {
        Rng rng(seed);
        auto need_n = [&](int lo) {
            if (spec.n < lo)
                throw ParameterError(std::string(to_string(spec.family)) + " needs n >= " + std::to_string(lo));
        };
        switch (spec.family) {
        case Family::gnp:
            need_n(1);
            return gnp_graph(spec.n, spec.p, rng);
        case Family::alon_global:
            return alon_global_graph(spec.delta, rng);
        case Family::roman_extremal:
            return roman_extremal_graph(spec.delta, rng);
        case Family::path:
            need_n(1);
            return path_graph(spec.n);
        case Family::cycle:
            need_n(3);
            return cycle_graph(spec.n);
        case Family::complete:
            need_n(1);
            return complete_graph(spec.n);
        case Family::disjoint_union: {
            if (spec.parts.empty())
                throw ParameterError("disjoint_union needs at least one part");
            std::optional<Graph> result;
            for (int size : spec.parts) {
                if (size < 1)
                    throw ParameterError("disjoint_union part sizes must be >= 1");
                auto part = complete_graph(size);
                result = result ? disjoint_union(*result, part) : part;
            }
            return *result;
        }
        }
        throw ParameterError("unhandled family");
    }
}
