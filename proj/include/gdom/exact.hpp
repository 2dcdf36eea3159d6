#pragma once

#include <gdom/certificates.hpp>
#include <gdom/errors.hpp>
#include <gdom/graph.hpp>
#include <gdom/vertex_set.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace gdom
{
    /// Orders beyond which the exact searches refuse to run.
    inline constexpr int max_exact_covering_order = 128;   ///< dominating, total, global, roman
    inline constexpr int max_exact_restrained_order = 40;  ///< restrained, total_restrained
    inline constexpr int max_brute_force_order = 24;
    inline constexpr int max_roman_assignment_order = 12;

    struct Solution
    {
        Variant variant = Variant::dominating;
        int value = 0;
        Certificate witness;
    };

    inline auto isolated_vertex(const Graph & g) -> std::optional<int>
    {
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) == 0)
                return v;
        return std::nullopt;
    }

    inline auto require_feasible(const Graph & g, Variant variant) -> void
    {
        if (requires_min_degree_one(variant))
            if (auto v = isolated_vertex(g))
                throw InfeasibleError(*v, std::string(to_string(variant)) + " domination needs minimum degree >= 1");
    }

    namespace detail
    {
        /// Fewest candidates whose coverage could reach `needed`, given their individual gains.
        /// Returns INT_MAX when even all of them fall short.
        inline auto cover_count_bound(std::vector<int> & gains, int needed) -> int
        {
            if (needed <= 0)
                return 0;
            std::sort(gains.begin(), gains.end(), std::greater<>());
            int sum = 0;
            for (std::size_t i = 0; i < gains.size(); ++i) {
                sum += gains[i];
                if (sum >= needed)
                    return static_cast<int>(i) + 1;
            }
            return std::numeric_limits<int>::max();
        }

        /**
         * Minimum set cover by branch and bound. Elements 0..m-1, candidates 0..k-1 with
         * covers[c] over elements and candidates_of[e] over candidates. Branches on the
         * uncovered element with the fewest remaining candidates (lowest index on ties),
         * trying its candidates in index order; a candidate tried earlier in a branch list
         * is excluded from its later siblings, so every cover is reached once.
         */
        class CoverSearch
        {
        public:
            CoverSearch(std::vector<VertexSet> covers, std::vector<VertexSet> candidates_of) :
                _covers(std::move(covers)),
                _candidates_of(std::move(candidates_of))
            {
            }

            /// `incumbent` must be a cover; it is returned if nothing smaller exists.
            auto solve(VertexSet incumbent) -> VertexSet
            {
                _best = std::move(incumbent);
                const int elements = static_cast<int>(_candidates_of.size());
                const int candidates = static_cast<int>(_covers.size());
                VertexSet chosen(candidates), excluded(candidates);
                VertexSet uncovered = VertexSet::full(elements);
                search(chosen, uncovered, excluded);
                return _best;
            }

        private:
            auto lower_bound(const VertexSet & uncovered, const VertexSet & excluded) const -> int
            {
                std::vector<int> gains;
                gains.reserve(_covers.size());
                for (int c = 0; c < static_cast<int>(_covers.size()); ++c)
                    if (! excluded.test(c))
                        if (int gain = _covers[c].count_common(uncovered); gain > 0)
                            gains.push_back(gain);
                return cover_count_bound(gains, uncovered.count());
            }

            auto search(VertexSet & chosen, const VertexSet & uncovered, const VertexSet & excluded) -> void
            {
                const int size = chosen.count();
                if (uncovered.none()) {
                    if (size < _best.count())
                        _best = chosen;
                    return;
                }
                const int bound = lower_bound(uncovered, excluded);
                if (bound == std::numeric_limits<int>::max() || size + bound >= _best.count())
                    return;

                int branch_element = -1, fewest = std::numeric_limits<int>::max();
                uncovered.for_each([&](int e) {
                    int options = (_candidates_of[e] - excluded).count();
                    if (options < fewest) {
                        fewest = options;
                        branch_element = e;
                    }
                });
                if (fewest == 0)
                    return;

                VertexSet local_excluded = excluded;
                (_candidates_of[branch_element] - excluded).for_each([&](int c) {
                    chosen.set(c);
                    search(chosen, uncovered - _covers[c], local_excluded);
                    chosen.reset(c);
                    local_excluded.set(c);
                });
            }

            std::vector<VertexSet> _covers;
            std::vector<VertexSet> _candidates_of;
            VertexSet _best;
        };

        inline auto greedy_cover(const std::vector<VertexSet> & covers, int elements) -> std::optional<VertexSet>
        {
            VertexSet uncovered = VertexSet::full(elements);
            VertexSet chosen(static_cast<int>(covers.size()));
            while (uncovered.any()) {
                int best = -1, best_gain = 0;
                for (int c = 0; c < static_cast<int>(covers.size()); ++c)
                    if (int gain = covers[c].count_common(uncovered); gain > best_gain) {
                        best_gain = gain;
                        best = c;
                    }
                if (best < 0)
                    return std::nullopt;
                chosen.set(best);
                uncovered -= covers[best];
            }
            return chosen;
        }

        /// Coverage structure for the three covering variants. Global uses 2n elements:
        /// v covers element u when u is in N[v], and element n+u when u is in the closed complement neighbourhood.
        inline auto covering_problem(const Graph & g, Variant variant) -> std::vector<VertexSet>
        {
            const int n = g.order();
            std::vector<VertexSet> covers;
            covers.reserve(n);
            for (int v = 0; v < n; ++v) {
                if (variant == Variant::dominating)
                    covers.push_back(g.closed_neighbors(v));
                else if (variant == Variant::total)
                    covers.push_back(g.neighbors(v));
                else {
                    VertexSet joint(2 * n);
                    const auto closed = g.closed_neighbors(v);
                    for (int u = 0; u < n; ++u) {
                        if (closed.test(u))
                            joint.set(u);
                        if (u == v || ! closed.test(u))
                            joint.set(n + u);
                    }
                    covers.push_back(std::move(joint));
                }
            }
            return covers;
        }

        inline auto transpose(const std::vector<VertexSet> & covers, int elements) -> std::vector<VertexSet>
        {
            const int candidates = static_cast<int>(covers.size());
            std::vector<VertexSet> result(elements, VertexSet(candidates));
            for (int c = 0; c < candidates; ++c)
                covers[c].for_each([&](int e) { result[e].set(c); });
            return result;
        }

        inline auto solve_covering(const Graph & g, Variant variant) -> VertexSet
        {
            const int n = g.order();
            auto covers = covering_problem(g, variant);
            const int elements = variant == Variant::global ? 2 * n : n;
            auto incumbent = greedy_cover(covers, elements).value_or(VertexSet::full(n));
            CoverSearch search(covers, transpose(covers, elements));
            return search.solve(std::move(incumbent));
        }

        /**
         * Minimum of 2|S| + |V - N[S]| over S. Each unresolved vertex is either covered by a
         * 2-vertex in its closed neighbourhood or takes value 1 itself (with no 2-vertex around).
         */
        class RomanSearch
        {
        public:
            explicit RomanSearch(const Graph & g) :
                _g(g),
                _closed(g.order())
            {
                for (int v = 0; v < g.order(); ++v)
                    _closed[v] = g.closed_neighbors(v);
            }

            auto solve(VertexSet incumbent) -> VertexSet
            {
                const int n = _g.order();
                _best = std::move(incumbent);
                _best_weight = weight_of(_best);
                VertexSet twos(n), excluded(n);
                search(twos, VertexSet::full(n), excluded, 0);
                return _best;
            }

            auto weight_of(const VertexSet & twos) const -> int
            {
                return 2 * twos.count() + (_g.order() - _g.closed_neighborhood(twos).count());
            }

        private:
            /// min over a of 2a + (needed - top-a gains), the cheapest conceivable completion.
            auto lower_bound(const VertexSet & unresolved, const VertexSet & excluded) const -> int
            {
                std::vector<int> gains;
                for (int c = 0; c < _g.order(); ++c)
                    if (! excluded.test(c))
                        if (int gain = _closed[c].count_common(unresolved); gain > 2)
                            gains.push_back(gain);
                std::sort(gains.begin(), gains.end(), std::greater<>());
                int remaining = unresolved.count();
                int best = remaining, spent = 0;
                for (int gain : gains) {
                    spent += 2;
                    remaining = std::max(0, remaining - gain);
                    best = std::min(best, spent + remaining);
                    if (remaining == 0)
                        break;
                }
                return best;
            }

            auto search(VertexSet & twos, const VertexSet & unresolved, const VertexSet & excluded, int cost) -> void
            {
                if (unresolved.none()) {
                    int w = weight_of(twos);
                    if (w < _best_weight) {
                        _best_weight = w;
                        _best = twos;
                    }
                    return;
                }
                if (cost + lower_bound(unresolved, excluded) >= _best_weight)
                    return;

                int branch_vertex = -1, fewest = std::numeric_limits<int>::max();
                unresolved.for_each([&](int v) {
                    int options = (_closed[v] - excluded).count();
                    if (options < fewest) {
                        fewest = options;
                        branch_vertex = v;
                    }
                });

                VertexSet local_excluded = excluded;
                (_closed[branch_vertex] - excluded).for_each([&](int c) {
                    twos.set(c);
                    search(twos, unresolved - _closed[c], local_excluded, cost + 2);
                    twos.reset(c);
                    local_excluded.set(c);
                });
                // no 2-vertex in N[v]: v takes value 1
                VertexSet rest = unresolved;
                rest.reset(branch_vertex);
                search(twos, rest, local_excluded, cost + 1);
            }

            const Graph & _g;
            std::vector<VertexSet> _closed;
            VertexSet _best;
            int _best_weight = 0;
        };

        /**
         * In/out search for the restrained variants, which are not monotone under adding
         * vertices. Vertices are decided in index order, "out" first; a vertex is rejected
         * as soon as its clause can no longer be met by its undecided neighbours.
         */
        class RestrainedSearch
        {
        public:
            RestrainedSearch(const Graph & g, bool total) :
                _g(g),
                _total(total),
                _status(g.order(), undecided),
                _in_neighbors(g.order(), 0),
                _out_neighbors(g.order(), 0),
                _undecided_neighbors(g.order(), 0)
            {
                for (int v = 0; v < g.order(); ++v)
                    _undecided_neighbors[v] = g.degree(v);
            }

            auto solve(VertexSet incumbent) -> VertexSet
            {
                _best = std::move(incumbent);
                _chosen = VertexSet(_g.order());
                search(0);
                return _best;
            }

        private:
            static constexpr int undecided = -1, out = 0, in = 1;

            auto assign(int v, int status) -> void
            {
                _status[v] = status;
                if (status == in)
                    _chosen.set(v);
                _g.neighbors(v).for_each([&](int u) {
                    --_undecided_neighbors[u];
                    ++(status == in ? _in_neighbors[u] : _out_neighbors[u]);
                });
            }

            auto unassign(int v) -> void
            {
                const int status = _status[v];
                _g.neighbors(v).for_each([&](int u) {
                    ++_undecided_neighbors[u];
                    --(status == in ? _in_neighbors[u] : _out_neighbors[u]);
                });
                _chosen.reset(v);
                _status[v] = undecided;
            }

            auto satisfiable(int w) const -> bool
            {
                const int maybe_in = _in_neighbors[w] + _undecided_neighbors[w];
                const int maybe_out = _out_neighbors[w] + _undecided_neighbors[w];
                switch (_status[w]) {
                case out:
                    return maybe_in > 0 && maybe_out > 0;
                case in:
                    return ! _total || maybe_in > 0;
                default:
                    return true;
                }
            }

            auto consistent_around(int v) const -> bool
            {
                if (! satisfiable(v))
                    return false;
                bool ok = true;
                _g.neighbors(v).for_each([&](int u) { ok = ok && satisfiable(u); });
                return ok;
            }

            auto lower_bound(int next) const -> int
            {
                const int n = _g.order();
                VertexSet undominated(n);
                for (int v = 0; v < n; ++v)
                    if (_status[v] != in && _in_neighbors[v] == 0)
                        undominated.set(v);
                std::vector<int> gains;
                for (int c = next; c < n; ++c)
                    if (int gain = _g.closed_neighbors(c).count_common(undominated); gain > 0)
                        gains.push_back(gain);
                return cover_count_bound(gains, undominated.count());
            }

            auto search(int next) -> void
            {
                const int n = _g.order();
                const int size = _chosen.count();
                if (next == n) {
                    if (size < _best.count())
                        _best = _chosen;
                    return;
                }
                const int bound = lower_bound(next);
                if (bound == std::numeric_limits<int>::max() || size + bound >= _best.count())
                    return;
                for (int status : {out, in}) {
                    assign(next, status);
                    if (consistent_around(next))
                        search(next + 1);
                    unassign(next);
                }
            }

            const Graph & _g;
            bool _total;
            std::vector<int> _status;
            std::vector<int> _in_neighbors, _out_neighbors, _undecided_neighbors;
            VertexSet _chosen, _best;
        };
    }

    /// Optimal value and witness for one variant, by branch and bound.
    inline auto exact_value(const Graph & g, Variant variant) -> Solution
    {
        const int n = g.order();
        require_feasible(g, variant);

        const bool restrained = variant == Variant::restrained || variant == Variant::total_restrained;
        const int guard = restrained ? max_exact_restrained_order : max_exact_covering_order;
        if (n > guard)
            throw SizeGuardError("exact " + std::string(to_string(variant)) + " supports n <= " + std::to_string(guard) + ", got " + std::to_string(n));

        switch (variant) {
        case Variant::dominating:
        case Variant::total:
        case Variant::global: {
            auto set = detail::solve_covering(g, variant);
            return {variant, set.count(), Certificate::of_set(variant, std::move(set))};
        }
        case Variant::roman: {
            detail::RomanSearch search(g);
            auto greedy = detail::solve_covering(g, Variant::dominating);
            auto incumbent = search.weight_of(greedy) <= n ? greedy : VertexSet(n);
            auto twos = search.solve(std::move(incumbent));
            auto f = complete_roman(g, twos);
            return {variant, weight(f), Certificate::of_roman(std::move(f))};
        }
        case Variant::restrained:
        case Variant::total_restrained: {
            const bool total = variant == Variant::total_restrained;
            VertexSet incumbent = VertexSet::full(n);
            auto base = detail::solve_covering(g, total ? Variant::total : Variant::dominating);
            if (check_set(g, variant, base) && base.count() < incumbent.count())
                incumbent = base;
            detail::RestrainedSearch search(g, total);
            auto set = search.solve(std::move(incumbent));
            return {variant, set.count(), Certificate::of_set(variant, std::move(set))};
        }
        }
        throw ParameterError("unhandled variant");
    }

    namespace detail
    {
        using Mask = std::uint32_t;

        inline auto closed_masks(const Graph & g) -> std::vector<Mask>
        {
            std::vector<Mask> result(g.order(), 0);
            for (int v = 0; v < g.order(); ++v) {
                result[v] = Mask{1} << v;
                g.neighbors(v).for_each([&](int u) { result[v] |= Mask{1} << u; });
            }
            return result;
        }

        /// Literal reading of each definition over bit masks.
        inline auto mask_satisfies(const std::vector<Mask> & closed, Variant variant, Mask x) -> bool
        {
            const int n = static_cast<int>(closed.size());
            const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
            const Mask outside = all & ~x;
            for (int v = 0; v < n; ++v) {
                const Mask self = Mask{1} << v;
                const Mask open = closed[v] & ~self;
                const bool inside = x & self;
                if (! inside && ! (open & x))
                    return false;
                if (variant == Variant::global && ! inside && ! ((all & ~closed[v]) & x))
                    return false;
                if ((variant == Variant::total || variant == Variant::total_restrained) && inside && ! (open & x))
                    return false;
                if ((variant == Variant::restrained || variant == Variant::total_restrained) && ! inside && ! (open & outside))
                    return false;
            }
            return true;
        }

        inline auto mask_to_set(int n, Mask m) -> VertexSet
        {
            VertexSet s(n);
            for (int v = 0; v < n; ++v)
                if (m & (Mask{1} << v))
                    s.set(v);
            return s;
        }
    }

    /**
     * Reference oracle: subsets in increasing cardinality (Gosper order within a size),
     * first feasible wins. Roman minimises 2|S| + |V - N[S]| over all S.
     */
    inline auto brute_force_value(const Graph & g, Variant variant) -> Solution
    {
        using detail::Mask;
        const int n = g.order();
        if (n > max_brute_force_order)
            throw SizeGuardError("brute force supports n <= " + std::to_string(max_brute_force_order));
        require_feasible(g, variant);
        const auto closed = detail::closed_masks(g);
        const Mask all = (Mask{1} << n) - 1;

        if (variant == Variant::roman) {
            int best = n + 1;
            Mask best_set = 0;
            for (Mask s = 0;; ++s) {
                Mask covered = 0;
                for (int v = 0; v < n; ++v)
                    if (s & (Mask{1} << v))
                        covered |= closed[v];
                int w = 2 * std::popcount(s) + (n - std::popcount(covered));
                if (w < best) {
                    best = w;
                    best_set = s;
                }
                if (s == all)
                    break;
            }
            auto f = complete_roman(g, detail::mask_to_set(n, best_set));
            return {variant, best, Certificate::of_roman(std::move(f))};
        }

        for (int k = 0; k <= n; ++k) {
            Mask x = k == 0 ? 0 : (Mask{1} << k) - 1;
            while (true) {
                if (detail::mask_satisfies(closed, variant, x))
                    return {variant, k, Certificate::of_set(variant, detail::mask_to_set(n, x))};
                if (k == 0 || k == n)
                    break;
                // Gosper's hack: next mask with the same popcount
                const Mask low = x & -x;
                const Mask ripple = x + low;
                x = (((ripple ^ x) >> 2) / low) | ripple;
                if (x > all)
                    break;
            }
        }
        throw InfeasibleError(-1, "no certificate found");
    }

    /// Minimum weight over all 3^n assignments satisfying the Roman condition.
    inline auto brute_force_roman_assignments(const Graph & g) -> Solution
    {
        const int n = g.order();
        if (n > max_roman_assignment_order)
            throw SizeGuardError("assignment enumeration supports n <= " + std::to_string(max_roman_assignment_order));
        std::vector<std::uint8_t> f(n, 0), best;
        int best_weight = std::numeric_limits<int>::max();
        while (true) {
            int w = 0;
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) {
                w += f[v];
                if (f[v] == 0) {
                    bool has_two = false;
                    g.neighbors(v).for_each([&](int u) { has_two = has_two || f[u] == 2; });
                    ok = has_two;
                }
            }
            if (ok && w < best_weight) {
                best_weight = w;
                best = f;
            }
            int i = 0;
            while (i < n && f[i] == 2)
                f[i++] = 0;
            if (i == n)
                break;
            ++f[i];
        }
        return {Variant::roman, best_weight, Certificate::of_roman(RomanFunction(std::move(best)))};
    }
}
