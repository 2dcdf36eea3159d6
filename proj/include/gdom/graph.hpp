#pragma once

#include <gdom/errors.hpp>
#include <gdom/vertex_set.hpp>

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gdom
{
    using Edge = std::pair<int, int>;

    /**
     * Simple undirected graph on vertices 0..n-1, stored as one adjacency bit set per
     * vertex. Immutable once built; use GraphBuilder or Graph::from_edges.
     */
    class Graph
    {
    public:
        static auto from_edges(int n, std::span<const Edge> edges) -> Graph;

        /// Edgeless graph on n vertices.
        explicit Graph(int n) :
            _adjacency(check_order(n), VertexSet(n))
        {
        }

        auto order() const -> int { return static_cast<int>(_adjacency.size()); }

        auto size() const -> int
        {
            int total = 0;
            for (const auto & row : _adjacency)
                total += row.count();
            return total / 2;
        }

        auto neighbors(int v) const -> const VertexSet & { return _adjacency[v]; }

        auto closed_neighbors(int v) const -> VertexSet
        {
            VertexSet result = _adjacency[v];
            result.set(v);
            return result;
        }

        auto adjacent(int u, int v) const -> bool { return _adjacency[u].test(v); }
        auto degree(int v) const -> int { return _adjacency[v].count(); }

        /// N[X], the union of closed neighbourhoods.
        auto closed_neighborhood(const VertexSet & set) const -> VertexSet
        {
            VertexSet result = set;
            set.for_each([&](int v) { result |= _adjacency[v]; });
            return result;
        }

        /// Edges as (u, v) with u < v, lexicographically sorted.
        auto edges() const -> std::vector<Edge>
        {
            std::vector<Edge> result;
            for (int u = 0; u < order(); ++u)
                _adjacency[u].for_each([&](int v) {
                    if (u < v)
                        result.emplace_back(u, v);
                });
            return result;
        }

        friend auto operator==(const Graph &, const Graph &) -> bool = default;

    private:
        friend class GraphBuilder;

        static auto check_order(int n) -> std::size_t
        {
            if (n < 1)
                throw ParameterError("graph order must be at least 1, got " + std::to_string(n));
            return static_cast<std::size_t>(n);
        }

        std::vector<VertexSet> _adjacency;
    };

    class GraphBuilder
    {
    public:
        explicit GraphBuilder(int n) :
            _graph(n)
        {
        }

        auto order() const -> int { return _graph.order(); }

        /// Adds {u, v}; duplicates are absorbed. Throws on self-loops and out-of-range indices.
        auto add_edge(int u, int v) -> GraphBuilder &
        {
            const int n = _graph.order();
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ParameterError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for n = " + std::to_string(n));
            if (u == v)
                throw ParameterError("self-loop at vertex " + std::to_string(u));
            _graph._adjacency[u].set(v);
            _graph._adjacency[v].set(u);
            return *this;
        }

        auto add_clique(int first, int count) -> GraphBuilder &
        {
            for (int u = first; u < first + count; ++u)
                for (int v = u + 1; v < first + count; ++v)
                    add_edge(u, v);
            return *this;
        }

        auto build() && -> Graph { return std::move(_graph); }
        auto build() const & -> Graph { return _graph; }

    private:
        Graph _graph;
    };

    inline auto Graph::from_edges(int n, std::span<const Edge> edges) -> Graph
    {
        GraphBuilder builder(n);
        for (auto [u, v] : edges)
            builder.add_edge(u, v);
        return std::move(builder).build();
    }

    struct DegreeProfile
    {
        int delta = 0;          ///< minimum degree
        int Delta = 0;          ///< maximum degree
        int delta_bar = 0;      ///< minimum degree of the complement, n-1-Delta
        int Delta_bar = 0;      ///< maximum degree of the complement, n-1-delta
        int delta_prime = 0;    ///< min(delta, delta_bar)

        friend auto operator==(const DegreeProfile &, const DegreeProfile &) -> bool = default;
    };

    inline auto degree_profile(const Graph & g) -> DegreeProfile
    {
        const int n = g.order();
        int lo = n, hi = 0;
        for (int v = 0; v < n; ++v) {
            int d = g.degree(v);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        DegreeProfile p;
        p.delta = lo;
        p.Delta = hi;
        p.delta_bar = n - 1 - hi;
        p.Delta_bar = n - 1 - lo;
        p.delta_prime = std::min(p.delta, p.delta_bar);
        return p;
    }

    inline auto complement(const Graph & g) -> Graph
    {
        const int n = g.order();
        GraphBuilder builder(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (! g.adjacent(u, v))
                    builder.add_edge(u, v);
        return std::move(builder).build();
    }

    /// Connected components, each sorted, ordered by smallest member.
    inline auto components(const Graph & g) -> std::vector<std::vector<int>>
    {
        const int n = g.order();
        std::vector<std::vector<int>> result;
        VertexSet seen(n);
        for (int root = 0; root < n; ++root) {
            if (seen.test(root))
                continue;
            VertexSet frontier(n), reached(n);
            frontier.set(root);
            reached.set(root);
            while (frontier.any()) {
                VertexSet next(n);
                frontier.for_each([&](int v) { next |= g.neighbors(v); });
                next -= reached;
                reached |= next;
                frontier = std::move(next);
            }
            seen |= reached;
            result.push_back(reached.indices());
        }
        return result;
    }

    inline auto is_connected(const Graph & g) -> bool
    {
        return components(g).size() == 1;
    }

    /// Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
    inline auto induced_subgraph(const Graph & g, std::span<const int> vertices) -> Graph
    {
        GraphBuilder builder(static_cast<int>(vertices.size()));
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                if (g.adjacent(vertices[i], vertices[j]))
                    builder.add_edge(static_cast<int>(i), static_cast<int>(j));
        return std::move(builder).build();
    }

    /// Disjoint union; vertices of `b` are shifted by a.order().
    inline auto disjoint_union(const Graph & a, const Graph & b) -> Graph
    {
        GraphBuilder builder(a.order() + b.order());
        for (auto [u, v] : a.edges())
            builder.add_edge(u, v);
        for (auto [u, v] : b.edges())
            builder.add_edge(u + a.order(), v + a.order());
        return std::move(builder).build();
    }
}
