#pragma once

#include <gdom/errors.hpp>
#include <gdom/graph.hpp>

#include <algorithm>
#include <queue>
#include <string>
#include <vector>

namespace gdom
{
    struct Matching
    {
        std::vector<Edge> edges;  ///< (u, v) with u < v, sorted

        auto size() const -> int { return static_cast<int>(edges.size()); }

        /// mate[v] = partner of v, or -1.
        auto mates(int n) const -> std::vector<int>
        {
            std::vector<int> mate(n, -1);
            for (auto [u, v] : edges) {
                mate[u] = v;
                mate[v] = u;
            }
            return mate;
        }
    };

    /// Pairwise disjoint and every pair an edge of g.
    inline auto is_matching(const Graph & g, const Matching & m) -> bool
    {
        std::vector<bool> used(g.order(), false);
        for (auto [u, v] : m.edges) {
            if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || ! g.adjacent(u, v))
                return false;
            if (used[u] || used[v])
                return false;
            used[u] = used[v] = true;
        }
        return true;
    }

    namespace detail
    {
        inline auto matching_from_mates(const std::vector<int> & mate) -> Matching
        {
            Matching m;
            for (int v = 0; v < static_cast<int>(mate.size()); ++v)
                if (mate[v] > v)
                    m.edges.emplace_back(v, mate[v]);
            return m;
        }

        /// Edmonds' augmenting-path search with blossom contraction (base relabelling).
        class Blossom
        {
        public:
            explicit Blossom(const Graph & g) :
                _g(g),
                _n(g.order()),
                _mate(_n, -1),
                _parent(_n),
                _base(_n),
                _used(_n),
                _in_blossom(_n)
            {
            }

            auto run() -> std::vector<int>
            {
                for (int root = 0; root < _n; ++root)
                    if (_mate[root] == -1)
                        augment(find_path(root));
                return _mate;
            }

        private:
            auto lowest_common_base(int a, int b) -> int
            {
                std::vector<bool> seen(_n, false);
                while (true) {
                    a = _base[a];
                    seen[a] = true;
                    if (_mate[a] == -1)
                        break;
                    a = _parent[_mate[a]];
                }
                while (true) {
                    b = _base[b];
                    if (seen[b])
                        return b;
                    b = _parent[_mate[b]];
                }
            }

            auto mark_path(int v, int b, int child) -> void
            {
                while (_base[v] != b) {
                    _in_blossom[_base[v]] = _in_blossom[_base[_mate[v]]] = true;
                    _parent[v] = child;
                    child = _mate[v];
                    v = _parent[_mate[v]];
                }
            }

            auto find_path(int root) -> int
            {
                std::fill(_used.begin(), _used.end(), false);
                std::fill(_parent.begin(), _parent.end(), -1);
                for (int i = 0; i < _n; ++i)
                    _base[i] = i;
                _used[root] = true;
                std::queue<int> queue;
                queue.push(root);
                while (! queue.empty()) {
                    const int v = queue.front();
                    queue.pop();
                    for (int to : _g.neighbors(v).indices()) {
                        if (_base[v] == _base[to] || _mate[v] == to)
                            continue;
                        if (to == root || (_mate[to] != -1 && _parent[_mate[to]] != -1)) {
                            const int b = lowest_common_base(v, to);
                            std::fill(_in_blossom.begin(), _in_blossom.end(), false);
                            mark_path(v, b, to);
                            mark_path(to, b, v);
                            for (int i = 0; i < _n; ++i)
                                if (_in_blossom[_base[i]]) {
                                    _base[i] = b;
                                    if (! _used[i]) {
                                        _used[i] = true;
                                        queue.push(i);
                                    }
                                }
                        }
                        else if (_parent[to] == -1) {
                            _parent[to] = v;
                            if (_mate[to] == -1)
                                return to;
                            _used[_mate[to]] = true;
                            queue.push(_mate[to]);
                        }
                    }
                }
                return -1;
            }

            auto augment(int v) -> void
            {
                while (v != -1) {
                    const int pv = _parent[v];
                    const int next = _mate[pv];
                    _mate[v] = pv;
                    _mate[pv] = v;
                    v = next;
                }
            }

            const Graph & _g;
            int _n;
            std::vector<int> _mate, _parent, _base;
            std::vector<bool> _used, _in_blossom;
        };

        inline auto brute_force_mates(const Graph & g, std::vector<int> & mate, int from, int size, int & best,
            std::vector<int> & best_mate) -> void
        {
            const int n = g.order();
            while (from < n && mate[from] != -1)
                ++from;
            // even if every remaining vertex paired up we could not beat best
            if (size + (n - from) / 2 <= best)
                return;
            if (from >= n) {
                best = size;
                best_mate = mate;
                return;
            }
            for (int u : g.neighbors(from).indices())
                if (u > from && mate[u] == -1) {
                    mate[from] = u;
                    mate[u] = from;
                    brute_force_mates(g, mate, from + 1, size + 1, best, best_mate);
                    mate[from] = mate[u] = -1;
                }
            // leave `from` unmatched; mark it so the scan skips it
            mate[from] = from;
            brute_force_mates(g, mate, from + 1, size, best, best_mate);
            mate[from] = -1;
        }
    }

    /// Maximum-cardinality matching in a general graph.
    inline auto max_matching(const Graph & g) -> Matching
    {
        return detail::matching_from_mates(detail::Blossom(g).run());
    }

    /// Exhaustive oracle. Guarded to n <= 12 or at most 16 edges.
    inline auto brute_force_matching(const Graph & g) -> Matching
    {
        if (g.order() > 12 && g.size() > 16)
            throw SizeGuardError("brute-force matching supports n <= 12 or at most 16 edges");
        std::vector<int> mate(g.order(), -1), best_mate(g.order(), -1);
        int best = -1;
        detail::brute_force_mates(g, mate, 0, 0, best, best_mate);
        for (int v = 0; v < g.order(); ++v)
            if (best_mate[v] == v)
                best_mate[v] = -1;
        return detail::matching_from_mates(best_mate);
    }

    /// beta_1 = floor(n/2): every vertex matched, or all but one when n is odd.
    inline auto has_perfect_matching(const Graph & g) -> bool
    {
        return max_matching(g).size() == g.order() / 2;
    }
}
