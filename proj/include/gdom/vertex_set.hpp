#pragma once

#include <gdom/errors.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace gdom
{
    /**
     * Fixed-width bit set over 0..width-1. Used both for vertex subsets and as the
     * adjacency rows of Graph. Bits at or beyond width are always zero.
     */
    class VertexSet
    {
    public:
        using Word = std::uint64_t;
        static constexpr int bits_per_word = 64;

        VertexSet() = default;

        explicit VertexSet(int width) :
            _width(width),
            _words((width + bits_per_word - 1) / bits_per_word, 0)
        {
            if (width < 0)
                throw ParameterError("VertexSet width must be non-negative");
        }

        static auto full(int width) -> VertexSet
        {
            VertexSet result(width);
            std::fill(result._words.begin(), result._words.end(), ~Word{0});
            result.trim();
            return result;
        }

        static auto from_indices(int width, std::span<const int> indices) -> VertexSet
        {
            VertexSet result(width);
            for (int v : indices) {
                if (v < 0 || v >= width)
                    throw ParameterError("vertex " + std::to_string(v) + " out of range for width " + std::to_string(width));
                result.set(v);
            }
            return result;
        }

        auto width() const -> int { return _width; }

        auto test(int v) const -> bool
        {
            return (_words[v / bits_per_word] >> (v % bits_per_word)) & 1U;
        }

        auto set(int v) -> void { _words[v / bits_per_word] |= Word{1} << (v % bits_per_word); }
        auto reset(int v) -> void { _words[v / bits_per_word] &= ~(Word{1} << (v % bits_per_word)); }

        auto count() const -> int
        {
            int total = 0;
            for (Word w : _words)
                total += std::popcount(w);
            return total;
        }

        auto none() const -> bool
        {
            return std::all_of(_words.begin(), _words.end(), [](Word w) { return w == 0; });
        }

        auto any() const -> bool { return ! none(); }

        /// Lowest set index at or after `from`, or -1.
        auto find_next(int from) const -> int
        {
            if (from >= _width)
                return -1;
            auto wi = static_cast<std::size_t>(from / bits_per_word);
            Word w = _words[wi] & (~Word{0} << (from % bits_per_word));
            while (true) {
                if (w != 0)
                    return static_cast<int>(wi) * bits_per_word + std::countr_zero(w);
                if (++wi == _words.size())
                    return -1;
                w = _words[wi];
            }
        }

        auto first() const -> int { return find_next(0); }

        template <typename F>
        auto for_each(F && f) const -> void
        {
            for (std::size_t wi = 0; wi < _words.size(); ++wi) {
                Word w = _words[wi];
                while (w != 0) {
                    int bit = std::countr_zero(w);
                    f(static_cast<int>(wi) * bits_per_word + bit);
                    w &= w - 1;
                }
            }
        }

        auto indices() const -> std::vector<int>
        {
            std::vector<int> result;
            result.reserve(count());
            for_each([&](int v) { result.push_back(v); });
            return result;
        }

        auto operator|=(const VertexSet & other) -> VertexSet &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] |= other._words[i];
            return *this;
        }

        auto operator&=(const VertexSet & other) -> VertexSet &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= other._words[i];
            return *this;
        }

        /// Set difference.
        auto operator-=(const VertexSet & other) -> VertexSet &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= ~other._words[i];
            return *this;
        }

        friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
        friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
        friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

        /// Complement within the width.
        auto operator~() const -> VertexSet
        {
            VertexSet result(*this);
            for (auto & w : result._words)
                w = ~w;
            result.trim();
            return result;
        }

        auto intersects(const VertexSet & other) const -> bool
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                if (_words[i] & other._words[i])
                    return true;
            return false;
        }

        auto count_common(const VertexSet & other) const -> int
        {
            int total = 0;
            for (std::size_t i = 0; i < _words.size(); ++i)
                total += std::popcount(_words[i] & other._words[i]);
            return total;
        }

        auto is_subset_of(const VertexSet & other) const -> bool
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                if (_words[i] & ~other._words[i])
                    return false;
            return true;
        }

        auto words() const -> std::span<const Word> { return _words; }

        friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

    private:
        auto trim() -> void
        {
            if (_width % bits_per_word != 0 && ! _words.empty())
                _words.back() &= (Word{1} << (_width % bits_per_word)) - 1;
        }

        int _width = 0;
        std::vector<Word> _words;
    };
}
