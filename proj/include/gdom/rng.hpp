#pragma once

#include <cstdint>

namespace gdom
{
    /// SplitMix64 step. Used to expand seeds and to derive per-sample / per-trial streams.
    constexpr auto splitmix64(std::uint64_t & state) -> std::uint64_t
    {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Child seed for stream `index` of a master seed. Pure function of both arguments.
    constexpr auto derive_seed(std::uint64_t master, std::uint64_t index) -> std::uint64_t
    {
        std::uint64_t state = master ^ (0xD1B54A32D192ED03ULL * (index + 1));
        splitmix64(state);
        return splitmix64(state);
    }

    /**
     * xoshiro256** seeded through SplitMix64. The stream is a fixed function of the seed
     * on every platform; nothing here depends on <random> distributions.
     */
    class Rng
    {
    public:
        explicit constexpr Rng(std::uint64_t seed)
        {
            std::uint64_t sm = seed;
            for (auto & word : _state)
                word = splitmix64(sm);
        }

        constexpr auto next() -> std::uint64_t
        {
            const std::uint64_t result = rotl(_state[1] * 5, 7) * 9;
            const std::uint64_t t = _state[1] << 17;
            _state[2] ^= _state[0];
            _state[3] ^= _state[1];
            _state[1] ^= _state[2];
            _state[0] ^= _state[3];
            _state[2] ^= t;
            _state[3] = rotl(_state[3], 45);
            return result;
        }

        /// Uniform on [0, 1) with 53 random bits.
        constexpr auto uniform() -> double
        {
            return static_cast<double>(next() >> 11) * 0x1.0p-53;
        }

        /// True with probability p; p <= 0 never, p >= 1 always.
        constexpr auto bernoulli(double p) -> bool
        {
            return uniform() < p;
        }

        /// Uniform integer in [0, bound), bound > 0. Rejection sampling, so exactly uniform.
        constexpr auto below(std::uint64_t bound) -> std::uint64_t
        {
            const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
            std::uint64_t x = next();
            while (x >= limit)
                x = next();
            return x % bound;
        }

    private:
        static constexpr auto rotl(std::uint64_t x, int k) -> std::uint64_t
        {
            return (x << k) | (x >> (64 - k));
        }

        std::uint64_t _state[4] = {};
    };
}
