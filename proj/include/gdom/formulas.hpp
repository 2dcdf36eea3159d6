#pragma once

#include <cmath>

/// Right-hand sides of the closed-form bounds, as functions of order and degree parameters.
namespace gdom::formulas
{
    /// gamma <= (ln(d+1)+1)/(d+1) n
    inline auto domination_upper(int n, int delta) -> double
    {
        return (std::log(delta + 1.0) + 1.0) / (delta + 1.0) * n;
    }

    /// gamma_t <= (ln d + 1)/d n, d >= 1
    inline auto total_upper(int n, int delta) -> double
    {
        return (std::log(static_cast<double>(delta)) + 1.0) / delta * n;
    }

    /// gamma_g <= (1 - d'/(2^{1/d'} (1+d')^{1+1/d'})) n, d' >= 1
    inline auto global_upper(int n, int delta_prime) -> double
    {
        const double d = delta_prime;
        return (1.0 - d / (std::pow(2.0, 1.0 / d) * std::pow(1.0 + d, 1.0 + 1.0 / d))) * n;
    }

    /// gamma_g <= (ln(d'+1) + ln 2 + 1)/(d'+1) n
    inline auto global_upper_relaxed(int n, int delta_prime) -> double
    {
        const double d = delta_prime;
        return (std::log(d + 1.0) + std::log(2.0) + 1.0) / (d + 1.0) * n;
    }

    /// gamma_R <= 2(1 - 2^{1/d} d/(1+d)^{1+1/d}) n, d >= 1
    inline auto roman_upper(int n, int delta) -> double
    {
        const double d = delta;
        return 2.0 * (1.0 - std::pow(2.0, 1.0 / d) * d / std::pow(1.0 + d, 1.0 + 1.0 / d)) * n;
    }

    /// gamma_R <= (2 ln(d+1) - ln 4 + 2)/(d+1) n, d >= 1
    inline auto roman_upper_relaxed(int n, int delta) -> double
    {
        const double d = delta;
        return (2.0 * std::log(d + 1.0) - std::log(4.0) + 2.0) / (d + 1.0) * n;
    }

    /// n < d^2/(ln d + 1)
    inline auto small_order_condition(int n, int delta) -> bool
    {
        if (delta < 1)
            return false;
        const double d = delta;
        return n < d * d / (std::log(d) + 1.0);
    }

    /// gamma_r <= (2 ln(d+1) + d + 3)/(d+1) n - 2 beta_1
    inline auto restrained_matching_upper(int n, int delta, int beta1) -> double
    {
        const double d = delta;
        return (2.0 * std::log(d + 1.0) + d + 3.0) / (d + 1.0) * n - 2.0 * beta1;
    }

    /// gamma_tr <= (2 ln d + d + 2)/d n - 2 beta_1
    inline auto total_restrained_matching_upper(int n, int delta, int beta1) -> double
    {
        const double d = delta;
        return (2.0 * std::log(d) + d + 2.0) / d * n - 2.0 * beta1;
    }

    inline auto parity_slack(int n) -> double { return n % 2 == 0 ? 0.0 : 1.0; }

    /// With a perfect matching: gamma_r <= 2n (ln(d+1)+1)/(d+1) + eps
    inline auto restrained_perfect_matching_upper(int n, int delta) -> double
    {
        return 2.0 * domination_upper(n, delta) + parity_slack(n);
    }

    /// With a perfect matching: gamma_tr <= 2n (ln d + 1)/d + eps
    inline auto total_restrained_perfect_matching_upper(int n, int delta) -> double
    {
        return 2.0 * total_upper(n, delta) + parity_slack(n);
    }

    /// Additive slack for integer-versus-real comparisons.
    inline constexpr double slack = 1e-9;
}
