#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>

#include "rotting/environment.hpp"

namespace rotting {

enum class PolicyAction { PullCurrent, PullFresh };

// A policy chooses the arm for the next step (sampling fresh arms from the
// environment as needed) and is then told what that pull returned.
template <class P>
concept BanditPolicy = requires(P p, Environment& env, const Observation& obs) {
    { p.next_arm(env) } -> std::same_as<ArmId>;
    p.observe(obs);
};

// Rotting-corrected UCB index shared by UCB-TP and the AUCB-TP bases:
//   corrected_sum / n - rate * n + sqrt(radius_scale * log_horizon / n)
// where corrected_sum = sum_k (r_k + rate * (k - 1)). Requires n >= 1.
inline double threshold_index(double corrected_sum, std::uint64_t n, double rate,
                              double radius_scale, double log_horizon) noexcept {
    const double nd = static_cast<double>(n);
    return corrected_sum / nd - rate * nd + std::sqrt(radius_scale * log_horizon / nd);
}

// Per-arm statistics for the rotting-corrected estimator of the initial mean.
struct CorrectedStats {
    std::uint64_t n = 0;
    double corrected_sum = 0.0;

    void add(double reward, double rate) noexcept {
        corrected_sum += reward + rate * static_cast<double>(n);
        ++n;
    }
    // Estimate of the arm's initial mean; only meaningful for n >= 1.
    double initial_mean_estimate() const noexcept {
        return corrected_sum / static_cast<double>(n);
    }
};

}  // namespace rotting
