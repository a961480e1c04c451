#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rotting/rng.hpp"

namespace rotting {

// EXP3 master over B experts with uniform exploration mass alpha.
//
//   p(b) = (1 - alpha) * w(b) / sum(w) + alpha / B
//   w(b~) *= exp(alpha * g / (B * p(b~)))      g in [0, 1]
//
// After each update the weights are divided by their maximum. This keeps them
// finite over long runs and leaves every probability unchanged.
class Exp3 {
public:
    Exp3(std::size_t experts, double alpha);

    std::size_t size() const noexcept { return weights_.size(); }
    double alpha() const noexcept { return alpha_; }

    // Draws an expert from the mixture and records the probabilities used.
    std::size_t select(Rng& rng);

    // Importance-weighted update of the last selected expert. `gain` is
    // clamped to [0, 1].
    void update(double gain);

    std::span<const double> weights() const noexcept { return weights_; }
    std::span<const double> last_probabilities() const noexcept { return probabilities_; }
    std::size_t last_selected() const noexcept { return selected_; }
    bool awaiting_update() const noexcept { return pending_; }

    // Mixture distribution for arbitrary positive weights.
    static std::vector<double> mixture(std::span<const double> weights, double alpha);

private:
    double alpha_;
    std::vector<double> weights_;
    std::vector<double> probabilities_;
    std::size_t selected_ = 0;
    bool pending_ = false;
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace rotting
