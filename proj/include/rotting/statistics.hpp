#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace rotting {

struct MeanCi {
    double mean = 0.0;
    double ci_half_width = 0.0;  // 0 when fewer than two samples
    std::size_t n = 0;
    bool degenerate = false;     // n < 2: no interval can be formed
};

// Mean with a two-sided Student-t interval on n - 1 degrees of freedom.
MeanCi mean_ci(std::span<const double> samples, double confidence = 0.95);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Ordinary least squares of y on x. Needs at least two distinct x values.
LinearFit fit_linear(std::span<const std::pair<double, double>> points);

// Least squares on (log x, log y). Needs >= 3 points, all coordinates > 0;
// throws UsageError otherwise.
LinearFit fit_scaling(std::span<const std::pair<double, double>> points);

// max(rho^(1/3) T, sqrt(T)), the minimax regret rate without constants.
double theory_bound(double rho, double horizon);

}  // namespace rotting
