#include "rotting/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

#include "rotting/errors.hpp"

namespace rotting {

MeanCi mean_ci(std::span<const double> samples, double confidence) {
    if (samples.empty()) throw UsageError("mean_ci of an empty sample");
    MeanCi out;
    out.n = samples.size();
    out.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(out.n);
    if (out.n < 2) {
        out.degenerate = true;
        return out;
    }
    double ss = 0.0;
    for (double x : samples) ss += (x - out.mean) * (x - out.mean);
    const double sd = std::sqrt(ss / static_cast<double>(out.n - 1));
    const boost::math::students_t dist(static_cast<double>(out.n - 1));
    const double t = boost::math::quantile(dist, 0.5 + confidence / 2.0);
    out.ci_half_width = t * sd / std::sqrt(static_cast<double>(out.n));
    return out;
}

LinearFit fit_linear(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2) throw UsageError("linear fit needs at least two points");
    const double n = static_cast<double>(points.size());
    double mx = 0.0, my = 0.0;
    for (auto [x, y] : points) {
        mx += x;
        my += y;
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (auto [x, y] : points) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    if (!(sxx > 0.0)) throw UsageError("linear fit needs distinct x values");
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return fit;
}

LinearFit fit_scaling(std::span<const std::pair<double, double>> points) {
    if (points.size() < 3) throw UsageError("scaling fit needs at least three points");
    std::vector<std::pair<double, double>> logs;
    logs.reserve(points.size());
    for (auto [x, y] : points) {
        if (!(x > 0.0 && y > 0.0)) throw UsageError("scaling fit needs positive coordinates");
        logs.emplace_back(std::log(x), std::log(y));
    }
    return fit_linear(logs);
}

double theory_bound(double rho, double horizon) {
    return std::max(std::cbrt(rho) * horizon, std::sqrt(horizon));
}

}  // namespace rotting
