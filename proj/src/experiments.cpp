#include "rotting/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace rotting {

double RhoRule::rho_for(std::uint64_t horizon) const {
    if (kind == Kind::Fixed) return value;
    return std::pow(static_cast<double>(horizon), -value);
}

void SweepSpec::validate() const {
    if (horizons.empty()) throw ConfigError("sweep needs at least one horizon");
    if (rho_rules.empty()) throw ConfigError("sweep needs at least one rotting rule");
    if (algorithms.empty()) throw ConfigError("sweep needs at least one algorithm");
    if (repetitions < 1) throw ConfigError("sweep needs at least one repetition");
    if (kind == SweepKind::RhoSweep && horizons.size() != 1)
        throw ConfigError("rho sweep takes exactly one horizon");
    if (kind == SweepKind::HorizonSweep && rho_rules.size() != 1)
        throw ConfigError("horizon sweep takes exactly one rotting rule");
    for (auto h : horizons)
        if (h < 1) throw ConfigError("sweep horizons must be at least 1");
}

SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();
    SweepResult out;
    for (Algorithm alg : spec.algorithms) {
        for (std::uint64_t horizon : spec.horizons) {
            for (const RhoRule& rule : spec.rho_rules) {
                const double rho = rule.rho_for(horizon);
                EnvConfig env{horizon, RottingSchedule::zero(), spec.noise_std, spec.base_seed};
                PolicyOptions options = spec.policy;
                // A single pull never observes rotting, and T^-gamma = 1 at T = 1.
                if (horizon == 1) options.rho_known = 0.0;
                RunSpec run;
                try {
                    if (rho > 0.0 && horizon > 1) env.schedule = RottingSchedule::constant(rho);
                    run = make_run_spec(alg, std::move(env), options);
                } catch (const ConfigError& e) {
                    out.skipped.push_back({alg, horizon, rho, e.what()});
                    continue;
                }
                run.record_wall_time = spec.record_wall_time;
                CellRuns cell{alg, horizon, rho,
                              run_many(run, spec.repetitions, spec.base_seed, spec.threads)};
                std::vector<double> finals;
                finals.reserve(cell.runs.size());
                for (const auto& r : cell.runs) finals.push_back(r.final_regret);
                const MeanCi s = mean_ci(finals);
                out.points.push_back(
                    {alg, horizon, rho, s.mean, s.ci_half_width, s.n, s.degenerate});
                out.cells.push_back(std::move(cell));
            }
        }
    }

    std::vector<std::size_t> order(out.points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto key = [&](std::size_t i) {
        const auto& p = out.points[i];
        return std::make_tuple(to_string(p.algorithm), p.horizon, p.rho);
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    SweepResult sorted;
    sorted.skipped = std::move(out.skipped);
    for (std::size_t i : order) {
        sorted.points.push_back(out.points[i]);
        sorted.cells.push_back(std::move(out.cells[i]));
    }
    return sorted;
}

std::vector<double> default_rho_gammas() { return {1.0, 0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3}; }

std::vector<std::uint64_t> default_sweep_horizons() {
    std::vector<std::uint64_t> t{1};
    for (std::uint64_t k = 1; k <= 10; ++k) t.push_back(k * 100'000);
    return t;
}

}  // namespace rotting
