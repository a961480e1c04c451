#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rotting/simulation.hpp"
#include "rotting/statistics.hpp"

namespace rotting {

// Rotting rate of a sweep cell: either a fixed value or rho = T^(-gamma).
struct RhoRule {
    enum class Kind { Fixed, Exponent } kind = Kind::Fixed;
    double value = 0.0;

    static RhoRule fixed(double rho) { return {Kind::Fixed, rho}; }
    static RhoRule exponent(double gamma) { return {Kind::Exponent, gamma}; }
    double rho_for(std::uint64_t horizon) const;
};

enum class SweepKind {
    RhoSweep,      // one T, several rotting rules
    HorizonSweep,  // one rotting rule, several T
    Compare,       // full grid
};

struct SweepSpec {
    SweepKind kind = SweepKind::Compare;
    std::vector<std::uint64_t> horizons;
    std::vector<RhoRule> rho_rules;
    std::vector<Algorithm> algorithms{Algorithm::UcbTp, Algorithm::AucbTp, Algorithm::Ssucb};
    std::size_t repetitions = 10;
    std::uint64_t base_seed = 0;
    double noise_std = 1.0;
    PolicyOptions policy;
    std::size_t threads = 0;
    bool record_wall_time = false;

    void validate() const;  // throws ConfigError
};

struct SummaryPoint {
    Algorithm algorithm = Algorithm::UcbTp;
    std::uint64_t horizon = 0;
    double rho = 0.0;
    double mean_regret = 0.0;
    double ci_half_width = 0.0;
    std::size_t repetitions = 0;
    bool degenerate = false;
};

struct CellRuns {
    Algorithm algorithm = Algorithm::UcbTp;
    std::uint64_t horizon = 0;
    double rho = 0.0;
    std::vector<RunResult> runs;
};

// A cell whose policy cannot be configured (AUCB-TP needs T >= 10).
struct SkippedCell {
    Algorithm algorithm = Algorithm::UcbTp;
    std::uint64_t horizon = 0;
    double rho = 0.0;
    std::string reason;
};

struct SweepResult {
    std::vector<SummaryPoint> points;  // sorted by (algorithm name, T, rho)
    std::vector<CellRuns> cells;       // same order as points
    std::vector<SkippedCell> skipped;
};

// Every cell of the grid reuses base_seed, so all algorithms face the same
// arm and noise streams at a given repetition.
SweepResult run_sweep(const SweepSpec& spec);

// Default grids of the published experiments.
std::vector<double> default_rho_gammas();             // 1, 0.9, ..., 0.3
std::vector<std::uint64_t> default_sweep_horizons();  // 1, 1e5, 2e5, ..., 1e6

}  // namespace rotting
