#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "rotting/aucb_tp.hpp"
#include "rotting/environment.hpp"
#include "rotting/errors.hpp"
#include "rotting/policy.hpp"
#include "rotting/ssucb.hpp"
#include "rotting/ucb_tp.hpp"

namespace rotting {

enum class Algorithm { UcbTp, AucbTp, Ssucb };

std::string_view to_string(Algorithm alg) noexcept;
// Accepts the CLI names ucbtp, aucbtp, ssucb.
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

// Knobs that are not derived from (T, rho).
struct PolicyOptions {
    std::optional<double> rho_known;  // UCB-TP; defaults to the schedule's max rate
    std::optional<double> delta;      // UCB-TP; defaults to max(rho^(1/3), 1/sqrt(T))
    double radius_scale = 10.0;
    double reward_norm_c = 93.0;      // AUCB-TP
    SsucbRadius ssucb_radius = SsucbRadius::Classic;
};

using PolicyConfig = std::variant<UcbTpConfig, AucbTpConfig, SsucbConfig>;

struct RunSpec {
    EnvConfig env;
    PolicyConfig policy;
    std::vector<std::uint64_t> checkpoints;  // sorted, last == horizon
    bool record_wall_time = true;

    Algorithm algorithm() const noexcept;
};

// 100 log-spaced steps between 1 and T (deduplicated), always ending at T.
std::vector<std::uint64_t> default_checkpoints(std::uint64_t horizon, std::size_t points = 100);

// Throws ConfigError if the derived policy configuration is invalid
// (e.g. AUCB-TP with H < 4).
RunSpec make_run_spec(Algorithm alg, EnvConfig env, const PolicyOptions& options = {});

struct CurvePoint {
    std::uint64_t t = 0;
    double cumulative_regret = 0.0;
    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct RunResult {
    double final_regret = 0.0;
    std::vector<CurvePoint> regret_curve;
    std::uint64_t arms_sampled = 0;
    std::uint64_t seed = 0;
    std::int64_t wall_time_ms = 0;
};

// Runs `policy` until the environment's horizon, accumulating pseudo-regret
// and recording it at each checkpoint.
template <BanditPolicy P>
RunResult drive(Environment& env, P& policy, const std::vector<std::uint64_t>& checkpoints) {
    RunResult result;
    result.seed = env.config().seed;
    result.regret_curve.reserve(checkpoints.size());
    auto next = checkpoints.begin();
    double regret = 0.0;
    const std::uint64_t horizon = env.horizon();
    for (std::uint64_t t = 1; t <= horizon; ++t) {
        const Observation obs = env.pull(policy.next_arm(env));
        policy.observe(obs);
        regret += regret_increment(obs);
        if (next != checkpoints.end() && *next == t) {
            result.regret_curve.push_back({t, regret});
            ++next;
        }
    }
    result.final_regret = regret;
    result.arms_sampled = env.arms_sampled();
    return result;
}

RunResult run_one(const RunSpec& spec);

// Repetition k runs with seed mix_seed(base_seed, k). Results are ordered by
// k and independent of `threads` (0 = hardware concurrency).
std::vector<RunResult> run_many(const RunSpec& spec, std::size_t repetitions,
                                std::uint64_t base_seed, std::size_t threads = 0);

// Resolves a thread count request: 0 means SIM_THREADS if set, else hardware
// concurrency.
std::size_t resolve_threads(std::size_t requested) noexcept;

}  // namespace rotting
