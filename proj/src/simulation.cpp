#include "rotting/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace rotting {

std::string_view to_string(Algorithm alg) noexcept {
    switch (alg) {
        case Algorithm::UcbTp: return "ucbtp";
        case Algorithm::AucbTp: return "aucbtp";
        case Algorithm::Ssucb: return "ssucb";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
    if (name == "ucbtp") return Algorithm::UcbTp;
    if (name == "aucbtp") return Algorithm::AucbTp;
    if (name == "ssucb") return Algorithm::Ssucb;
    return std::nullopt;
}

Algorithm RunSpec::algorithm() const noexcept {
    return static_cast<Algorithm>(policy.index());
}

std::vector<std::uint64_t> default_checkpoints(std::uint64_t horizon, std::size_t points) {
    std::vector<std::uint64_t> out;
    out.reserve(points + 1);
    const double log_t = std::log(static_cast<double>(horizon));
    for (std::size_t i = 0; i < points; ++i) {
        const double frac = points > 1 ? static_cast<double>(i) / static_cast<double>(points - 1) : 1.0;
        auto t = static_cast<std::uint64_t>(std::llround(std::exp(frac * log_t)));
        t = std::clamp<std::uint64_t>(t, 1, horizon);
        if (out.empty() || out.back() < t) out.push_back(t);
    }
    if (out.empty() || out.back() != horizon) out.push_back(horizon);
    return out;
}

RunSpec make_run_spec(Algorithm alg, EnvConfig env, const PolicyOptions& options) {
    const std::uint64_t horizon = env.horizon;
    RunSpec spec{std::move(env), UcbTpConfig{}, default_checkpoints(horizon), true};
    switch (alg) {
        case Algorithm::UcbTp: {
            const double rho = options.rho_known.value_or(spec.env.schedule.max_rate());
            UcbTpConfig cfg = UcbTpConfig::make(horizon, rho);
            if (options.delta) cfg.delta = *options.delta;
            cfg.radius_scale = options.radius_scale;
            cfg.validate();
            spec.policy = cfg;
            break;
        }
        case Algorithm::AucbTp: {
            AucbTpConfig cfg = AucbTpConfig::make(horizon, options.reward_norm_c);
            cfg.radius_scale = options.radius_scale;
            cfg.validate();
            spec.policy = std::move(cfg);
            break;
        }
        case Algorithm::Ssucb: {
            SsucbConfig cfg = SsucbConfig::make(horizon, options.ssucb_radius);
            cfg.radius_scale = options.radius_scale;
            cfg.validate();
            spec.policy = cfg;
            break;
        }
    }
    return spec;
}

RunResult run_one(const RunSpec& spec) {
    const auto start = std::chrono::steady_clock::now();
    Environment env(spec.env);
    RunResult result = std::visit(
        [&](const auto& cfg) {
            using Cfg = std::decay_t<decltype(cfg)>;
            if constexpr (std::is_same_v<Cfg, UcbTpConfig>) {
                UcbTp policy(cfg);
                return drive(env, policy, spec.checkpoints);
            } else if constexpr (std::is_same_v<Cfg, AucbTpConfig>) {
                AucbTp policy(cfg, stream_seed(spec.env.seed, Stream::Policy));
                return drive(env, policy, spec.checkpoints);
            } else {
                Ssucb policy(cfg);
                return drive(env, policy, spec.checkpoints);
            }
        },
        spec.policy);
    if (spec.record_wall_time) {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        result.wall_time_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    return result;
}

std::size_t resolve_threads(std::size_t requested) noexcept {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SIM_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<RunResult> run_many(const RunSpec& spec, std::size_t repetitions,
                                std::uint64_t base_seed, std::size_t threads) {
    if (repetitions < 1) throw ConfigError("repetitions must be at least 1");
    std::vector<RunResult> results(repetitions);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t k = next++; k < repetitions; k = next++) {
            try {
                RunSpec rep = spec;
                rep.env.seed = mix_seed(base_seed, k);
                results[k] = run_one(rep);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };

    const std::size_t n = std::min(resolve_threads(threads), repetitions);
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n);
        for (std::size_t i = 0; i < n; ++i) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace rotting
