#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "rotting/csv.hpp"
#include "rotting/experiments.hpp"
#include "rotting/simulation.hpp"

namespace rotbench {

namespace fs = std::filesystem;
using namespace rotting;

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flags shared by every subcommand.
struct CommonFlags {
    std::size_t reps = 1;
    std::uint64_t seed = 0;
    std::string out = ".";
    double noise_std = 1.0;
    double reward_norm_c = 93.0;
    double radius_scale = 10.0;
    std::string ssucb_radius = "classic";
    std::optional<double> delta;
    bool wall_time = false;
    bool quiet = false;
};

struct RunFlags {
    std::string alg;
    std::string horizon;
    double rho = 0.0;
    std::size_t checkpoints = 100;
};

struct RhoSweepFlags {
    std::string horizon = "1000000";
    std::vector<double> gammas = default_rho_gammas();
    std::vector<std::string> algs{"ucbtp", "aucbtp", "ssucb"};
};

struct HorizonSweepFlags {
    std::vector<double> gammas{0.5};
    std::vector<std::string> horizons;
    std::vector<std::string> algs{"ucbtp", "aucbtp", "ssucb"};
};

// Accepts plain integers and integral scientific notation such as 1e5.
std::uint64_t parse_horizon(const std::string& text) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec == std::errc{} && p == text.data() + text.size()) return v;
    double d = 0.0;
    auto [q, ec2] = std::from_chars(text.data(), text.data() + text.size(), d);
    if (ec2 != std::errc{} || q != text.data() + text.size() || !(d >= 1.0) || d > 1e15 ||
        std::floor(d) != d)
        throw CLI::ValidationError("horizon", "'" + text + "' is not a positive integer");
    return static_cast<std::uint64_t>(d);
}

std::vector<Algorithm> parse_algorithms(const std::vector<std::string>& names) {
    std::vector<Algorithm> out;
    for (const auto& n : names) {
        auto a = parse_algorithm(n);
        if (!a) throw CLI::ValidationError("--algs", "unknown algorithm '" + n + "'");
        out.push_back(*a);
    }
    return out;
}

PolicyOptions policy_options(const CommonFlags& f) {
    PolicyOptions o;
    o.delta = f.delta;
    o.radius_scale = f.radius_scale;
    o.reward_norm_c = f.reward_norm_c;
    o.ssucb_radius = f.ssucb_radius == "threshold" ? SsucbRadius::Threshold : SsucbRadius::Classic;
    return o;
}

using Header = std::vector<std::pair<std::string, std::string>>;

Header common_header(const std::string& command, const CommonFlags& f, std::size_t threads) {
    Header h{{"command", command},
             {"reps", std::to_string(f.reps)},
             {"seed", std::to_string(f.seed)},
             {"noise_std", csv::format_double(f.noise_std)},
             {"C", csv::format_double(f.reward_norm_c)},
             {"radius_scale", csv::format_double(f.radius_scale)},
             {"ssucb_radius", f.ssucb_radius},
             {"delta", f.delta ? csv::format_double(*f.delta) : std::string("default")},
             {"threads", std::to_string(threads)},
             {"wall_time", f.wall_time ? "true" : "false"}};
    return h;
}

std::string join(const std::vector<std::string>& items) {
    std::string s;
    for (const auto& i : items) s += (s.empty() ? "" : ",") + i;
    return s;
}

class CsvFile {
public:
    CsvFile(const fs::path& path, const Header& header) : path_(path), stream_(path) {
        if (!stream_) throw IoError("cannot open " + path.string() + " for writing");
        csv::Writer w(stream_);
        w.comment("schema=" + std::to_string(csv::kSchemaVersion));
        w.comment(std::string("rotbench version=") + ROTTING_VERSION);
        for (const auto& [k, v] : header) w.comment(k + "=" + v);
    }
    csv::Writer writer() { return csv::Writer(stream_); }
    void close() {
        stream_.close();
        if (!stream_) throw IoError("failed writing " + path_.string());
    }

private:
    fs::path path_;
    std::ofstream stream_;
};

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw IoError("cannot create directory " + dir.string());
}

void write_runs(CsvFile& file, const std::vector<CellRuns>& cells) {
    auto w = file.writer();
    w.row({"algorithm", "T", "rho", "rep", "seed", "final_regret", "arms_sampled", "wall_ms"});
    for (const auto& c : cells)
        for (std::size_t k = 0; k < c.runs.size(); ++k) {
            const auto& r = c.runs[k];
            w.row({std::string(to_string(c.algorithm)), std::to_string(c.horizon),
                   csv::format_double(c.rho), std::to_string(k), std::to_string(r.seed),
                   csv::format_double(r.final_regret), std::to_string(r.arms_sampled),
                   std::to_string(r.wall_time_ms)});
        }
}

void write_curves(CsvFile& file, const std::vector<CellRuns>& cells) {
    auto w = file.writer();
    w.row({"algorithm", "T", "rho", "rep", "t", "cum_regret"});
    for (const auto& c : cells)
        for (std::size_t k = 0; k < c.runs.size(); ++k)
            for (const auto& p : c.runs[k].regret_curve)
                w.row({std::string(to_string(c.algorithm)), std::to_string(c.horizon),
                       csv::format_double(c.rho), std::to_string(k), std::to_string(p.t),
                       csv::format_double(p.cumulative_regret)});
}

void write_summary(CsvFile& file, const std::vector<SummaryPoint>& points) {
    auto w = file.writer();
    w.row({"algorithm", "T", "rho", "mean_regret", "ci95"});
    for (const auto& p : points)
        w.row({std::string(to_string(p.algorithm)), std::to_string(p.horizon),
               csv::format_double(p.rho), csv::format_double(p.mean_regret),
               csv::format_double(p.ci_half_width)});
}

int cmd_run(const RunFlags& rf, const CommonFlags& f, std::size_t threads, std::ostream& err) {
    const auto alg = parse_algorithm(rf.alg);
    if (!alg) throw CLI::ValidationError("--alg", "unknown algorithm '" + rf.alg + "'");
    const std::uint64_t horizon = parse_horizon(rf.horizon);

    EnvConfig env{horizon, RottingSchedule::zero(), f.noise_std, f.seed};
    if (rf.rho > 0.0) env.schedule = RottingSchedule::constant(rf.rho);
    RunSpec spec = make_run_spec(*alg, std::move(env), policy_options(f));
    spec.checkpoints = default_checkpoints(horizon, rf.checkpoints);
    spec.record_wall_time = f.wall_time;

    std::vector<CellRuns> cells{{*alg, horizon, rf.rho, run_many(spec, f.reps, f.seed, threads)}};

    Header h = common_header("run", f, threads);
    h.insert(h.begin() + 1, {{"alg", rf.alg},
                             {"T", std::to_string(horizon)},
                             {"rho", csv::format_double(rf.rho)},
                             {"checkpoints", std::to_string(rf.checkpoints)}});
    const fs::path dir(f.out);
    ensure_dir(dir);
    CsvFile runs(dir / "runs.csv", h);
    write_runs(runs, cells);
    runs.close();
    CsvFile curves(dir / "curves.csv", h);
    write_curves(curves, cells);
    curves.close();
    if (!f.quiet) err << "wrote " << (dir / "runs.csv").string() << " and curves.csv\n";
    return kOk;
}

void report_skipped(const SweepResult& r, std::ostream& err) {
    for (const auto& s : r.skipped)
        err << "skipped " << to_string(s.algorithm) << " T=" << s.horizon << ": " << s.reason
            << '\n';
}

void write_sweep(const fs::path& dir, const Header& h, const SweepResult& r) {
    ensure_dir(dir);
    CsvFile summary(dir / "summary.csv", h);
    write_summary(summary, r.points);
    summary.close();
    CsvFile runs(dir / "runs.csv", h);
    write_runs(runs, r.cells);
    runs.close();
}

SweepSpec sweep_base(const CommonFlags& f, std::size_t threads) {
    SweepSpec s;
    s.repetitions = f.reps;
    s.base_seed = f.seed;
    s.noise_std = f.noise_std;
    s.policy = policy_options(f);
    s.threads = threads;
    s.record_wall_time = f.wall_time;
    return s;
}

std::string format_list(const std::vector<double>& v) {
    std::vector<std::string> s;
    for (double x : v) s.push_back(csv::format_shortest(x));
    return join(s);
}

int cmd_sweep_rho(const RhoSweepFlags& sf, const CommonFlags& f, std::size_t threads,
                  std::ostream& err) {
    SweepSpec s = sweep_base(f, threads);
    s.kind = SweepKind::RhoSweep;
    s.horizons = {parse_horizon(sf.horizon)};
    for (double g : sf.gammas) s.rho_rules.push_back(RhoRule::exponent(g));
    s.algorithms = parse_algorithms(sf.algs);

    if (!f.quiet) err << "sweep-rho: " << s.algorithms.size() * s.rho_rules.size() << " cells\n";
    const SweepResult r = run_sweep(s);
    report_skipped(r, err);

    Header h = common_header("sweep-rho", f, threads);
    h.insert(h.begin() + 1, {{"T", std::to_string(s.horizons.front())},
                             {"gammas", format_list(sf.gammas)},
                             {"algs", join(sf.algs)}});
    write_sweep(fs::path(f.out), h, r);
    return kOk;
}

int cmd_sweep_horizon(const HorizonSweepFlags& sf, const CommonFlags& f, std::size_t threads,
                      std::ostream& err) {
    std::vector<std::uint64_t> horizons;
    if (sf.horizons.empty()) {
        horizons = default_sweep_horizons();
    } else {
        for (const auto& t : sf.horizons) horizons.push_back(parse_horizon(t));
    }
    const auto algorithms = parse_algorithms(sf.algs);
    std::vector<std::string> horizon_names;
    for (auto t : horizons) horizon_names.push_back(std::to_string(t));

    for (double gamma : sf.gammas) {
        SweepSpec s = sweep_base(f, threads);
        s.kind = SweepKind::HorizonSweep;
        s.horizons = horizons;
        s.rho_rules = {RhoRule::exponent(gamma)};
        s.algorithms = algorithms;
        if (!f.quiet)
            err << "sweep-horizon gamma=" << gamma << ": " << algorithms.size() * horizons.size()
                << " cells\n";
        const SweepResult r = run_sweep(s);
        report_skipped(r, err);

        Header h = common_header("sweep-horizon", f, threads);
        h.insert(h.begin() + 1, {{"gamma", csv::format_shortest(gamma)},
                                 {"Ts", join(horizon_names)},
                                 {"algs", join(sf.algs)}});
        write_sweep(fs::path(f.out) / ("gamma_" + csv::format_shortest(gamma)), h, r);
    }
    return kOk;
}

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--reps", f.reps, "Repetitions per cell")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", f.seed, "Base seed; repetition k uses mix(seed, k)");
    cmd->add_option("--out", f.out, "Output directory");
    cmd->add_option("--noise-std", f.noise_std, "Gaussian reward noise standard deviation")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--C", f.reward_norm_c, "AUCB-TP reward normalization constant")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--radius-scale", f.radius_scale, "Confidence radius scale (10 by default)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--ssucb-radius", f.ssucb_radius, "SSUCB radius: classic or threshold")
        ->check(CLI::IsMember({"classic", "threshold"}));
    cmd->add_option("--delta", f.delta, "UCB-TP threshold parameter override")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_flag("--wall-time", f.wall_time,
                  "Record wall-clock time per run (makes runs.csv non-reproducible)");
    cmd->add_flag("-q,--quiet", f.quiet, "No progress output on stderr");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rested rotting bandits with infinitely many arms: simulations and sweeps",
                 "rotbench"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Key-value config file; command-line flags take precedence");
    std::size_t threads = 0;
    app.add_option("--threads", threads, "Worker threads (0 = all cores)")
        ->envname("SIM_THREADS");

    CommonFlags common;
    RunFlags run_flags;
    auto* run = app.add_subcommand("run", "Run one algorithm for several repetitions");
    run->add_option("--alg", run_flags.alg, "ucbtp, aucbtp or ssucb")->required();
    run->add_option("-T,--T,--horizon", run_flags.horizon, "Time horizon")->required();
    run->add_option("--rho", run_flags.rho, "Constant rotting rate in [0, 1)")
        ->check(CLI::Range(0.0, 1.0));
    run->add_option("--checkpoints", run_flags.checkpoints, "Log-spaced regret curve points")
        ->check(CLI::PositiveNumber);
    add_common(run, common);

    RhoSweepFlags rho_flags;
    auto* sweep_rho = app.add_subcommand("sweep-rho", "Regret versus rotting rate at fixed T");
    sweep_rho->add_option("-T,--T,--horizon", rho_flags.horizon, "Time horizon");
    sweep_rho->add_option("--gammas", rho_flags.gammas, "Exponents; rho = T^-gamma")
        ->delimiter(',');
    sweep_rho->add_option("--algs", rho_flags.algs, "Algorithms")->delimiter(',');
    add_common(sweep_rho, common);

    HorizonSweepFlags horizon_flags;
    auto* sweep_horizon =
        app.add_subcommand("sweep-horizon", "Regret versus T with rho = T^-gamma");
    sweep_horizon->add_option("--gamma", horizon_flags.gammas, "Exponent(s); one output per value")
        ->delimiter(',');
    sweep_horizon->add_option("--Ts", horizon_flags.horizons, "Horizons")->delimiter(',');
    sweep_horizon->add_option("--algs", horizon_flags.algs, "Algorithms")->delimiter(',');
    add_common(sweep_horizon, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    }

    threads = resolve_threads(threads);
    try {
        if (*run) return cmd_run(run_flags, common, threads, err);
        if (*sweep_rho) return cmd_sweep_rho(rho_flags, common, threads, err);
        return cmd_sweep_horizon(horizon_flags, common, threads, err);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << '\n';
        return kUsageError;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kIoError;
    }
}

}  // namespace rotbench
