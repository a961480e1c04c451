#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("rotbench_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

int cli(std::vector<std::string> args, std::string* err_text = nullptr) {
    std::ostringstream out, err;
    args.push_back("--quiet");
    const int code = rotbench::run_cli(args, out, err);
    if (err_text) *err_text = err.str();
    return code;
}

std::vector<std::string> lines(const fs::path& p) {
    std::ifstream in(p);
    std::vector<std::string> v;
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

std::vector<std::string> body(const fs::path& p) {
    std::vector<std::string> v;
    for (auto& l : lines(p))
        if (l.empty() || l[0] != '#') v.push_back(l);
    return v;
}

}  // namespace

TEST_CASE("run writes runs.csv and curves.csv") {
    TempDir d;
    REQUIRE(cli({"run", "--alg", "ucbtp", "--T", "1000", "--rho", "0", "--reps", "1", "--seed", "7",
                 "--out", d.path.string()}) == 0);
    const auto all = lines(d.path / "runs.csv");
    REQUIRE(!all.empty());
    CHECK(all[0] == "# schema=1");
    const auto runs = body(d.path / "runs.csv");
    REQUIRE(runs.size() == 2);
    CHECK(runs[0] == "algorithm,T,rho,rep,seed,final_regret,arms_sampled,wall_ms");
    CHECK(runs[1].rfind("ucbtp,1000,0,0,", 0) == 0);
    const auto curves = body(d.path / "curves.csv");
    CHECK(curves[0] == "algorithm,T,rho,rep,t,cum_regret");
    CHECK(curves.size() - 1 <= 101);
    CHECK(curves.back().rfind("ucbtp,1000,0,0,1000,", 0) == 0);
}

TEST_CASE("header echoes the resolved configuration") {
    TempDir d;
    REQUIRE(cli({"run", "--alg", "ssucb", "--T", "1e3", "--rho", "0.01", "--out", d.path.string()}) == 0);
    const auto all = lines(d.path / "runs.csv");
    auto has = [&](const std::string& s) {
        return std::find(all.begin(), all.end(), s) != all.end();
    };
    CHECK(has("# alg=ssucb"));
    CHECK(has("# T=1000"));
    CHECK(has("# rho=0.01"));
    CHECK(has("# C=93"));
    CHECK(all[1].rfind("# rotbench version=", 0) == 0);
}

TEST_CASE("repeated runs are byte-identical regardless of threads") {
    TempDir a, b;
    const std::vector<std::string> base{"run", "--alg", "aucbtp", "--T", "5000", "--rho", "0.001",
                                        "--reps", "4", "--seed", "3"};
    auto args_a = base;
    args_a.insert(args_a.end(), {"--out", a.path.string(), "--threads", "1"});
    auto args_b = base;
    args_b.insert(args_b.end(), {"--out", b.path.string(), "--threads", "3"});
    REQUIRE(cli(args_a) == 0);
    REQUIRE(cli(args_b) == 0);
    CHECK(body(a.path / "runs.csv") == body(b.path / "runs.csv"));
    CHECK(body(a.path / "curves.csv") == body(b.path / "curves.csv"));
}

TEST_CASE("usage errors exit with 2") {
    TempDir d;
    std::string err;
    CHECK(cli({"run", "--alg", "aucbtp", "--T", "9", "--out", d.path.string()}, &err) == 2);
    CHECK(err.find("H=3") != std::string::npos);
    CHECK(cli({"run", "--alg", "bogus", "--T", "100", "--out", d.path.string()}) == 2);
    CHECK(cli({"run", "--T", "100"}) == 2);
    CHECK(cli({"run", "--alg", "ucbtp", "--T", "0"}) == 2);
    CHECK(cli({"run", "--alg", "ucbtp", "--T", "100", "--rho", "1.5"}) == 2);
    CHECK(cli({"run", "--alg", "ucbtp", "--T", "100", "--frobnicate"}) == 2);
    CHECK(cli({}) == 2);
}

TEST_CASE("I/O failure exits with 1") {
    TempDir d;
    const fs::path file = d.path / "not_a_dir";
    std::ofstream(file) << "x";
    CHECK(cli({"run", "--alg", "ucbtp", "--T", "100", "--out", (file / "sub").string()}) == 1);
}

TEST_CASE("sweep-rho emits one sorted summary row per cell") {
    TempDir d;
    REQUIRE(cli({"sweep-rho", "--T", "2000", "--reps", "2", "--out", d.path.string()}) == 0);
    const auto rows = body(d.path / "summary.csv");
    REQUIRE(rows.size() == 25);
    CHECK(rows[0] == "algorithm,T,rho,mean_regret,ci95");
    std::vector<std::pair<std::string, double>> keys;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::istringstream ss(rows[i]);
        std::string alg, t, rho;
        std::getline(ss, alg, ',');
        std::getline(ss, t, ',');
        std::getline(ss, rho, ',');
        keys.emplace_back(alg, std::stod(rho));
    }
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    CHECK(body(d.path / "runs.csv").size() == 1 + 24 * 2);
}

TEST_CASE("sweep-horizon emits one summary per gamma") {
    TempDir d;
    REQUIRE(cli({"sweep-horizon", "--gamma", "0.5,1.5", "--Ts", "1,400,900", "--reps", "2",
                 "--algs", "ucbtp,aucbtp", "--out", d.path.string()}) == 0);
    for (const char* g : {"gamma_0.5", "gamma_1.5"}) {
        const auto rows = body(d.path / g / "summary.csv");
        // ucbtp at T = 1, 400, 900 and aucbtp at 400, 900
        CHECK(rows.size() == 1 + 5);
    }
}

TEST_CASE("config file values are overridden by flags") {
    TempDir d;
    const fs::path cfg = d.path / "bench.ini";
    std::ofstream(cfg) << "[run]\nalg=ssucb\nT=400\nseed=5\nreps=2\n";
    REQUIRE(cli({"--config", cfg.string(), "run", "--seed", "6", "--out", d.path.string()}) == 0);
    const auto all = lines(d.path / "runs.csv");
    CHECK(std::find(all.begin(), all.end(), "# alg=ssucb") != all.end());
    CHECK(std::find(all.begin(), all.end(), "# seed=6") != all.end());
    CHECK(body(d.path / "runs.csv").size() == 3);
}

TEST_CASE("help exits cleanly") {
    CHECK(cli({"--help"}) == 0);
}
