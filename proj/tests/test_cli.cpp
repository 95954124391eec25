#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>

#include "madelung/cli.hpp"
#include "madelung/io.hpp"
#include "madelung/simd/kernels.hpp"

using namespace madelung;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("madelung_cli_" + name);
    fs::remove_all(p);
    return p;
}

int run_binary(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " \"" MADELUNG_CLI_PATH "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

cli::RunConfig small(cli::Command c, const fs::path& dir) {
    cli::RunConfig cfg;
    cfg.command = c;
    cfg.out_dir = dir;
    cfg.points = c == cli::Command::evolve ? 1024 : 257;
    cfg.T_list = "0.5:2:lin:3";
    cfg.t_final = 0.05;
    cfg.dt = 1e-3;
    cfg.vc = 2.0;
    return cfg;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("every command writes its artifacts deterministically") {
    for (auto c : {cli::Command::solve, cli::Command::sweep, cli::Command::zerot, cli::Command::evolve, cli::Command::verify}) {
        for (auto f : {cli::Format::csv, cli::Format::json}) {
            CAPTURE(cli::to_string(c));
            auto a = small(c, scratch("det_a"));
            auto b = small(c, scratch("det_b"));
            a.format = b.format = f;
            std::ostringstream err;
            REQUIRE(cli::run(a, err) == cli::kExitOk);
            REQUIRE(cli::run(b, err) == cli::kExitOk);
            CHECK(err.str().empty());
            for (const auto& name : cli::artifact_names(a)) {
                CAPTURE(name);
                const std::string bytes = io::read_file(a.out_dir / name);
                CHECK(!bytes.empty());
                CHECK(bytes == io::read_file(b.out_dir / name));
            }
        }
    }
}

TEST_CASE("summary carries units and parameters") {
    auto cfg = small(cli::Command::solve, scratch("summary"));
    std::ostringstream err;
    REQUIRE(cli::run(cfg, err) == cli::kExitOk);
    const auto j = io::parse_json(io::read_file(cfg.out_dir / "summary.json"));
    CHECK(j.at("command") == "solve");
    CHECK(j.at("units").at("hbar") == 1.0);
    CHECK(j.at("parameters").at("T") == 1.0);
    CHECK(j.at("results").at("L_m").get<double>() > 0.9);
    const auto table = io::parse_csv(io::read_file(cfg.out_dir / "profile.csv"));
    CHECK(table.rows.size() == 257);
}

TEST_CASE("invalid parameters are usage errors") {
    auto cfg = small(cli::Command::solve, scratch("usage"));
    cfg.T = -1.0;
    std::ostringstream err;
    CHECK(cli::run(cfg, err) == cli::kExitUsage);
    const auto j = io::parse_json(err.str());
    CHECK(j.at("error").at("kind") == "usage");
    CHECK(j.at("error").at("diagnostics").at("T") == -1.0);

    auto sweep = small(cli::Command::sweep, scratch("usage_sweep"));
    sweep.T_list = "1:2:cubic:3";
    std::ostringstream err2;
    CHECK(cli::run(sweep, err2) == cli::kExitUsage);
}

TEST_CASE("runtime failures exit with status 1") {
    const fs::path file = scratch("blocker");
    io::write_file(file, "x");
    auto cfg = small(cli::Command::zerot, file / "sub");
    std::ostringstream err;
    CHECK(cli::run(cfg, err) == cli::kExitRuntime);
    CHECK(io::parse_json(err.str()).at("error").at("kind") == "io");
    fs::remove(file);
}

TEST_CASE("binary exit codes") {
    const fs::path dir = scratch("bin");
    CHECK(run_binary("zerot --points 65 --out-dir " + dir.string()) == 0);
    CHECK(fs::exists(dir / "zerot.csv"));
    CHECK(run_binary("zerot --ubar0 -1 --out-dir " + dir.string()) == 2);
    CHECK(run_binary("solve --T abc") == 2);
    CHECK(run_binary("nosuchcommand") == 2);
    CHECK(run_binary("") == 2);
    CHECK(run_binary("--help") == 0);
    CHECK(run_binary("evolve --vc 2 --t-final 0.05 --dt 1e-3 --points 1024 --format xml") == 2);
    CHECK(run_binary("zerot --out-dir " + (dir / "zerot.csv" / "x").string()) == 1);
}

TEST_CASE("output directory from the environment") {
    const fs::path dir = scratch("env");
    CHECK(run_binary("zerot --points 65", std::string(cli::kOutDirEnv) + "=" + dir.string()) == 0);
    CHECK(fs::exists(dir / "zerot.csv"));
    CHECK(fs::exists(dir / "summary.json"));
}

TEST_CASE("scalar and avx2 runs produce identical snapshots") {
    if (!simd::avx2_kernels()) return;
    const fs::path a = scratch("simd_scalar");
    const fs::path b = scratch("simd_avx2");
    const std::string args = "evolve --vc 2 --t-final 0.05 --dt 1e-3 --points 2048 --out-dir ";
    REQUIRE(run_binary(args + a.string(), "MADELUNG_SIMD=scalar") == 0);
    REQUIRE(run_binary(args + b.string(), "MADELUNG_SIMD=avx2") == 0);
    CHECK(io::read_file(a / "snapshots.csv") == io::read_file(b / "snapshots.csv"));
}

}
