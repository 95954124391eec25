#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "madelung/cli.hpp"

namespace {

void add_output_options(CLI::App* cmd, madelung::cli::RunConfig& cfg) {
    cmd->add_option("--out-dir", cfg.out_dir, "Directory for output files")->capture_default_str();
    cmd->add_option("--format", cfg.format, "Data file format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, madelung::cli::Format>{{"csv", madelung::cli::Format::csv},
                                                         {"json", madelung::cli::Format::json}},
            CLI::ignore_case));
    cmd->add_option("--seed", cfg.seed, "Seed for stochastic checks")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    using madelung::cli::Command;
    madelung::cli::RunConfig cfg;
    if (const char* dir = std::getenv(madelung::cli::kOutDirEnv)) cfg.out_dir = dir;

    CLI::App app{"Self-trapped maximum-entropy wave packets of a free particle (hbar = m = 1)"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "Solve the self-trapped profile at one T");
    solve->add_option("--T", cfg.T, "Lagrange parameter T > 0")->capture_default_str();
    solve->add_option("--u0", cfg.u0, "Quantum potential at the origin, U(0) > 0")->capture_default_str();
    solve->add_option("--points", cfg.points, "Output grid points (default 4097)");
    solve->add_flag("--shift-potential", cfg.shift_potential, "Shift U so its minimum is zero");
    add_output_options(solve, cfg);

    auto* sweep = app.add_subcommand("sweep", "Solve over a list of T values");
    sweep->add_option("--u0", cfg.u0, "Quantum potential at the origin")->capture_default_str();
    sweep->add_option("--T-list", cfg.T_list, "start:stop:lin|log:count or comma list")->capture_default_str();
    sweep->add_option("--points", cfg.points, "Grid points per profile (default 4097)");
    add_output_options(sweep, cfg);

    auto* zerot = app.add_subcommand("zerot", "Closed-form zero-T box solution");
    zerot->add_option("--ubar0", cfg.ubar0, "Average quantum potential U_bar0 > 0")->capture_default_str();
    zerot->add_option("--points", cfg.points, "Grid points on [-L0, L0] (default 4097)");
    add_output_options(zerot, cfg);

    auto* evolve = app.add_subcommand("evolve", "Crank-Nicolson evolution of the moving packet");
    evolve->add_option("--ubar0", cfg.ubar0, "Internal energy U_bar0 > 0")->capture_default_str();
    evolve->add_option("--vc", cfg.vc, "Uniform velocity")->capture_default_str();
    evolve->add_option("--t-final", cfg.t_final, "Final time")->capture_default_str();
    evolve->add_option("--dt", cfg.dt, "Time step")->capture_default_str();
    evolve->add_option("--points", cfg.points, "Embedding grid points (default 8192)");
    evolve->add_option("--snapshots", cfg.snapshots, "Number of snapshots after t = 0")->capture_default_str();
    add_output_options(evolve, cfg);

    auto* verify = app.add_subcommand("verify", "Run the built-in consistency checks");
    add_output_options(verify, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "{\n  \"error\": {\n    \"kind\": \"usage\",\n    \"message\": " << nlohmann::json(e.what()).dump()
                  << "\n  }\n}\n";
        return madelung::cli::kExitUsage;
    }

    if (solve->parsed()) cfg.command = Command::solve;
    else if (sweep->parsed()) cfg.command = Command::sweep;
    else if (zerot->parsed()) cfg.command = Command::zerot;
    else if (evolve->parsed()) cfg.command = Command::evolve;
    else cfg.command = Command::verify;

    return madelung::cli::run(cfg, std::cerr);
}
