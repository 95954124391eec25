#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace madelung::cli {

enum class Command { solve, sweep, zerot, evolve, verify };
enum class Format { csv, json };

struct RunConfig {
    Command command = Command::solve;
    double T = 1.0;
    double u0 = 1.0;
    double ubar0 = 1.0;
    double vc = 0.0;
    double dt = 1e-4;
    double t_final = 1.0;
    std::size_t points = 0;  // 0: command default (4097 for profiles, 8192 for evolve)
    std::size_t snapshots = 10;
    std::string T_list = "0.05:10:log:20";
    bool shift_potential = false;
    std::filesystem::path out_dir = ".";
    Format format = Format::csv;
    std::uint64_t seed = 42;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnv = "MADELUNG_OUT_DIR";

const char* to_string(Command c) noexcept;

// Runs one command, writing its artifacts into config.out_dir. Errors are
// reported on `err` as a JSON document; the return value is the exit status.
int run(const RunConfig& config, std::ostream& err);

// Names of the files a command writes, in write order.
std::vector<std::string> artifact_names(const RunConfig& config);

}  // namespace madelung::cli
