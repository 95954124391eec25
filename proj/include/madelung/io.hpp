#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "madelung/evolution.hpp"
#include "madelung/profile.hpp"
#include "madelung/zero_temperature.hpp"

namespace madelung::io {

// 17 significant digits; infinities as the literal `inf` / `-inf`; -0 as 0.
std::string format_number(double v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

// Comma separated, '\n' line endings, no trailing commas.
std::string to_csv(const CsvTable& table);
CsvTable parse_csv(std::string_view text);

CsvTable profile_table(const ProfileSolution& sol, bool shift_potential = false);  // q,rho,R,U
CsvTable zero_t_table(const ZeroTLimit& limit, const SpatialGrid& grid);          // q,rho,R,U
CsvTable sweep_table(std::span<const SweepRecord> records);                       // T,L_m,U_bar,entropy,Z
CsvTable snapshot_table(std::span<const Snapshot> snapshots);                     // t,q,rho,re_psi,im_psi

// Column-oriented JSON: one array per CSV column; infinities as the string "inf".
nlohmann::json table_json(const CsvTable& table);
CsvTable table_from_json(const nlohmann::json& j);

nlohmann::json units_block();
nlohmann::json shape_report_json(const ShapeReport& report, bool aborted, double t_reached);

// Keys in lexicographic order, two-space indent, numbers via format_number,
// trailing newline.
std::string dump_json(const nlohmann::json& j);
nlohmann::json parse_json(std::string_view text);

// `start:stop:lin|log:count` or a comma-separated list.
std::vector<double> parse_sweep_list(std::string_view spec);

void write_file(const std::filesystem::path& path, std::string_view bytes);
std::string read_file(const std::filesystem::path& path);

}  // namespace madelung::io
