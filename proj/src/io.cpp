#include "madelung/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "madelung/error.hpp"
#include "madelung/units.hpp"

namespace madelung::io {

namespace {

double parse_number(std::string_view token) {
    if (token == "inf") return HUGE_VAL;
    if (token == "-inf") return -HUGE_VAL;
    const std::string s(token);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) throw ParameterError("malformed number '" + s + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

void dump_value(const nlohmann::json& j, std::string& out, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                out += nlohmann::json(key).dump();
                out += ": ";
                dump_value(value, out, depth + 1);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // Arrays of scalars stay on one line to keep column data compact.
            bool scalars = true;
            for (const auto& v : j) scalars = scalars && !v.is_structured();
            if (scalars) {
                out += "[";
                bool first = true;
                for (const auto& v : j) {
                    if (!first) out += ", ";
                    first = false;
                    dump_value(v, out, depth + 1);
                }
                out += "]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                dump_value(v, out, depth + 1);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case nlohmann::json::value_t::number_float:
            out += format_number(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

nlohmann::json number_json(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

double number_from_json(const nlohmann::json& v) {
    if (v.is_string()) return parse_number(v.get<std::string>());
    return v.get<double>();
}

}  // namespace

std::string format_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    if (v == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_csv(const CsvTable& table) {
    std::string out;
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        if (c) out += ',';
        out += table.header[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format_number(row[c]);
        }
        out += '\n';
    }
    return out;
}

CsvTable parse_csv(std::string_view text) {
    CsvTable table;
    std::size_t pos = 0;
    bool header = true;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        const std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (line.empty()) continue;
        const auto cells = split(line, ',');
        if (header) {
            for (auto c : cells) table.header.emplace_back(c);
            header = false;
            continue;
        }
        if (cells.size() != table.header.size())
            throw ParameterError("CSV row has " + std::to_string(cells.size()) + " cells, header has " +
                                 std::to_string(table.header.size()));
        std::vector<double> row;
        row.reserve(cells.size());
        for (auto c : cells) row.push_back(parse_number(c));
        table.rows.push_back(std::move(row));
    }
    return table;
}

CsvTable profile_table(const ProfileSolution& sol, bool shift_potential) {
    CsvTable t{{"q", "rho", "R", "U"}, {}};
    const auto& grid = sol.grid();
    const auto U = sol.potential().values();
    double shift = 0.0;
    if (shift_potential) {
        shift = HUGE_VAL;
        for (double u : U) shift = std::min(shift, u);
    }
    t.rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        t.rows.push_back({grid.point(i), sol.density()[i], sol.amplitude()[i], U[i] - shift});
    return t;
}

CsvTable zero_t_table(const ZeroTLimit& limit, const SpatialGrid& grid) {
    const RealField R = amplitude_profile(limit, grid);
    const RealField U = box_potential(limit, grid);
    CsvTable t{{"q", "rho", "R", "U"}, {}};
    t.rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) t.rows.push_back({grid.point(i), R[i] * R[i], R[i], U[i]});
    return t;
}

CsvTable sweep_table(std::span<const SweepRecord> records) {
    CsvTable t{{"T", "L_m", "U_bar", "entropy", "Z"}, {}};
    for (const auto& r : records) t.rows.push_back({r.T, r.L_m, r.U_bar, r.entropy, r.Z});
    return t;
}

CsvTable snapshot_table(std::span<const Snapshot> snapshots) {
    CsvTable t{{"t", "q", "rho", "re_psi", "im_psi"}, {}};
    for (const auto& s : snapshots) {
        const auto& grid = s.psi.grid();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto v = s.psi[i];
            t.rows.push_back({s.t, grid.point(i), std::norm(v), v.real(), v.imag()});
        }
    }
    return t;
}

nlohmann::json table_json(const CsvTable& table) {
    nlohmann::json columns = nlohmann::json::object();
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        nlohmann::json col = nlohmann::json::array();
        for (const auto& row : table.rows) col.push_back(number_json(row[c]));
        columns[table.header[c]] = std::move(col);
    }
    nlohmann::json order = nlohmann::json::array();
    for (const auto& h : table.header) order.push_back(h);
    return {{"column_order", order}, {"columns", columns}, {"rows", table.rows.size()}};
}

CsvTable table_from_json(const nlohmann::json& j) {
    CsvTable t;
    for (const auto& h : j.at("column_order")) t.header.push_back(h.get<std::string>());
    const std::size_t rows = j.at("rows").get<std::size_t>();
    t.rows.assign(rows, std::vector<double>(t.header.size()));
    for (std::size_t c = 0; c < t.header.size(); ++c) {
        const auto& col = j.at("columns").at(t.header[c]);
        if (col.size() != rows) throw ParameterError("JSON column '" + t.header[c] + "' has the wrong length");
        for (std::size_t r = 0; r < rows; ++r) t.rows[r][c] = number_from_json(col[r]);
    }
    return t;
}

nlohmann::json units_block() { return {{"hbar", kHbar}, {"mass", kMass}}; }

nlohmann::json shape_report_json(const ShapeReport& report, bool aborted, double t_reached) {
    auto arr = [](const std::vector<double>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (double x : v) a.push_back(number_json(x));
        return a;
    };
    return {
        {"aborted", aborted},
        {"energy", arr(report.energy)},
        {"interior_fraction", report.interior_fraction},
        {"momentum", arr(report.momentum)},
        {"norm_drift", arr(report.norm_drift)},
        {"peak_offset", arr(report.peak_offset)},
        {"peak_position", arr(report.peak_position)},
        {"position_spread", arr(report.position_spread)},
        {"shape_error", arr(report.shape_error)},
        {"t_reached", t_reached},
        {"times", arr(report.times)},
        {"units", units_block()},
        {"wall_probability", arr(report.wall_probability)},
    };
}

std::string dump_json(const nlohmann::json& j) {
    std::string out;
    dump_value(j, out, 0);
    out += '\n';
    return out;
}

nlohmann::json parse_json(std::string_view text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParameterError(std::string("malformed JSON: ") + e.what());
    }
}

std::vector<double> parse_sweep_list(std::string_view spec) {
    std::vector<double> out;
    if (spec.find(':') == std::string_view::npos) {
        for (auto tok : split(spec, ',')) out.push_back(parse_number(tok));
        if (out.empty()) throw ParameterError("empty T list");
        return out;
    }
    const auto parts = split(spec, ':');
    if (parts.size() != 4) throw ParameterError("sweep list must be start:stop:lin|log:count");
    const double start = parse_number(parts[0]);
    const double stop = parse_number(parts[1]);
    std::size_t count = 0;
    const auto res = std::from_chars(parts[3].data(), parts[3].data() + parts[3].size(), count);
    if (res.ec != std::errc{} || res.ptr != parts[3].data() + parts[3].size() || count == 0)
        throw ParameterError("sweep count must be a positive integer");
    const bool log_spaced = parts[2] == "log";
    if (!log_spaced && parts[2] != "lin") throw ParameterError("sweep spacing must be 'lin' or 'log'");
    if (log_spaced && !(start > 0.0 && stop > 0.0)) throw ParameterError("log sweep needs positive endpoints");
    for (std::size_t i = 0; i < count; ++i) {
        const double f = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
        out.push_back(log_spaced ? std::exp(std::log(start) + f * (std::log(stop) - std::log(start)))
                                 : start + f * (stop - start));
    }
    out.front() = start;
    out.back() = count == 1 ? start : stop;
    return out;
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw IoError("failed writing '" + path.string() + "'");
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace madelung::io
