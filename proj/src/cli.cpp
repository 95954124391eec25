#include "madelung/cli.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "madelung/calculus.hpp"
#include "madelung/error.hpp"
#include "madelung/evolution.hpp"
#include "madelung/io.hpp"
#include "madelung/observables.hpp"
#include "madelung/profile.hpp"
#include "madelung/verify.hpp"
#include "madelung/zero_temperature.hpp"

namespace madelung::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kProfilePoints = 4097;
constexpr std::size_t kEvolvePoints = 8192;

std::string data_name(const RunConfig& c, const char* stem) {
    return std::string(stem) + (c.format == Format::csv ? ".csv" : ".json");
}

std::string encode(const RunConfig& c, const io::CsvTable& table) {
    return c.format == Format::csv ? io::to_csv(table) : io::dump_json(io::table_json(table));
}

void require_positive(const char* name, double v) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ParameterError(std::string(name) + " must be positive and finite", {{name, v}});
}

json summary(const RunConfig& c, json parameters, json results) {
    return {{"command", to_string(c.command)}, {"parameters", std::move(parameters)}, {"results", std::move(results)},
            {"units", io::units_block()}};
}

void write(const RunConfig& c, const std::string& name, std::string_view bytes) {
    io::write_file(c.out_dir / name, bytes);
}

void run_solve(const RunConfig& c) {
    require_positive("T", c.T);
    require_positive("u0", c.u0);
    ProfileParams p;
    p.T = c.T;
    p.U0 = c.u0;
    p.n_points = c.points ? c.points : kProfilePoints;
    const ProfileSolution sol = solve_profile(p);
    write(c, data_name(c, "profile"), encode(c, io::profile_table(sol, c.shift_potential)));
    const json params = {{"T", p.T}, {"n_points", p.n_points}, {"shift_potential", c.shift_potential}, {"u0", p.U0}};
    const json results = {{"L_m", sol.half_length()}, {"U_bar", sol.average_potential()}, {"Z", sol.Z()},
                          {"entropy", sol.entropy()}, {"log_Z", sol.log_Z()}};
    write(c, "summary.json", io::dump_json(summary(c, params, results)));
}

void run_sweep(const RunConfig& c) {
    require_positive("u0", c.u0);
    const std::vector<double> Ts = io::parse_sweep_list(c.T_list);
    const std::size_t n = c.points ? c.points : kProfilePoints;
    const auto records = sweep_temperature(Ts, c.u0, {}, n);
    write(c, data_name(c, "sweep"), encode(c, io::sweep_table(records)));
    bool l_dec = true;
    bool u_inc = true;
    for (std::size_t i = 1; i < records.size(); ++i) {
        const bool ascending = records[i].T > records[i - 1].T;
        l_dec = l_dec && ascending && records[i].L_m < records[i - 1].L_m;
        u_inc = u_inc && ascending && records[i].U_bar > records[i - 1].U_bar;
    }
    const json params = {{"T_list", c.T_list}, {"n_points", n}, {"u0", c.u0}};
    const json results = {{"L_m_strictly_decreasing", l_dec}, {"U_bar_strictly_increasing", u_inc},
                          {"records", records.size()}};
    write(c, "summary.json", io::dump_json(summary(c, params, results)));
}

void run_zerot(const RunConfig& c) {
    const ZeroTLimit limit = zero_t_from_ubar(c.ubar0);
    const SpatialGrid grid = SpatialGrid::symmetric(limit.L0, c.points ? c.points : kProfilePoints);
    write(c, data_name(c, "zerot"), encode(c, io::zero_t_table(limit, grid)));
    const RealField rho = density_profile(limit, grid);
    const json params = {{"n_points", grid.size()}, {"ubar0", c.ubar0}};
    const json results = {{"A0", limit.A0},
                          {"L0", limit.L0},
                          {"U_bar", box_average_potential(limit, grid)},
                          {"entropy", shannon_entropy(rho)},
                          {"k0", limit.k0}};
    write(c, "summary.json", io::dump_json(summary(c, params, results)));
}

int run_evolve(const RunConfig& c) {
    require_positive("dt", c.dt);
    require_positive("t-final", c.t_final);
    if (c.snapshots == 0) throw ParameterError("snapshot count must be at least 1");
    const ZeroTLimit limit = zero_t_from_ubar(c.ubar0);
    const MovingPacket packet = make_moving_packet(limit, c.vc);
    const SpatialGrid grid = aligned_embedding_grid(packet, c.t_final, c.points ? c.points : kEvolvePoints,
                                                    kEmbeddingMarginL0 * limit.L0);

    const auto steps = static_cast<std::size_t>(std::llround(c.t_final / c.dt));
    const EvolutionConfig cfg{.grid = grid,
                              .dt = c.dt,
                              .t_final = c.t_final,
                              .snapshot_stride = std::max<std::size_t>(1, (steps + c.snapshots - 1) / c.snapshots),
                              .reference = packet,
                              .edge_exclusion = 5,
                              .wall_leak_limit = 1e-3};

    const ComplexField psi0 = build_packet(packet, grid, 0.0);
    const EvolutionResult res = evolve(psi0, cfg);
    write(c, data_name(c, "snapshots"), encode(c, io::snapshot_table(res.snapshots)));
    write(c, "shape_report.json", io::dump_json(io::shape_report_json(res.report, res.aborted, res.t_reached)));

    const auto& rep = res.report;
    const auto max_of = [](const std::vector<double>& v) { return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end()); };
    double energy_drift = 0.0;
    for (double e : rep.energy) energy_drift = std::max(energy_drift, std::abs(e - rep.energy.front()));
    double peak_offset = 0.0;
    for (double o : rep.peak_offset) peak_offset = std::max(peak_offset, std::abs(o));

    const json params = {{"dt", c.dt}, {"n_points", grid.size()}, {"q_max", grid.q_max()}, {"q_min", grid.q_min()},
                         {"snapshots", c.snapshots}, {"t_final", c.t_final}, {"ubar0", c.ubar0}, {"vc", c.vc}};
    const json results = {{"A0", limit.A0},
                          {"E_avg", packet.energy()},
                          {"L0", limit.L0},
                          {"aborted", res.aborted},
                          {"energy_drift", energy_drift},
                          {"k0", limit.k0},
                          {"max_norm_drift", max_of(rep.norm_drift)},
                          {"max_peak_offset", peak_offset},
                          {"max_shape_error", max_of(rep.shape_error)},
                          {"omega0", packet.omega0()},
                          {"p_avg", packet.momentum()},
                          {"spacing", grid.spacing()},
                          {"xi_rate", -packet.energy()}};
    write(c, "summary.json", io::dump_json(summary(c, params, results)));
    if (res.aborted) throw SolverError("probability reached the grid walls; results are partial", {{"t", res.t_reached}});
    return kExitOk;
}

int run_verify(const RunConfig& c) {
    const auto checks = run_verification(c.seed);
    json list = json::array();
    bool all = true;
    for (const auto& ch : checks) {
        all = all && ch.passed;
        list.push_back({{"comparison", ch.comparison}, {"name", ch.name}, {"passed", ch.passed},
                        {"threshold", ch.threshold}, {"value", ch.value}});
    }
    const json doc = {{"all_passed", all}, {"checks", list}, {"seed", c.seed}, {"units", io::units_block()}};
    write(c, "verify.json", io::dump_json(doc));
    return all ? kExitOk : kExitRuntime;
}

void report_error(std::ostream& err, const char* kind, const std::string& message, const Error::Diagnostics& diag) {
    json d = json::object();
    for (const auto& [k, v] : diag) d[k] = v;
    err << io::dump_json({{"error", {{"diagnostics", d}, {"kind", kind}, {"message", message}}}});
}

}  // namespace

const char* to_string(Command c) noexcept {
    switch (c) {
        case Command::solve: return "solve";
        case Command::sweep: return "sweep";
        case Command::zerot: return "zerot";
        case Command::evolve: return "evolve";
        case Command::verify: return "verify";
    }
    return "unknown";
}

std::vector<std::string> artifact_names(const RunConfig& c) {
    switch (c.command) {
        case Command::solve: return {data_name(c, "profile"), "summary.json"};
        case Command::sweep: return {data_name(c, "sweep"), "summary.json"};
        case Command::zerot: return {data_name(c, "zerot"), "summary.json"};
        case Command::evolve: return {data_name(c, "snapshots"), "shape_report.json", "summary.json"};
        case Command::verify: return {"verify.json"};
    }
    return {};
}

int run(const RunConfig& config, std::ostream& err) {
    try {
        std::error_code ec;
        std::filesystem::create_directories(config.out_dir, ec);
        if (ec) throw IoError("cannot create output directory '" + config.out_dir.string() + "': " + ec.message());
        switch (config.command) {
            case Command::solve: run_solve(config); return kExitOk;
            case Command::sweep: run_sweep(config); return kExitOk;
            case Command::zerot: run_zerot(config); return kExitOk;
            case Command::evolve: return run_evolve(config);
            case Command::verify: return run_verify(config);
        }
        return kExitOk;
    } catch (const Error& e) {
        const bool usage = e.kind() == ErrorKind::parameter || e.kind() == ErrorKind::sizing;
        report_error(err, usage ? "usage" : to_string(e.kind()), e.what(), e.diagnostics());
        return usage ? kExitUsage : kExitRuntime;
    } catch (const std::exception& e) {
        report_error(err, "runtime", e.what(), {});
        return kExitRuntime;
    }
}

}  // namespace madelung::cli
