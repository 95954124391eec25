#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <limits>
#include <random>

#include "madelung/error.hpp"
#include "madelung/evolution.hpp"
#include "madelung/io.hpp"
#include "madelung/packet.hpp"
#include "madelung/profile.hpp"
#include "madelung/zero_temperature.hpp"

using namespace madelung;

namespace {

io::CsvTable random_table(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    std::uniform_int_distribution<int> expo(-300, 300);
    io::CsvTable t{{"a", "b", "c"}, {}};
    for (int r = 0; r < 40; ++r) {
        std::vector<double> row;
        for (int c = 0; c < 3; ++c) row.push_back(std::ldexp(mant(rng), expo(rng) / 4));
        t.rows.push_back(row);
    }
    t.rows[3][1] = std::numeric_limits<double>::infinity();
    t.rows[7][2] = 0.0;
    return t;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("number formatting") {
    CHECK(io::format_number(0.1) == "0.10000000000000001");
    CHECK(io::format_number(1.0) == "1");
    CHECK(io::format_number(-0.0) == "0");
    CHECK(io::format_number(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(io::format_number(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(io::format_number(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("column headers") {
    ProfileParams p;
    p.n_points = 65;
    const auto sol = solve_profile(p);
    CHECK(io::profile_table(sol).header == std::vector<std::string>{"q", "rho", "R", "U"});
    const auto z = zero_t_from_ubar(1.0);
    CHECK(io::zero_t_table(z, SpatialGrid::symmetric(z.L0, 33)).header == std::vector<std::string>{"q", "rho", "R", "U"});
    const std::vector<SweepRecord> recs{to_record(sol)};
    CHECK(io::sweep_table(recs).header == std::vector<std::string>{"T", "L_m", "U_bar", "entropy", "Z"});
    const SpatialGrid g(-1.0, 1.0, 5);
    const std::vector<Snapshot> snaps{{0.0, ComplexField(g, std::vector<std::complex<double>>(5, {0.5, -0.5}))}};
    const auto st = io::snapshot_table(snaps);
    CHECK(st.header == std::vector<std::string>{"t", "q", "rho", "re_psi", "im_psi"});
    CHECK(st.rows[2] == std::vector<double>{0.0, 0.0, 0.5, 0.5, -0.5});
    CHECK(io::to_csv(io::sweep_table(recs)).rfind("T,L_m,U_bar,entropy,Z\n", 0) == 0);
}

TEST_CASE("profile table walls and the shifted potential") {
    ProfileParams p;
    p.n_points = 65;
    const auto sol = solve_profile(p);
    const auto plain = io::profile_table(sol);
    const auto shifted = io::profile_table(sol, true);
    CHECK(std::isinf(plain.rows.front()[3]));
    CHECK(std::isinf(plain.rows.back()[3]));
    CHECK(plain.rows[32][3] == doctest::Approx(1.0));
    CHECK(shifted.rows[32][3] == doctest::Approx(0.0));
    const std::string csv = io::to_csv(plain);
    CHECK(csv.find(",inf\n") != std::string::npos);
    CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("csv round trip is byte identical") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 5; ++i) {
        const auto t = random_table(rng);
        const std::string once = io::to_csv(t);
        const auto back = io::parse_csv(once);
        CHECK(back.header == t.header);
        CHECK(back.rows == t.rows);
        CHECK(io::to_csv(back) == once);
    }
}

TEST_CASE("json table round trip is byte identical") {
    std::mt19937_64 rng(29);
    const auto t = random_table(rng);
    const std::string once = io::dump_json(io::table_json(t));
    const auto back = io::table_from_json(io::parse_json(once));
    CHECK(back.rows == t.rows);
    CHECK(io::dump_json(io::table_json(back)) == once);
    CHECK(once.find("\"inf\"") != std::string::npos);
}

TEST_CASE("json output is key sorted with scalar arrays inline") {
    const nlohmann::json j = {{"zeta", 1.5}, {"alpha", {{"b", 2}, {"a", "x"}}}, {"list", {0.25, -0.0}}};
    const std::string s = io::dump_json(j);
    CHECK(s == "{\n  \"alpha\": {\n    \"a\": \"x\",\n    \"b\": 2\n  },\n  \"list\": [0.25, 0],\n  \"zeta\": 1.5\n}\n");
    CHECK(io::dump_json(io::parse_json(s)) == s);
}

TEST_CASE("shape report round trip") {
    ShapeReport r;
    r.times = {0.0, 0.5};
    r.shape_error = {0.0, 0.01};
    r.norm_drift = {0.0, 1e-13};
    r.peak_position = {0.0, 1.0};
    r.peak_offset = {0.0, 0.002};
    r.energy = {3.0, 3.0};
    r.momentum = {2.0, 2.0};
    r.position_spread = {0.4, 0.5};
    r.wall_probability = {0.0, 0.0};
    r.interior_fraction = 0.98;
    const auto j = io::shape_report_json(r, false, 0.5);
    CHECK(j.at("units").at("hbar") == 1.0);
    CHECK(j.at("units").at("mass") == 1.0);
    const std::string s = io::dump_json(j);
    CHECK(io::dump_json(io::parse_json(s)) == s);
}

TEST_CASE("sweep lists") {
    const auto lin = io::parse_sweep_list("1:2:lin:5");
    CHECK(lin == std::vector<double>{1.0, 1.25, 1.5, 1.75, 2.0});
    const auto lg = io::parse_sweep_list("0.05:10:log:20");
    REQUIRE(lg.size() == 20);
    CHECK(lg.front() == 0.05);
    CHECK(lg.back() == 10.0);
    for (std::size_t i = 1; i + 1 < lg.size(); ++i)
        CHECK(lg[i] / lg[i - 1] == doctest::Approx(lg[i + 1] / lg[i]).epsilon(1e-12));
    CHECK(io::parse_sweep_list("0.5,1,2") == std::vector<double>{0.5, 1.0, 2.0});
    CHECK(io::parse_sweep_list("3:3:lin:1") == std::vector<double>{3.0});
    CHECK_THROWS_AS(io::parse_sweep_list("1:2:cubic:5"), ParameterError);
    CHECK_THROWS_AS(io::parse_sweep_list("0:2:log:5"), ParameterError);
    CHECK_THROWS_AS(io::parse_sweep_list("1:2:lin:0"), ParameterError);
    CHECK_THROWS_AS(io::parse_sweep_list("1:2:lin"), ParameterError);
    CHECK_THROWS_AS(io::parse_sweep_list("1,x"), ParameterError);
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(io::parse_csv("a,b\n1,2,3\n"), ParameterError);
    CHECK_THROWS_AS(io::parse_csv("a\nabc\n"), ParameterError);
    CHECK_THROWS_AS(io::parse_json("{"), ParameterError);
    CHECK_THROWS_AS(io::read_file("/nonexistent/dir/file.csv"), IoError);
    CHECK_THROWS_AS(io::write_file("/nonexistent/dir/file.csv", "x"), IoError);
}

TEST_CASE("file round trip") {
    const auto path = std::filesystem::temp_directory_path() / "madelung_io_test.csv";
    io::write_file(path, "a\n1\n");
    CHECK(io::read_file(path) == "a\n1\n");
    std::filesystem::remove(path);
}

}
