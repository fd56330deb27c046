#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "wrc/json_io.hpp"

using namespace wrc;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(WRC_BIN_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    CliResult r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

} // namespace

TEST_CASE("betti text output matches the printed table") {
    CliResult r = run_cli("betti --d 6 --e 2");
    CHECK(r.exit_code == 0);
    std::string want = "   0  1  2  3  4  5 6\n"
                       "0: 1  .  .  .  .  . .\n"
                       "1: . 10 20 15  4  . .\n"
                       "2: . 10 40 60 40 10 .\n"
                       "3: .  1 10 30 40 25 6\n";
    CHECK(r.out == want);
}

TEST_CASE("gb --check reports the verified basis") {
    CliResult r = run_cli("gb --d 3 --e 2 --check");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("GROEBNER: true, 6 generators, initial ideal: 6 monomials") == 0);
}

TEST_CASE("runs are byte-identical") {
    for (const char* args : {"betti --d 4 --e 3", "resolve --d 2 --e 2 --steps 3 --format json",
                             "verify --d 2 --e 2 --format json", "lattice --d 3 --e 2"}) {
        CliResult a = run_cli(args);
        CliResult b = run_cli(args);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("json outputs round-trip through the library parsers") {
    CliResult betti = run_cli("betti --d 3 --e 2 --format json");
    CHECK(betti.exit_code == 0);
    CHECK(betti_from_json(json::parse(betti.out)) == betti_table_EN(3, 2));

    CliResult hil = run_cli("hilbert --d 3 --e 2 --order 12 --format json");
    CHECK(hil.exit_code == 0);
    BiPoly coeffs = series_coefficients_from_json(json::parse(hil.out).at("reduced"));
    CHECK(coeffs == hilbert_series_R(3, 2).expand(12));

    CliResult res = run_cli("resolve --d 2 --e 2 --steps 3 --format json");
    CHECK(res.exit_code == 0);
    CurveData c = build_curve(2, 2);
    Resolution parsed = resolution_from_json(json::parse(res.out), c.ambient);
    QuotientRing ring(c);
    Resolution direct = resolve_k(ring, 3);
    REQUIRE(parsed.steps.size() == direct.steps.size());
    for (std::size_t i = 0; i < parsed.steps.size(); ++i) {
        CHECK(parsed.steps[i].source_twists == direct.steps[i].source_twists);
        CHECK(parsed.steps[i].entries == direct.steps[i].entries);
    }

    CliResult lat = run_cli("lattice --d 3 --e 2 --degree-cap 3 --format json");
    CHECK(lat.exit_code == 0);
    auto pts = lattice_from_json(json::parse(lat.out));
    auto direct_pts = lattice_point_grid(build_curve(3, 2), 3);
    REQUIRE(pts.size() == direct_pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(pts[i].i == direct_pts[i].i);
        CHECK(pts[i].j == direct_pts[i].j);
        CHECK(pts[i].member == direct_pts[i].member);
    }
}

TEST_CASE("lattice csv round-trips") {
    CliResult lat = run_cli("lattice --d 3 --e 3 --degree-cap 2");
    CHECK(lat.exit_code == 0);
    auto pts = lattice_from_csv(lat.out);
    auto direct = lattice_point_grid(build_curve(3, 3), 2);
    REQUIRE(pts.size() == direct.size());
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(pts[i].member == direct[i].member);
}

TEST_CASE("exit codes: parameter errors give 2, budget and cap exhaustion give 3") {
    CHECK(run_cli("curve --d 0 --e 2").exit_code == 2);
    CHECK(run_cli("verify --d 0 --e 2").exit_code == 2);
    CHECK(run_cli("betti --d 3 --e 2 --format yaml").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("gb --d 4 --e 4 --budget 2").exit_code == 3);
    CHECK(run_cli("resolve --d 3 --e 2 --steps 4 --degree-cap 5").exit_code == 3);
}

TEST_CASE("verify emits one line per named check and a summary") {
    CliResult r = run_cli("verify --d 2 --e 2");
    CHECK(r.exit_code == 0);
    for (const char* name : {"determinantal", "groebner", "initial_ideal", "standard_monomials",
                             "associated_graded", "hilbert_series", "cohen_macaulay", "poincare",
                             "golod", "semigroup"})
        CHECK(r.out.find(std::string("PASS ") + name) != std::string::npos);
    CHECK(r.out.find("RESULT: PASS") != std::string::npos);

    CliResult j = run_cli("verify --d-max 2 --e-max 2 --format json");
    CHECK(j.exit_code == 0);
    json parsed = json::parse(j.out);
    CHECK(parsed.at("all_pass").get<bool>());
    CHECK(parsed.at("cells").size() == 4);
}

TEST_CASE("budget exhaustion marks checks SKIP, not FAIL") {
    CliResult r = run_cli("verify --d 4 --e 4 --budget 10");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("SKIP determinantal") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("RESULT: PASS") != std::string::npos);
}

TEST_CASE("selftest runs its seeded suites") {
    CliResult r = run_cli("selftest --seed 7 --cases 50");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("failures 0") != std::string::npos);
}

TEST_CASE("--out writes the report to a file") {
    std::string path = "/tmp/wrc_cli_out_test.json";
    std::remove(path.c_str());
    CliResult r = run_cli("betti --d 3 --e 2 --format json --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::FILE* f = std::fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string content;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) content.append(buf.data(), n);
    std::fclose(f);
    CHECK(betti_from_json(json::parse(content)) == betti_table_EN(3, 2));
    std::remove(path.c_str());
}
