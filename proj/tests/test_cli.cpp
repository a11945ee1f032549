#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "dedekind/scan_io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string tmp_path(const std::string& name) {
    return std::string(TEST_TMP_DIR) + "/" + name;
}

RunResult run_cli(const std::string& args, const std::string& tag) {
    const std::string out_file = tmp_path("cli-" + tag + ".out");
    const std::string cmd =
        std::string(CLI_BINARY_PATH) + " " + args + " > " + out_file + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.output = dedekind::read_text_file(out_file);
    return result;
}

}  // namespace

TEST_CASE("cli sum prints the exact value with its embedding") {
    const auto r = run_cli("sum --chi1 3.2 --chi2 3.2 --a 2 --c 9", "sum");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("2/3 (0.666666666667 + 0i)") != std::string::npos);

    const auto zero = run_cli("sum --chi1 3.2 --chi2 3.2 --a 1 --c 9", "sum0");
    CHECK(zero.exit_code == 0);
    CHECK(zero.output.substr(0, 1) == "0");

    const auto viamatrix = run_cli("sum --chi1 3.2 --chi2 3.2 --gamma 2,1,9,5", "summat");
    CHECK(viamatrix.exit_code == 0);
    CHECK(viamatrix.output.find("2/3") != std::string::npos);
}

TEST_CASE("cli sum rejects bad input with exit code 2") {
    const auto r = run_cli("sum --chi1 3.2 --chi2 3.2 --a 2 --c 10", "sumbad");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("divisible") != std::string::npos);

    CHECK(run_cli("sum --chi1 3.2 --chi2 3.2 --a 3 --c 9", "sumgcd").exit_code == 2);
    CHECK(run_cli("sum --chi1 3.2 --chi2 5.4 --a 1 --c 15", "sumpar").exit_code == 2);
    CHECK(run_cli("sum --chi1 3.2 --chi2 3.2", "sumargs").exit_code == 2);
}

TEST_CASE("cli chars") {
    const auto r = run_cli("chars --q 5", "chars");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("5.2,4,5,odd") != std::string::npos);
    CHECK(r.output.find("5.3,4,5,odd") != std::string::npos);
    CHECK(r.output.find("5.4,2,5,even") != std::string::npos);
}

TEST_CASE("cli scan to csv file and the plot pipeline") {
    const std::string csv_path = tmp_path("scan55.csv");
    const auto scan = run_cli("scan --q1 5 --q2 5 --c-max 250 --out " + csv_path, "scan");
    CHECK(scan.exit_code == 0);
    const std::string csv = dedekind::read_text_file(csv_path);
    CHECK(csv.find("5,5,*,*,49,100,gamma0,reflection") != std::string::npos);

    const std::string svg_path = tmp_path("scan55.svg");
    const auto plot = run_cli("plot --in " + csv_path + " --out " + svg_path, "plot");
    CHECK(plot.exit_code == 0);
    const std::string svg = dedekind::read_text_file(svg_path);
    CHECK(svg.find("<circle") != std::string::npos);

    // the plotted point set is exactly the scanned one
    const auto parsed = dedekind::scan_from_csv(csv);
    size_t count = 0, pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        ++count;
        ++pos;
    }
    CHECK(count == parsed.points.size());
}

TEST_CASE("cli scan with an empty range writes a header-only file") {
    const std::string path = tmp_path("empty.csv");
    const auto r = run_cli("scan --q1 5 --q2 5 --c-max 20 --out " + path, "scanempty");
    CHECK(r.exit_code == 0);
    const std::string csv = dedekind::read_text_file(path);
    CHECK(csv.find("q1,q2,chi1,chi2") != std::string::npos);
    CHECK(csv.find("\n5,5,") == std::string::npos);
}

TEST_CASE("cli scan rejects unwritable output with exit code 3") {
    const auto r = run_cli("scan --q1 3 --q2 3 --c-max 9 --out /nonexistent-dir/x.csv", "io");
    CHECK(r.exit_code == 3);
}

TEST_CASE("cli verify passes on the small grid and honors --only") {
    const auto r = run_cli("verify --moduli 3 --samples 10 --seed 5 --threads 2", "verify");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all identities verified") != std::string::npos);

    const std::string report_path = tmp_path("verify.json");
    const auto only = run_cli(
        "verify --moduli 3,5 --samples 5 --only reciprocity-odd --out " + report_path,
        "verifyonly");
    CHECK(only.exit_code == 0);
    CHECK(only.output.find("reciprocity-odd") != std::string::npos);
    CHECK(only.output.find("crossed-hom") == std::string::npos);
    const std::string json = dedekind::read_text_file(report_path);
    CHECK(json.find("\"passed\": true") != std::string::npos);
}

TEST_CASE("cli verify fails with a witness under fault injection") {
    const auto r = run_cli(
        "verify --moduli 3 --samples 5 --only gauss-norm --inject-fault gauss-sum",
        "verifyfault");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("witness") != std::string::npos);

    const auto r2 = run_cli(
        "verify --moduli 3 --samples 5 --only crossed-hom --inject-fault dedekind-sum",
        "verifyfault2");
    CHECK(r2.exit_code == 1);
}

TEST_CASE("cli orbits") {
    const auto r = run_cli("orbits --q1 5 --q2 5", "orbits");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("orbit,representative,members") != std::string::npos);
    // header plus one line per orbit
    CHECK(std::count(r.output.begin(), r.output.end(), '\n') == 4);
    CHECK(r.output.find("0,5.2x5.2,5.2x5.2;5.3x5.3") != std::string::npos);

    const std::string prefix = tmp_path("orbit55");
    const auto scan = run_cli(
        "orbits --q1 5 --q2 5 --scan --c-max 150 --out " + prefix + " --seed 3", "orbitscan");
    CHECK(scan.exit_code == 0);
    CHECK(scan.output.find("audit ok") != std::string::npos);
    CHECK(dedekind::read_text_file(prefix + ".orbit0.csv").find("valid_for=") !=
          std::string::npos);
}

TEST_CASE("cli scan is byte-deterministic across thread counts") {
    const std::string one = tmp_path("det1.csv");
    const std::string eight = tmp_path("det8.csv");
    CHECK(run_cli("scan --q1 5 --q2 5 --c-max 250 --threads 1 --seed 9 --out " + one,
                  "det1").exit_code == 0);
    CHECK(run_cli("scan --q1 5 --q2 5 --c-max 250 --threads 8 --seed 9 --out " + eight,
                  "det8").exit_code == 0);
    CHECK(dedekind::read_text_file(one) == dedekind::read_text_file(eight));
}
