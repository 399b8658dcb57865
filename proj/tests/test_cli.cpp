#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// Runs the CLI with stdout/stderr captured through temp files.
RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string out_file = "cli_out_" + std::to_string(counter) + ".txt";
    std::string err_file = "cli_err_" + std::to_string(counter) + ".txt";
    ++counter;

    std::string cmd = std::string(PVKIT_CLI_PATH) + " " + args + " >" + out_file + " 2>" + err_file;
    int status = std::system(cmd.c_str());

    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    auto slurp = [](const std::string& path) {
        std::ifstream f(path, std::ios::binary);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    std::remove(out_file.c_str());
    std::remove(err_file.c_str());
    return r;
}

} // namespace

TEST_CASE("dirichlet emits a json envelope with pi") {
    RunResult r = run_cli("dirichlet --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "dirichlet");
    CHECK(j["schema_version"] == "1");
    CHECK(std::abs(j["result"]["value"].get<double>() - M_PI) < 1e-6);
    CHECK(j["diagnostics"]["converged"] == true);
}

TEST_CASE("fourier1x with negative frequency returns +i*pi") {
    RunResult r = run_cli("fourier1x --omega -2");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["re"].get<double>() == 0.0);
    CHECK(std::abs(j["result"]["im"].get<double>() - M_PI) < 1e-12);
}

TEST_CASE("expression parse errors exit 3 with a position") {
    RunResult r = run_cli("pv --expr \"exp(i*\" --w 0");
    CHECK(r.exit_code == 3);
    CHECK(r.out.empty()); // no success output on failure
    CHECK(r.err.find("position 7") != std::string::npos);
}

TEST_CASE("unknown subcommands and flags exit 2 with usage") {
    RunResult r = run_cli("frobnicate");
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("Usage") != std::string::npos);

    RunResult r2 = run_cli("dirichlet --frob 3");
    CHECK(r2.exit_code == 2);

    RunResult r3 = run_cli("hilbert --expr \"cos(x)\"");
    CHECK(r3.exit_code == 2); // neither --w nor --grid

    RunResult r4 = run_cli("goursat --expr \"1/z\" --contour upper --w 0 --r 2 --R 1");
    CHECK(r4.exit_code == 2); // r >= R is a usage error

    RunResult r5 = run_cli("arc --expr \"1\" --w 0 --theta1 0 --theta2 1 --radii 0.1,0.2");
    CHECK(r5.exit_code == 2); // radii must decrease
}

TEST_CASE("evaluation errors exit 5") {
    // overflow: exp(z^2) on a radius-30 circle
    RunResult r = run_cli("goursat --expr \"exp(z^2)\" --contour circle --w 0 --r 30");
    CHECK(r.exit_code == 5);
    CHECK(r.out.empty());

    // pole on the path at an asymmetric parameter: subdivision closes in
    // until a node lands within one ulp of it
    RunResult p = run_cli("goursat --expr \"1/(z-exp(0.7*i))\" --contour circle --w 0 --r 1");
    CHECK((p.exit_code == 5 || p.exit_code == 4));
    CHECK(p.out.empty());
}

TEST_CASE("non-convergence exits 4 with diagnostics on stderr") {
    // power-law tail estimate cannot reach the default 1e-8 tolerance
    RunResult r = run_cli("pv --expr \"x/(1+x^2)\" --w 0");
    CHECK(r.exit_code == 4);
    CHECK(r.out.empty());
    CHECK(r.err.find("converge") != std::string::npos);
    CHECK(r.err.find("error_estimate") != std::string::npos);

    // loosening the tolerance makes the same computation succeed
    RunResult ok = run_cli("pv --expr \"x/(1+x^2)\" --w 0 --tol 1e-2");
    CHECK(ok.exit_code == 0);
    auto j = nlohmann::json::parse(ok.out);
    CHECK(std::abs(j["result"]["re"].get<double>() - M_PI) < 1e-3);
    CHECK(j["diagnostics"]["tail_strategy"] == "power_estimate");
}

TEST_CASE("identical argv produces byte-identical output") {
    const std::string cmd = "hilbert --expr \"cos(x)\" --grid 0:0.7853981633974483:9";
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);

    RunResult c = run_cli("pv --expr \"exp(i*x)\" --w 1");
    RunResult d = run_cli("pv --expr \"exp(i*x)\" --w 1");
    REQUIRE(c.exit_code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("csv and json encode the same numbers") {
    const std::string base = "hilbert --expr \"cos(x)\" --grid 0:1.5707963267948966:5";
    RunResult j = run_cli(base);
    RunResult c = run_cli(base + " --format csv");
    REQUIRE(j.exit_code == 0);
    REQUIRE(c.exit_code == 0);

    auto env = nlohmann::json::parse(j.out);
    std::vector<double> json_values = env["result"]["values"].get<std::vector<double>>();

    std::vector<double> csv_values;
    std::istringstream lines(c.out);
    std::string line;
    std::getline(lines, line); // header
    CHECK(line == "w,value");
    while (std::getline(lines, line)) {
        auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        csv_values.push_back(std::stod(line.substr(comma + 1)));
    }
    REQUIRE(csv_values.size() == json_values.size());
    for (size_t i = 0; i < csv_values.size(); ++i) CHECK(csv_values[i] == json_values[i]);

    // scalar commands render a single csv row
    RunResult dj = run_cli("dirichlet");
    RunResult dc = run_cli("dirichlet --format csv");
    auto denv = nlohmann::json::parse(dj.out);
    std::istringstream dlines(dc.out);
    std::getline(dlines, line);
    CHECK(line == "value");
    std::getline(dlines, line);
    CHECK(std::stod(line) == denv["result"]["value"].get<double>());
}

TEST_CASE("--out writes the envelope to a file and stdout stays empty") {
    std::string path = "cli_out_envelope.json";
    RunResult r = run_cli("fourier1x --omega 1 --out " + path);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    auto j = nlohmann::json::parse(f);
    CHECK(std::abs(j["result"]["im"].get<double>() + M_PI) < 1e-12);
    std::remove(path.c_str());
}

TEST_CASE("pv envelope carries the full diagnostic block") {
    RunResult r = run_cli("pv --expr \"exp(i*x)\" --w 0");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    auto d = j["diagnostics"];
    CHECK(d.contains("value_re"));
    CHECK(d.contains("value_im"));
    CHECK(d.contains("error_estimate"));
    CHECK(d.contains("core_value"));
    CHECK(d.contains("tail_value"));
    CHECK(d["tail_strategy"] == "oscillatory_acceleration");
    CHECK(d["intervals_used"].get<int>() >= 4);
    CHECK(d["converged"] == true);
    CHECK(std::abs(j["result"]["im"].get<double>() - M_PI) < 1e-6);
}

TEST_CASE("arc subcommand reports the convergence study") {
    RunResult r = run_cli("arc --expr \"exp(i*z)\" --w 0 --theta1 0 --theta2 3.14159265358979323846");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["estimates"].size() == 5);
    CHECK(std::abs(j["result"]["extrapolated"]["im"].get<double>() - M_PI) < 1e-7);

    RunResult csv = run_cli(
        "arc --expr \"exp(i*z)\" --w 0 --theta1 0 --theta2 3.141592653589793 --format csv");
    CHECK(csv.out.rfind("r,re,im,abs_deviation\n", 0) == 0);
}

TEST_CASE("goursat negative control on the unit circle") {
    RunResult r = run_cli("goursat --expr \"1/z\" --contour circle --w 0 --r 1");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["result"]["residual"].get<double>() - 2 * M_PI) < 1e-8);
}

TEST_CASE("golden outputs stay pinned") {
    struct Golden {
        const char* file;
        const char* args;
    };
    const Golden goldens[] = {
        {"arc.json", "arc --expr \"exp(i*z)\" --w 0 --theta1 0 --theta2 3.141592653589793"},
        {"pv.json", "pv --expr \"exp(i*x)\" --w 0"},
        {"hilbert.json", "hilbert --expr \"cos(x)\" --grid 0:0.7853981633974483:9"},
        {"fourier1x.json", "fourier1x --omega -2"},
        {"goursat.json", "goursat --expr \"exp(i*z)/z\" --contour upper --w 0 --r 0.5 --R 3"},
        {"dirichlet.json", "dirichlet"},
    };
    for (const Golden& g : goldens) {
        std::ifstream f(std::string(PVKIT_GOLDEN_DIR) + "/" + g.file, std::ios::binary);
        REQUIRE_MESSAGE(f.good(), "missing golden file ", g.file);
        std::ostringstream expected;
        expected << f.rdbuf();
        RunResult r = run_cli(g.args);
        REQUIRE(r.exit_code == 0);
        CHECK_MESSAGE(r.out == expected.str(), "golden mismatch for ", g.file);
    }
}
