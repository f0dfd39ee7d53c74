#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CmdResult {
    int status;
    std::string out;
};

// Runs the installed binary with stderr dropped; stdout and the exit status
// are what the contract pins down.
CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/zerogeom_cli_test_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("certify reports the verdict as json and exits zero") {
    const auto path = write_temp("quad.txt", "1 3 1\n");
    const auto res = run_cli("certify real-rooted " + path);
    CHECK(res.status == 0);
    CHECK(res.out ==
          "{\"verdict\":\"REAL_ROOTED\",\"degree\":2,\"distinct_real_roots\":2,"
          "\"isolation\":[{\"lo\":\"-4\",\"hi\":\"-2\",\"mult\":1},"
          "{\"lo\":\"-2\",\"hi\":\"0\",\"mult\":1}],\"fail_reason\":null}\n");
}

TEST_CASE("certify failures exit one") {
    const auto path = write_temp("complexpair.txt", "1 0 1\n");
    const auto real = run_cli("certify real-rooted " + path);
    CHECK(real.status == 1);
    CHECK(real.out.find("\"verdict\":\"FAIL\"") != std::string::npos);
    // The same polynomial is weakly stable.
    const auto hurwitz = run_cli("certify hurwitz " + path);
    CHECK(hurwitz.status == 0);
    CHECK(hurwitz.out.find("\"verdict\":\"WEAKLY_HURWITZ\"") != std::string::npos);
}

TEST_CASE("certify membership honors the degree bound flag") {
    const auto path = write_temp("row.txt", "1 3 1\n");
    CHECK(run_cli("certify p-plus " + path).status == 0);
    CHECK(run_cli("certify p-plus --bound 1 " + path).status == 1);
    CHECK(run_cli("certify p-plus --bound 7 " + path).status == 0);
}

TEST_CASE("transform prints the coefficient line") {
    const auto path = write_temp("ones.txt", "1 2 1\n");
    const auto res = run_cli("transform --op L " + path);
    CHECK(res.status == 0);
    CHECK(res.out == "1 3 1\n");

    const auto json = run_cli("transform --op L --output json " + path);
    CHECK(json.status == 0);
    CHECK(json.out == "{\"coeffs\":[\"1\",\"3\",\"1\"]}\n");

    const auto sr = run_cli("transform --op Sr --r 2 " + write_temp("b4.txt", "1 4 6 4 1\n"));
    CHECK(sr.out == "1 16 35 16 1\n");

    const auto missing = run_cli("transform --op U " + path);
    CHECK(missing.status == 2);
}

TEST_CASE("stdin dash feeds the polynomial") {
    // popen runs /bin/sh, so build the pipeline by hand.
    const std::string cmd =
        std::string("echo '1 2 1' | ") + CLI_BINARY_PATH + " certify real-rooted - 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    CHECK(WEXITSTATUS(raw) == 0);
    CHECK(out.find("\"verdict\":\"REAL_ROOTED\"") != std::string::npos);
}

TEST_CASE("json polynomials are accepted on input") {
    const auto path = write_temp("as_json.txt", "{\"coeffs\":[\"1\",\"3\",\"1\"]}");
    const auto res = run_cli("transform --op L " + path);
    CHECK(res.status == 0);
    CHECK(res.out == "1 8 1\n");
}

TEST_CASE("usage and io errors exit two") {
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("no-such-command").status == 2);
    CHECK(run_cli("certify real-rooted /no/such/file.txt").status == 2);
    const auto bad = write_temp("bad.txt", "1 x 2\n");
    CHECK(run_cli("certify real-rooted " + bad).status == 2);
    CHECK(run_cli("certify bogus-mode " + bad).status == 2);
    CHECK(run_cli("iterate --op T " + write_temp("it.txt", "1 1\n")).status == 2);
}

TEST_CASE("help exits zero") {
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("certify --help").status == 0);
}

TEST_CASE("iterate stops early and exits one") {
    const auto path = write_temp("flat.txt", "1 1 1\n");
    const auto res = run_cli("iterate --op L --depth 2 --check nonneg " + path);
    CHECK(res.status == 1);
    CHECK(res.out.find("\"depth_achieved\":1") != std::string::npos);
    CHECK(res.out.find("\"failing_iterate\":\"1 -1 1\"") != std::string::npos);

    const auto ok = run_cli("iterate --op L --depth 3 --check p-plus " +
                            write_temp("row21.txt", "1 2 1\n"));
    CHECK(ok.status == 0);
    CHECK(ok.out.find("\"depth_achieved\":3") != std::string::npos);
}

TEST_CASE("identity subcommand verifies and exits by verdict") {
    const auto res = run_cli("identity --kind jacobi --n 5");
    CHECK(res.status == 0);
    CHECK(res.out ==
          "{\"identity\":\"JACOBI\",\"n\":5,\"mode\":\"FULL_EXPANSION\","
          "\"trials\":0,\"verdict\":true,\"counterexample\":null}\n");

    const auto rnd = run_cli("identity --kind el-exp --n 6 --mu 0:1,2:-1 --trials 10 --seed 7");
    CHECK(rnd.status == 0);
    CHECK(rnd.out.find("\"verdict\":true") != std::string::npos);
}

TEST_CASE("experiment subcommands emit one json record per line") {
    const auto res = run_cli("borosmoll --m-max 2 --check coeffs");
    CHECK(res.status == 0);
    CHECK(res.out ==
          "{\"experiment\":\"coeffs\",\"parameters\":{\"m\":\"0\",\"d\":\"1\"},"
          "\"verdict\":\"PASS\",\"witness\":null}\n"
          "{\"experiment\":\"coeffs\",\"parameters\":{\"m\":\"1\",\"d\":\"3/2,1\"},"
          "\"verdict\":\"PASS\",\"witness\":null}\n"
          "{\"experiment\":\"coeffs\",\"parameters\":{\"m\":\"2\",\"d\":\"21/8,15/4,3/2\"},"
          "\"verdict\":\"PASS\",\"witness\":null}\n");

    CHECK(run_cli("borosmoll --m-max 6 --check qr").status == 0);
    CHECK(run_cli("borosmoll --m-max 6 --check fact0").status == 0);
    CHECK(run_cli("borosmoll --m-max 6 --check logconcave --depth 3").status == 0);

    const auto finding = run_cli("multiplier --lambda 1,0,1 --n-max 3");
    CHECK(finding.status == 1);
    CHECK(finding.out.find("\"verdict\":\"FINDING\"") != std::string::npos);

    const auto sector = run_cli("sector --alpha 1,-1 --theta 0.5 --poly " +
                                write_temp("sec.txt", "1 2 1\n"));
    CHECK(sector.status == 0);
    CHECK(sector.out.find("\"verdict\":\"PASS\"") != std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
    const std::string args = "borosmoll --m-max 8 --check logconcave --depth 4";
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    CHECK(first.status == 0);
    CHECK(first.out == second.out);

    const std::string id = "identity --kind el-exp --n 7 --mu 0:1,1:1/2 --trials 20 --seed 99";
    CHECK(run_cli(id).out == run_cli(id).out);
}

TEST_CASE("selftest subset passes") {
    const auto res = run_cli("selftest");
    CHECK(res.status == 0);
    CHECK(res.out.find("[PASS] 1.") != std::string::npos);
    CHECK(res.out.find("[PASS] 13.") != std::string::npos);
    CHECK(res.out.find("all criteria passed") != std::string::npos);
    CHECK(res.out.find("[FAIL]") == std::string::npos);
}
