// Golden-run tests for the CLI: exit-code semantics and byte-deterministic
// output. The grouplab binary path arrives via GROUPLAB_BIN.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kSrc = GROUPLAB_SOURCE_DIR;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("GROUPLAB_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("check frobenius C12 passes with exit 0") {
    auto res = run_cli("check frobenius C12");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("summary: 6 pass, 0 fail") != std::string::npos);
}

TEST_CASE("bijection exit codes and golden certificate") {
    auto res = run_cli("bijection Q8 C4xC2");
    CHECK(res.exit_code == 1);
    CHECK(res.out == slurp(kSrc + "/fixtures/golden_bijection_q8.json"));

    auto expected = run_cli("bijection Q8 C4xC2 --expect infeasible");
    CHECK(expected.exit_code == 0);

    auto wrong = run_cli("bijection D8 C4xC2 --expect infeasible");
    CHECK(wrong.exit_code == 1);

    auto feasible = run_cli("bijection D8 C4xC2 --expect feasible");
    CHECK(feasible.exit_code == 0);
}

TEST_CASE("rank 8 golden csv, byte-identical across runs") {
    auto res = run_cli("rank 8 --k 3");
    CHECK(res.exit_code == 0);
    CHECK(res.out == slurp(kSrc + "/fixtures/golden_rank8.csv"));
    auto res2 = run_cli("rank 8 --k 3");
    CHECK(res.out == res2.out);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("frobble").exit_code == 2);
    CHECK(run_cli("check").exit_code == 2);
    CHECK(run_cli("info Z99").exit_code == 2);
    CHECK(run_cli("rank 16").exit_code == 0);  // incomplete catalog -> warning, exit 0
}

TEST_CASE("incomplete catalog without advisory flag is a warning, not a failure") {
    auto res = run_cli("--catalog /nonexistent rank 18");
    CHECK(res.exit_code == 0);
    CHECK(res.out.empty());  // warning goes to stderr
    auto forced = run_cli("--catalog /nonexistent --advisory-incomplete rank 18");
    CHECK(forced.exit_code == 0);
    CHECK(forced.out.find("D18") != std::string::npos);
}

TEST_CASE("make emits a loadable cayley table") {
    auto res = run_cli("make Dic3");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("cayley v1\nn=12\n") != std::string::npos);
    std::string tmp = "/tmp/grouplab_cli_dic3.cay";
    {
        std::ofstream f(tmp);
        f << res.out;
    }
    auto reload = run_cli("info file:" + tmp);
    CHECK(reload.exit_code == 0);
    CHECK(reload.out.find("order 12") != std::string::npos);
}

TEST_CASE("sol counts") {
    auto res = run_cli("sol D6 -d 2");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("= 4") != std::string::npos);
    auto res2 = run_cli("sol A4 -d 6");
    CHECK(res2.out.find("= 12") != std::string::npos);
    // class-anchored U: [y]^G for a 3-cycle in D6 has two members
    auto res3 = run_cli("sol D6 -d 1 -U class:1");
    CHECK(res3.exit_code == 0);
    CHECK(res3.out.find("= 2") != std::string::npos);
}

TEST_CASE("check csv format carries the schema header") {
    auto res = run_cli("--format csv check frobenius C6");
    CHECK(res.exit_code == 0);
    CHECK(res.out.rfind("claim,group_label,params,", 0) == 0);
    CHECK(res.out.find("frobenius,C6,d=6,true,6,modulus,6,pass,") != std::string::npos);
}

TEST_CASE("info json names the structural fields") {
    auto res = run_cli("--format json info Q8");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"dedekind\": true") != std::string::npos);
    CHECK(res.out.find("\"two_group_class\": \"generalized-quaternion\"") != std::string::npos);
    CHECK(res.out.find("\"psi\": \"27\"") != std::string::npos);
}

TEST_CASE("verify fmain over the complete built-ins") {
    auto res = run_cli("verify fmain builtins:15");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("summary: 0 failures") != std::string::npos);
}

TEST_CASE("catalog directory through the environment variable") {
    setenv("GROUPLAB_CATALOG", (kSrc + "/catalog").c_str(), 1);
    auto res = run_cli("rank 24 --k 1");
    unsetenv("GROUPLAB_CATALOG");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("24,1,Q8xC3,189") != std::string::npos);
}

TEST_CASE("check json lines carry the report schema") {
    auto res = run_cli("--format json check dis D8 --d 1 --m 1");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"claim\":\"dis\"") != std::string::npos);
    CHECK(res.out.find("\"observed\":6") != std::string::npos);
    CHECK(res.out.find("\"verdict\":\"pass\"") != std::string::npos);
}

TEST_CASE("cl-target commands") {
    auto res = run_cli("cl-target Q8");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("target(Q8) = Q8") != std::string::npos);
    auto res2 = run_cli("cl-target A4 --refined");
    CHECK(res2.exit_code == 0);
    CHECK(res2.out.find("C2xC2xC3") != std::string::npos);
}
