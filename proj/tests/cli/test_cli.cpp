#include "doctest.h"
#include "json.hpp"

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Spawns the binary through the shell; stderr is dropped so the tests
// assert only on the stdout contract and the exit code.
RunResult run_cli(const std::string& args, const std::string& env = {}) {
    std::string cmd = env.empty() ? std::string() : env + " ";
    cmd += std::string(BMEAS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    RunResult r;
    r.out = std::move(out);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

}  // namespace

TEST_CASE("lebesgue moments table") {
    const auto r = run_cli("moments --p 1/2 --n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "k,j\n0,1\n1,1/2\n2,1/3\n3,1/4\n");
}

TEST_CASE("point mass at one evaluates to e^omega") {
    const auto r = run_cli("eval --p 0 --omega 1 --method product");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("value\n2.718281828", 0) == 0);
}

TEST_CASE("integral routes agree through the cli") {
    const std::string want = "value\n8/9\n";
    for (const char* m : {"moments", "det3", "det104"}) {
        const auto r = run_cli(std::string("integrate --p 1/3 --poly 0,-1,3 --method ") + m);
        CHECK(r.exit_code == 0);
        CHECK(r.out == want);
    }
}

TEST_CASE("identity suite passes and repeats byte for byte") {
    const auto a = run_cli("verify --suite all --grid default");
    CHECK(a.exit_code == 0);
    const auto b = run_cli("verify --suite all --grid default");
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("suite,p,omega,m,residual,tolerance,pass\n", 0) == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("moments --p 1/2 --n 3 --bogus").exit_code == 2);
    CHECK(run_cli("moments --p notanumber --n 3").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("corollary --which pow --p 1/2 --omega 1/2 --terms 5").exit_code == 2);
    CHECK(run_cli("verify --grid exotic").exit_code == 2);
    CHECK(run_cli("eval --p 1/2 --omega 1 --tol 0").exit_code == 2);
}

TEST_CASE("module domain errors exit 1") {
    CHECK(run_cli("integrate --p 1 --poly 1,1 --method det3").exit_code == 1);
    CHECK(run_cli("corollary --which log --p 1/2 --omega 3/2 --terms 5").exit_code == 1);
    CHECK(run_cli("oracle --f exp --p 0.5 --depth 30").exit_code == 1);
    CHECK(run_cli("eval --p 1/3 --omega 20 --method logseries").exit_code == 1);
}

TEST_CASE("json output round trips") {
    const auto r = run_cli("qpoly --n 2 --roots --format json");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("command") == "qpoly");
    CHECK(j.at("rows").size() == 1);
    CHECK(j.at("rows")[0].at("coefficients") == "0;1;-1");
    CHECK(j.at("rows")[0].at("root_count") == "2");
    CHECK(j.at("rows")[0].at("all_simple") == "true");
}

TEST_CASE("monte carlo runs are seed deterministic") {
    const std::string args = "oracle-mc --f x^1 --p 0.5 --samples 20000 --seed 42";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(run_cli("oracle-mc --f x^1 --p 0.5 --samples 20000 --seed 43").out != a.out);
}

TEST_CASE("precision environment variable") {
    const auto good = run_cli("eval --p 1/2 --omega 1", "BMEAS_PRECISION_DIGITS=34");
    CHECK(good.exit_code == 0);
    CHECK(good.out == "value\n1.7182818284590453\n");
    CHECK(run_cli("eval --p 1/2 --omega 1", "BMEAS_PRECISION_DIGITS=banana").exit_code == 2);
}
