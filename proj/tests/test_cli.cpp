#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

// End-to-end checks through the installed binary: exit codes and output.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout+stderr
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(HOOKLAB_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    while (size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.output.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("stats command prints the hook table") {
    RunResult r = run_cli("stats 7,5,4,1 --shifted");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("12,11,8,7,5,4,1 / 9,6,5,3,2 / 5,4,2,1 / 1") != std::string::npos);

    RunResult plain = run_cli("stats 2,2");
    CHECK(plain.exit_code == 0);
    CHECK(plain.output.find("3,2 / 2,1") != std::string::npos);
}

TEST_CASE("dd and decompose commands") {
    RunResult r = run_cli("dd 5,2,1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("6,4,4,1,1") != std::string::npos);

    RunResult d = run_cli("decompose 4,1,1 --t 3");
    CHECK(d.exit_code == 0);
    CHECK(d.output.find("\"core\": \"-\"") != std::string::npos);
    CHECK(d.output.find("\"bar0\": \"1\"") != std::string::npos);
}

TEST_CASE("sum and fit commands") {
    RunResult s = run_cli("sum --family dd --t 1 --mu - --n 2 --expr 'hsum(1)'");
    CHECK(s.exit_code == 0);
    CHECK(s.output.find("22") != std::string::npos);

    RunResult f = run_cli("fit --family dd --t 1 --mu - --nmax 4 --expr 'hsum(1)'");
    CHECK(f.exit_code == 0);
    CHECK(f.output.find("6n^2 - n") != std::string::npos);

    RunResult strict = run_cli("sum --family strict --mu - --n 3 --expr 'const(1)'");
    CHECK(strict.exit_code == 0);
    CHECK(strict.output.substr(0, 1) == "1");
}

TEST_CASE("verify command exit codes and formats") {
    // a single suite reports as JSON by default
    RunResult ok = run_cli("verify petreolle-dd --t 3 --nmax 2");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("\"1/6\"") != std::string::npos);
    CHECK(ok.output.find("\"1/72\"") != std::string::npos);
    CHECK(ok.output.find("\"pass\": true") != std::string::npos);

    RunResult plain = run_cli("verify petreolle-dd --t 3 --nmax 2 --format plain");
    CHECK(plain.exit_code == 0);
    CHECK(plain.output.find("PASS") != std::string::npos);

    RunResult csv = run_cli("verify petreolle-dd --t 3 --nmax 2 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.find("suite,input,lhs,rhs,equal") != std::string::npos);
    CHECK(csv.output.find("1/72") != std::string::npos);

    RunResult unknown = run_cli("verify petreolle");
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("stats 1,3").exit_code == 2);                       // not weakly decreasing
    CHECK(run_cli("dd 3,3").exit_code == 2);                          // not strict
    CHECK(run_cli("sum --family dd --t 2 --mu - --n 1 --expr 'hsum(1)'").exit_code == 2);
    CHECK(run_cli("sum --family sc --t 3 --mu - --n 1 --expr 'hsum(1)'").exit_code == 2);
    CHECK(run_cli("sum --family dd --t 1 --mu - --n 1 --expr 'hsum(1,2,3)'").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    RunResult bad_expr = run_cli("sum --family dd --t 1 --mu - --n 1 --expr 'bogus(1)'");
    CHECK(bad_expr.exit_code == 2);
    CHECK(bad_expr.output.find("bogus") != std::string::npos);
}
