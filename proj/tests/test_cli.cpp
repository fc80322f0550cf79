// End-to-end tests driving the installed CLI binary through a shell.
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "ivpoly/json_io.hpp"

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

CommandResult run_cli(const std::string& args) {
    std::string cmd = std::string(IVPOLY_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    CommandResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) res.output += buf.data();
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/ivpoly_test_") + name;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("fixdiv") {
    CommandResult res = run_cli("fixdiv \"[0,-1,1]\"");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "2\n");

    CHECK(run_cli("fixdiv \"[0,-1,1]/2\"").exit_code == 2);
    CHECK(run_cli("fixdiv \"oops\"").exit_code == 2);
}

TEST_CASE("member") {
    CHECK(run_cli("member \"[0,-1,1]/2\"").output == "true\n");
    CHECK(run_cli("member \"[1,0,1]/2\"").output == "false\n");
}

TEST_CASE("construct-lengths summary and verify round trip") {
    std::string file = temp_path("lengths22.json");
    CommandResult res = run_cli("construct-lengths 2,2 --out " + file);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("n=2 lengths=[2,2] degree=7 factorizations=2") != std::string::npos);

    CommandResult ver = run_cli("verify " + file);
    CHECK(ver.exit_code == 0);
    CHECK(ver.output.find("verification: PASS") != std::string::npos);
}

TEST_CASE("construct-transfer and verify") {
    std::string file = temp_path("transfer2.json");
    CommandResult res = run_cli("construct-transfer 2 --out " + file);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("lengths_xH=[2,3]") != std::string::npos);
    CHECK(run_cli("verify " + file).exit_code == 0);
}

TEST_CASE("verify fails on a tampered artifact") {
    std::string file = temp_path("tampered.json");
    CHECK(run_cli("construct-lengths 2,2 --out " + file).exit_code == 0);

    std::ifstream in(file);
    ivpoly::io::json j = ivpoly::io::json::parse(in);
    in.close();
    j["design"]["c"] = "25";
    std::ofstream out(file);
    out << j.dump(2);
    out.close();

    CommandResult res = run_cli("verify " + file);
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("FAIL") != std::string::npos);
    CHECK(res.output.find("verification: FAIL") != std::string::npos);
}

TEST_CASE("construct output is deterministic modulo the timestamp") {
    std::string f1 = temp_path("det1.json"), f2 = temp_path("det2.json");
    CHECK(run_cli("construct-lengths 2,3 --out " + f1).exit_code == 0);
    CHECK(run_cli("construct-lengths 2,3 --out " + f2).exit_code == 0);
    std::ifstream in1(f1), in2(f2);
    ivpoly::io::json j1 = ivpoly::io::json::parse(in1);
    ivpoly::io::json j2 = ivpoly::io::json::parse(in2);
    j1.erase("generated_at");
    j2.erase("generated_at");
    CHECK(j1.dump() == j2.dump());
}

TEST_CASE("factorize, engine and oracle routes") {
    std::string parts = temp_path("parts.json");
    {
        std::ofstream out(parts);
        out << "[[0,1],[-1,1]]";
    }
    CommandResult res = run_cli("factorize --parts " + parts + " --den 2");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("factorizations=1 lengths=[1]") != std::string::npos);

    CommandResult oracle = run_cli("factorize --parts " + parts + " --den 2 --oracle");
    CHECK(oracle.exit_code == 0);
    CHECK(oracle.output.find("factorizations=1 lengths=[1]") != std::string::npos);

    // x^2 - x cannot carry denominator 4
    CHECK(run_cli("factorize --parts " + parts + " --den 4").exit_code == 2);
}

TEST_CASE("factorize reports the connected-graph note") {
    // Three lifted parts whose indispensable sets only intersect pairwise;
    // see the matching engine test for the residue layout.
    using namespace ivpoly;
    auto root = [](int m3, int m5, int m7) {
        return crt_solve({{0, 2}, {m3, 3}, {m5, 5}, {m7, 7}});
    };
    ZPoly A = ZPoly::from_roots({root(0, 0, 1), root(2, 0, 2), root(0, 0, 3)});
    ZPoly B = ZPoly::from_roots({root(1, 0, 0), root(1, 1, 0), root(1, 2, 0)});
    ZPoly C = ZPoly::from_roots({root(0, 3, 0), root(0, 4, 4), root(0, 3, 5), root(0, 4, 6)});
    auto [parts, cert] = lift({A, B, C});

    std::string file = temp_path("graph_parts.json");
    {
        ivpoly::io::json arr = ivpoly::io::json::array();
        for (const ZPoly& p : parts) arr.push_back(ivpoly::io::zpoly_to_json(p));
        std::ofstream out(file);
        out << arr.dump();
    }
    CommandResult res = run_cli("factorize --parts " + file + " --den 105");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("factorizations=1 lengths=[1]") != std::string::npos);
    CHECK(res.output.find("connected-graph") != std::string::npos);
}

TEST_CASE("argument errors exit with 2 and one-line messages") {
    CommandResult res = run_cli("construct-lengths 1,2");
    CHECK(res.exit_code == 2);
    CHECK(res.output.rfind("error:", 0) == 0);
    CHECK(res.output.find('\n') == res.output.size() - 1);

    CHECK(run_cli("construct-lengths").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("verify /nonexistent.json").exit_code == 2);
    CHECK(run_cli("construct-transfer 0").exit_code == 2);
}

TEST_CASE("composite-c construction through the CLI") {
    std::string file = temp_path("composite.json");
    CommandResult res = run_cli("construct-lengths 2,2 --c-extra 3^2 --out " + file);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("degree=10") != std::string::npos);
    CHECK(run_cli("verify " + file).exit_code == 0);
}

}  // TEST_SUITE
