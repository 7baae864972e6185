#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "domset/cli.hpp"

using namespace domset;

namespace {

struct CliRun {
    int exit_code = 0;
    std::string out, err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliRun r;
    r.exit_code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content) {
        path = std::string("/tmp/domset-test-") + name;
        std::ofstream(path) << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("analyze prints the decomposition as JSON") {
    CliRun r = run({"analyze", "--pattern", "star:5", "--json"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"rho\":3") != std::string::npos);
    CHECK(r.out.find("\"S\":[1,2,3,4]") != std::string::npos);
    CHECK(r.out.find("\"NS\":[0]") != std::string::npos);
    CHECK(r.out.find("tP_exponents") != std::string::npos);
}

TEST_CASE("solve exit codes distinguish the outcomes") {
    TempFile triangle("k3.el", "3 3\n0 1\n1 2\n0 2\n");

    CliRun found = run({"solve", "--graph", triangle.path, "--pattern", "clique:3"});
    CHECK(found.exit_code == 0);
    CHECK(found.out.find("0 1 2") != std::string::npos);

    CliRun missing = run({"solve", "--graph", triangle.path, "--pattern", "independent:2"});
    CHECK(missing.exit_code == 1);

    CliRun bad_pattern = run({"solve", "--graph", triangle.path, "--pattern", "blob:3"});
    CHECK(bad_pattern.exit_code == 2);

    CliRun bad_file = run({"solve", "--graph", "/nonexistent.el", "--pattern", "clique:3"});
    CHECK(bad_file.exit_code == 2);

    CliRun bad_usage = run({"solve", "--pattern", "clique:3"});
    CHECK(bad_usage.exit_code == 2);
}

TEST_CASE("oracle subcommand mirrors the solver on a hand instance") {
    TempFile c6("c6.el", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n");
    CliRun fast = run({"solve", "--graph", c6.path, "--pattern", "independent:2", "--json"});
    CliRun slow = run({"oracle", "--graph", c6.path, "--pattern", "independent:2", "--json"});
    CHECK(fast.exit_code == 0);
    CHECK(slow.exit_code == 0);
    CHECK(slow.out.find("\"route\":\"oracle-fallback\"") != std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
    TempFile c6("det.el", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n");
    std::vector<std::vector<std::string>> commands = {
        {"analyze", "--pattern", "matching:4", "--json"},
        {"solve", "--graph", c6.path, "--pattern", "independent:2", "--json", "--seed", "42"},
        {"verify-reduction", "--pattern", "clique:2", "--trials", "6", "--seed", "9", "--n", "4",
         "--m", "16"},
    };
    for (const auto& cmd : commands) {
        CliRun first = run(cmd);
        CliRun second = run(cmd);
        REQUIRE(first.exit_code == second.exit_code);
        REQUIRE(first.out == second.out);
        REQUIRE(first.err == second.err);
    }
}

TEST_CASE("gen-ov writes a graph that solve can consume") {
    std::string prefix = "/tmp/domset-test-ov";
    CliRun gen = run({"gen-ov", "--pattern", "clique:2", "--n", "4", "--m", "16", "--d", "5",
                      "--seed", "3", "--vectors", "planted-orthogonal", "--out", prefix});
    REQUIRE(gen.exit_code == 0);

    std::ifstream el(prefix + ".el");
    REQUIRE(el.good());
    std::ifstream blocks(prefix + ".blocks.json");
    REQUIRE(blocks.good());
    std::string blocks_text((std::istreambuf_iterator<char>(blocks)),
                            std::istreambuf_iterator<char>());
    CHECK(blocks_text.find("\"X\"") != std::string::npos);

    // planted vectors guarantee an orthogonal tuple, hence a solution
    CliRun solve_run = run({"solve", "--graph", prefix + ".el", "--pattern", "clique:2"});
    CHECK(solve_run.exit_code == 0);

    std::remove((prefix + ".el").c_str());
    std::remove((prefix + ".blocks.json").c_str());
}

TEST_CASE("verify-reduction reports full equivalence") {
    CliRun r = run({"verify-reduction", "--pattern", "independent:2", "--trials", "9", "--seed",
                    "1", "--n", "4", "--m", "16", "--d", "5"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "9/9 equivalent\n");
}

TEST_CASE("bench prints one row per size") {
    CliRun r = run({"bench", "--pattern", "clique:3", "--sizes", "8", "--sizes", "10", "--seed",
                    "5"});
    CHECK(r.exit_code == 0);
    int newlines = static_cast<int>(std::count(r.out.begin(), r.out.end(), '\n'));
    CHECK(newlines == 3);  // header + two rows
}

TEST_CASE("JSON outputs carry the fields the shipped schemas require") {
    nlohmann::json analyze = nlohmann::json::parse(run({"analyze", "--pattern", "cycle:5",
                                                        "--json"}).out);
    for (const char* key : {"rho", "S", "NS", "R", "matching", "cover", "tP_exponents"})
        REQUIRE(analyze.contains(key));
    CHECK(analyze["rho"].is_number_integer());
    CHECK(analyze["tP_exponents"]["m_exp"].is_number());

    TempFile k3("schema-k3.el", "3 3\n0 1\n1 2\n0 2\n");
    nlohmann::json solved =
        nlohmann::json::parse(run({"solve", "--graph", k3.path, "--pattern", "clique:3",
                                   "--json"}).out);
    for (const char* key : {"found", "route", "case_labels"}) REQUIRE(solved.contains(key));
    CHECK(solved["found"].is_boolean());
    CHECK(solved["witness"].is_array());
    CHECK(solved["case_labels"].is_array());
}

TEST_CASE("help is exit code zero") {
    CliRun r = run({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("analyze") != std::string::npos);
}
