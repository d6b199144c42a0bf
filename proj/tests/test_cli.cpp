#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
    std::string out;
    int exit_code = -1;
};

RunResult run_sh(const std::string& cmd);

RunResult run(const std::string& args) {
    return run_sh(std::string(ZF_CLI_PATH) + " " + args);
}

RunResult run_sh(const std::string& shell_cmd) {
    std::string cmd = shell_cmd + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json first_line_json(const std::string& out) {
    return json::parse(out.substr(0, out.find('\n')));
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("lemma2 subcommand") {
    auto r = run("lemma2 5 5");
    CHECK(r.exit_code == 0);
    json j = first_line_json(r.out);
    CHECK(j["pairs_checked"] == 2);
    CHECK(j["violations"].empty());

    auto full = run("lemma2 5 20");
    CHECK(full.exit_code == 0);
    json jf = first_line_json(full.out);
    CHECK(jf["violations"].empty());
    CHECK(jf["growth_check_ok"] == true);

    CHECK(run("lemma2 4 16").exit_code == 2);
}

TEST_CASE("gen families") {
    auto r = run("gen all_connected 4");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 6);

    auto pet = run("gen generalized_petersen 5 2");
    CHECK(pet.out == run("gen petersen").out);

    CHECK(run("gen nosuchfamily 3").exit_code == 2);
    CHECK(run("gen generalized_petersen 5 3").exit_code == 2);

    auto rnd1 = run("gen random_min_degree 9 2 --seed 7 --count 5");
    auto rnd2 = run("gen random_min_degree 9 2 --seed 7 --count 5");
    CHECK(rnd1.out == rnd2.out);
    CHECK(count_lines(rnd1.out) == 5);
}

TEST_CASE("girth and zf pipelines") {
    auto g = run("gen cycle 7 | " + std::string(ZF_CLI_PATH) + " girth");
    json jg = first_line_json(g.out);
    CHECK(jg["girth"] == 7);

    auto z = run("gen cycle 9 | " + std::string(ZF_CLI_PATH) + " zf");
    CHECK(first_line_json(z.out)["zf"] == 2);

    auto acyclic = run("gen path 4 | " + std::string(ZF_CLI_PATH) + " girth");
    CHECK(first_line_json(acyclic.out)["girth"] == "acyclic");
}

TEST_CASE("closure subcommand") {
    auto r = run("gen path 3 | " + std::string(ZF_CLI_PATH) + " closure --set 0");
    json j = first_line_json(r.out);
    CHECK(j["closure"] == json({0, 1, 2}));
    CHECK(j["forced"] == json({1, 2}));
    CHECK(j["is_zero_forcing_set"] == true);
}

TEST_CASE("deltap subcommand") {
    auto r = run("gen cycle 5 | " + std::string(ZF_CLI_PATH) + " deltap --p 2");
    json j = first_line_json(r.out);
    CHECK(j["delta_p"] == 2);
    CHECK(j["argmin"] == json({0, 1}));
}

TEST_CASE("verify subcommand") {
    auto pet = run("gen petersen | " + std::string(ZF_CLI_PATH) +
                   " verify --exact --deterministic");
    CHECK(pet.exit_code == 0);
    json j = first_line_json(pet.out);
    CHECK(j["zf"] == 5);
    CHECK(j["bound"] == 5);
    CHECK(j["verdicts"]["zf_ge_bound"] == "pass");

    auto k33 = run("gen complete_bipartite 3 3 | " + std::string(ZF_CLI_PATH) +
                   " verify --exact --deterministic");
    json jk = first_line_json(k33.out);
    CHECK(jk["bound"] == 4);
    CHECK(jk["zf"] == 4);

    SECTION("solver cap skips instead of hanging") {
        auto capped = run("gen petersen | " + std::string(ZF_CLI_PATH) +
                          " verify --exact --cap 5");
        json jc = first_line_json(capped.out);
        CHECK(jc["verdicts"]["zf_ge_bound"] == "skipped: size");
    }

    SECTION("bad lines reported, run continues, exit code 2") {
        auto r = run_sh("printf '!!notgraph6\\nD?{\\n' | " + std::string(ZF_CLI_PATH) +
                        " verify");
        CHECK(r.exit_code == 2);
        CHECK(count_lines(r.out) == 2);
        CHECK(first_line_json(r.out).contains("error"));
    }
}

TEST_CASE("proof subcommand") {
    auto pet = run("gen petersen | " + std::string(ZF_CLI_PATH) + " proof");
    CHECK(pet.exit_code == 0);
    CHECK(first_line_json(pet.out)["verdict"] == "pass");

    auto k4 = run("gen complete 4 | " + std::string(ZF_CLI_PATH) + " proof");
    json j = first_line_json(k4.out);
    CHECK(j["verdict"].get<std::string>().starts_with("skipped"));
}

TEST_CASE("edge list input format") {
    auto r = run_sh("printf '3 0 1 1 2' | " + std::string(ZF_CLI_PATH) +
                    " zf --format edges");
    CHECK(first_line_json(r.out)["zf"] == 1);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
}
