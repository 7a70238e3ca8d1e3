#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "leafspan/graph.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Shell out to the built binary; stdout and stderr land in scratch files.
RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path dir = fs::temp_directory_path();
    const fs::path out = dir / ("leafspan_out_" + std::to_string(++counter));
    const fs::path err = dir / ("leafspan_err_" + std::to_string(counter));
    const std::string command =
        std::string(LEAFSPAN_CLI_PATH) + " " + args + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(command.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    fs::remove(out);
    fs::remove(err);
    return r;
}

fs::path write_corpus(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("cli invariants on inline and named graphs") {
    RunResult r = run_cli("invariants --g6 Bw");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 3);
    CHECK(j["min_degree"] == 2);
    CHECK(j["leaf"] == 2);
    CHECK(j["circumference"] == 3);
    CHECK(j["hamiltonian"] == true);

    r = run_cli("invariants --named petersen");
    REQUIRE(r.exit_code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["leaf"] == 6);
    CHECK(j["circumference"] == 9);
    CHECK(j["hamiltonian"] == false);
    CHECK(j["traceable"] == true);

    r = run_cli("invariants --named g1 --n 10");
    REQUIRE(r.exit_code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["min_degree"] == 2);
    CHECK(j["leaf"] == 3);
    CHECK(j["circumference"] == 9);
}

TEST_CASE("cli invariants witness and formats") {
    RunResult r = run_cli("invariants --named petersen --witness");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["witness"]["cycle"].size() == 9);
    CHECK(j["witness"]["cds"].size() == 4);

    r = run_cli("invariants --named petersen --format tsv");
    REQUIRE(r.exit_code == 0);
    const auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].rfind("graph6\tn\t", 0) == 0);
    CHECK(rows[1].rfind("I?LRCecq?\t10\t15\t3\t3\t1\t3\t1\t4\t9\t6\t9\t10\t0\t1\t1\t3\t0", 0) == 0);
}

TEST_CASE("cli invariants from file and stdin") {
    const fs::path corpus = write_corpus("inv_corpus.g6", ">>graph6<<Bw\nDhc\n");
    RunResult r = run_cli("invariants --file " + corpus.string());
    REQUIRE(r.exit_code == 0);
    const auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(nlohmann::json::parse(rows[0])["n"] == 3);
    CHECK(nlohmann::json::parse(rows[1])["n"] == 5);
    fs::remove(corpus);
}

TEST_CASE("cli invariants error paths") {
    CHECK(run_cli("invariants --g6 'B'").exit_code == 2);
    CHECK(run_cli("invariants --named nosuch").exit_code == 2);
    CHECK(run_cli("invariants --named g1").exit_code == 2);       // missing --n
    CHECK(run_cli("invariants --named petersen --n 10").exit_code == 2);
    CHECK(run_cli("invariants --g6 Bw --named petersen").exit_code == 2);
    CHECK(run_cli("invariants --file /nonexistent/x.g6").exit_code == 2);
}

TEST_CASE("cli gen") {
    RunResult r = run_cli("gen --named cycle --n 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "Dhc\n");

    r = run_cli("gen --named petersen-triangle");
    REQUIRE(r.exit_code == 0);
    CHECK(leafspan::parse_graph6(lines_of(r.out)[0]).order() == 12);

    r = run_cli("gen --family f6 --s 4");
    REQUIRE(r.exit_code == 0);
    CHECK(leafspan::parse_graph6(lines_of(r.out)[0]).order() == 14);

    r = run_cli("gen --family f3 --a 2 --b 2 --c 2");
    REQUIRE(r.exit_code == 0);
    CHECK(leafspan::parse_graph6(lines_of(r.out)[0]).order() == 8);

    CHECK(run_cli("gen --family f3 --a 1 --b 2 --c 2").exit_code == 2);
    CHECK(run_cli("gen --family f4 --a 1 --b 1").exit_code == 2);
    CHECK(run_cli("gen --family f9 --s 4").exit_code == 2);
    CHECK(run_cli("gen --named petersen --family f6 --s 4").exit_code == 2);
    CHECK(run_cli("gen").exit_code == 2);

    r = run_cli("gen --family f1 --part-a A_ --part-b A_");
    REQUIRE(r.exit_code == 0);
    const leafspan::Graph bridge = leafspan::parse_graph6(lines_of(r.out)[0]);
    CHECK(bridge.order() == 4);
    CHECK(bridge.size() == 3);
}

TEST_CASE("cli enumerate") {
    RunResult r = run_cli("enumerate --n 5");
    REQUIRE(r.exit_code == 0);
    CHECK(lines_of(r.out).size() == 21);

    CHECK(run_cli("enumerate --n 0").exit_code == 2);
    CHECK(run_cli("enumerate --n 11").exit_code == 2);
    CHECK(run_cli("enumerate").exit_code == 2);
}

TEST_CASE("cli enumerate respects the env budget") {
    const fs::path dir = fs::temp_directory_path();
    const fs::path out = dir / "leafspan_env_out";
    const std::string cmd = std::string("env LEAFSPAN_BUDGET_N=4 ") + LEAFSPAN_CLI_PATH +
                            " enumerate --n 5 > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 2);
    fs::remove(out);
}

TEST_CASE("cli check over enumed corpora") {
    RunResult r = run_cli("check --enumerate 4 --rules all");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["corpus"] == "connected<=4");
    bool saw_relaxed = false;
    for (const auto& rule : j["rules"]) {
        if (rule["id"] == "relaxed-thm4") {
            saw_relaxed = true;
            CHECK(rule["counterexamples"].size() == 3);
        } else {
            CHECK(rule["counterexamples"].empty());
        }
    }
    CHECK(saw_relaxed);

    r = run_cli("check --enumerate 7 --rules thm4,lem5,lem6 --jobs 4");
    CHECK(r.exit_code == 0);

    r = run_cli("check --enumerate 4 --rules all --format tsv");
    REQUIRE(r.exit_code == 0);
    CHECK(lines_of(r.out).size() == 20);  // header + 19 rules
}

TEST_CASE("cli check relaxed diagnostic separates petersen from g2") {
    RunResult gen_p = run_cli("gen --named petersen");
    RunResult gen_g2 = run_cli("gen --named g2 --n 10");
    const fs::path corpus = write_corpus("mix.g6", gen_p.out + gen_g2.out);
    RunResult r = run_cli("check --g6-file " + corpus.string() + " --rules relaxed-thm4");
    REQUIRE(r.exit_code == 0);  // diagnostic rules never fail the run
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["rules"][0]["pass"] == 1);
    REQUIRE(j["rules"][0]["counterexamples"].size() == 1);
    const std::string flagged = j["rules"][0]["counterexamples"][0]["graph6"];
    CHECK(flagged != lines_of(gen_p.out)[0]);
    fs::remove(corpus);
}

TEST_CASE("cli check corpus hygiene") {
    const fs::path corpus = write_corpus("bad.g6", "Bw\n##\nDhc\n");
    RunResult lenient = run_cli("check --g6-file " + corpus.string() + " --rules thm4");
    CHECK(lenient.exit_code == 0);
    CHECK(lenient.err.find("skipped 1") != std::string::npos);

    RunResult strict = run_cli("check --g6-file " + corpus.string() + " --rules thm4 --strict");
    CHECK(strict.exit_code == 2);
    CHECK(strict.err.find("line 2") != std::string::npos);
    fs::remove(corpus);
}

TEST_CASE("cli check budget skips and exit code 3") {
    RunResult big = run_cli("gen --family f3 --a 5 --b 5 --c 5");
    REQUIRE(big.exit_code == 0);
    const fs::path corpus = write_corpus("big.g6", big.out);

    RunResult lenient = run_cli("check --g6-file " + corpus.string() + " --rules lem10");
    REQUIRE(lenient.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(lenient.out);
    CHECK(j["rules"][0]["budget_skipped"] == 1);

    RunResult strict = run_cli("check --g6-file " + corpus.string() + " --rules lem10 --strict-budget");
    CHECK(strict.exit_code == 3);
    fs::remove(corpus);
}

TEST_CASE("cli usage errors") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("check --rules thm4").exit_code == 2);  // no corpus
    CHECK(run_cli("check --enumerate 4 --g6-file x --rules thm4").exit_code == 2);
    CHECK(run_cli("check --enumerate 4 --rules nosuch").exit_code == 2);
    CHECK(run_cli("check --enumerate 4 --rules thm4 --jobs 0").exit_code == 2);
    CHECK(run_cli("check --enumerate 99 --rules thm4").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("check --help").exit_code == 0);
}
