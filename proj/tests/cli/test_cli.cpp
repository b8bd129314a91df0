// End-to-end tests for the nestcast command-line tool.  Each case runs
// the installed binary through /bin/sh, captures its output, and checks
// the documented behaviour: exit codes, table layouts, JSON schemas,
// DOT structure, the verification harness, and cache determinism.

#include "doctest.h"
#include "golden.hpp"
#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

/// Runs the CLI with the given arguments (and optional VAR=value
/// prefixes) through the shell, capturing the requested streams.
RunResult run_cli(const std::string& args, const std::string& env = "",
                  bool merge_stderr = false) {
    std::string cmd;
    if (!env.empty()) cmd += env + " ";
    cmd += "\"";
    cmd += NESTCAST_CLI_PATH;
    cmd += "\" " + args;
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int rc = ::pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::vector<std::string> data_lines(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> fields;
    std::string f;
    while (in >> f) fields.push_back(f);
    return fields;
}

void remove_tree(const std::string& dir) {
    REQUIRE(std::system(("rm -rf \"" + dir + "\"").c_str()) == 0);
}

std::string fresh_dir(const std::string& tag) {
    const std::string dir =
        "/tmp/nestcast_cli_" + tag + "_" + std::to_string(::getpid());
    remove_tree(dir);
    return dir;
}

} // namespace

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("trgs --k 0").status == 2);
    CHECK(run_cli("trgs --k 11").status == 2);
    CHECK(run_cli("trgs").status == 2);             // --k is required
    CHECK(run_cli("bogus").status == 2);            // unknown subcommand
    CHECK(run_cli("").status == 2);                 // a subcommand is required
    CHECK(run_cli("graph sideways --k 3").status == 2);
    CHECK(run_cli("graph middle --k 3 --arcs").status == 2);
    CHECK(run_cli("verify --suite everything").status == 2);

    const RunResult petersen = run_cli("hamilton odd --k 2", "", true);
    CHECK(petersen.status == 2);
    CHECK(petersen.out.find("Petersen") != std::string::npos);
}

TEST_CASE("resource caps exit with code 3 and a message") {
    const RunResult graph = run_cli("graph odd --k 10", "", true);
    CHECK(graph.status == 3);
    CHECK(graph.out.find("cap") != std::string::npos);
    CHECK(run_cli("two-factor --k 10").status == 3);
    CHECK(run_cli("hamilton odd --k 10").status == 3);
    CHECK(run_cli("hamilton middle --k 12").status == 3);
    // The cap is configurable.
    CHECK(run_cli("graph odd --k 4 --max-k 3").status == 3);
}

TEST_CASE("trgs prints the rank table as text") {
    const RunResult one = run_cli("trgs --k 1");
    CHECK(one.status == 0);
    const auto rows1 = data_lines(one.out);
    REQUIRE(rows1.size() == 1);
    CHECK(fields_of(rows1[0])[1] == "0");

    const RunResult four = run_cli("trgs --k 4");
    CHECK(four.status == 0);
    const auto rows4 = data_lines(four.out);
    REQUIRE(rows4.size() == 14);
    const auto last = fields_of(rows4.back());
    CHECK(last[0] == "13");
    CHECK(last[1] == "123");
}

TEST_CASE("trgs text output matches the frozen 42-rank table") {
    const RunResult r = run_cli("trgs --k 5");
    REQUIRE(r.status == 0);
    const auto rows = data_lines(r.out);
    const auto golden = testutil::golden_rows("rank_table_42.txt");
    REQUIRE(rows.size() == golden.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        CHECK(fields_of(rows[i]) == golden[i]);
}

TEST_CASE("trgs --json emits a round-tripping document") {
    const RunResult r = run_cli("trgs --k 4 --json");
    REQUIRE(r.status == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema"] == "nestcast.trgs.v1");
    CHECK(doc["k"] == 4);
    CHECK(doc["count"] == 14);
    REQUIRE(doc["rows"].size() == 14);
    CHECK(doc["rows"][0]["gamma"].is_null());
    CHECK(doc["rows"][13]["b"] == "123");
    CHECK(doc["rows"][13]["gamma"] == 1);
    CHECK(nlohmann::json::parse(doc.dump()) == doc);
}

TEST_CASE("graph odd --format dot is structurally sound") {
    const RunResult r = run_cli("graph odd --k 2 --format dot");
    REQUIRE(r.status == 0);
    CHECK(r.out.find("graph odd_k2 {") != std::string::npos);
    std::size_t labels = 0, edges = 0, pos = 0;
    while ((pos = r.out.find("[label=", pos)) != std::string::npos) ++labels, ++pos;
    pos = 0;
    while ((pos = r.out.find(" -- ", pos)) != std::string::npos) ++edges, ++pos;
    CHECK(labels == 10); // the k=2 odd graph is the Petersen graph
    CHECK(edges == 15);
}

TEST_CASE("graph json documents have the documented shape") {
    const RunResult odd = run_cli("graph odd --k 3 --arcs");
    REQUIRE(odd.status == 0);
    const nlohmann::json og = nlohmann::json::parse(odd.out);
    CHECK(og["schema"] == "nestcast.graph.v1");
    CHECK(og["family"] == "odd");
    CHECK(og["vertices"].size() == 35);
    CHECK(og["edges"].size() == 70);
    REQUIRE(og["arcs"].size() == 140);
    // Paired arcs use the same position and have colors summing to k.
    std::map<std::pair<int, int>, nlohmann::json> by_ends;
    for (const auto& arc : og["arcs"])
        by_ends[{arc["from"].get<int>(), arc["to"].get<int>()}] = arc;
    for (const auto& arc : og["arcs"]) {
        const auto back =
            by_ends.at({arc["to"].get<int>(), arc["from"].get<int>()});
        CHECK(back["position"] == arc["position"]);
        CHECK(back["color"].get<int>() + arc["color"].get<int>() == 3);
    }

    const RunResult middle = run_cli("graph middle --k 3");
    REQUIRE(middle.status == 0);
    const nlohmann::json mg = nlohmann::json::parse(middle.out);
    CHECK(mg["schema"] == "nestcast.graph.v1");
    CHECK(mg["family"] == "middle");
    CHECK(mg["vertices"].size() == 70);
    CHECK(mg["edges"].size() == 140);
}

TEST_CASE("two-factor emits a validated certificate") {
    const RunResult r = run_cli("two-factor --k 3");
    REQUIRE(r.status == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema"] == "nestcast.two_factor.v1");
    CHECK(doc["graph"] == "odd");
    REQUIRE(doc["cycles"].size() == 5);
    for (const auto& cycle : doc["cycles"]) CHECK(cycle["vertices"].size() == 7);
}

TEST_CASE("hamilton emits validated certificates for both graphs") {
    const RunResult odd = run_cli("hamilton odd --k 3");
    REQUIRE(odd.status == 0);
    const nlohmann::json oc = nlohmann::json::parse(odd.out);
    CHECK(oc["schema"] == "nestcast.hamilton.v1");
    CHECK(oc["graph"] == "odd");
    CHECK(oc["cycle"].size() == 35);

    const RunResult middle = run_cli("hamilton middle --k 3");
    REQUIRE(middle.status == 0);
    const nlohmann::json mc = nlohmann::json::parse(middle.out);
    CHECK(mc["graph"] == "middle");
    CHECK(mc["cycle"].size() == 70);
}

TEST_CASE("verify runs its suites and reports per-check lines") {
    const RunResult tables = run_cli("verify --suite tables");
    CHECK(tables.status == 0);
    CHECK(tables.out.find("seed 20260816\n") == 0);
    CHECK(tables.out.find("CHECK growth-strings: ok") != std::string::npos);
    CHECK(tables.out.find("FAIL") == std::string::npos);

    const RunResult all = run_cli("verify --suite all --max-k 3 --jobs 4");
    CHECK(all.status == 0);
    CHECK(all.out.find(" 0 failures") != std::string::npos);
    CHECK(all.out.find("hamilton-odd-k3") != std::string::npos);

    const RunResult seeded =
        run_cli("verify --suite properties --max-k 3 --seed 999");
    CHECK(seeded.status == 0);
    CHECK(seeded.out.find("seed 999\n") == 0);
}

TEST_CASE("cache hits are byte-identical to cold runs") {
    const std::string dir = fresh_dir("cache");
    const std::string env = "NESTCAST_CACHE_DIR=\"" + dir + "\"";

    const RunResult cold = run_cli("trgs --k 6 --json", env);
    REQUIRE(cold.status == 0);
    {
        std::ifstream cache_file(dir + "/nest_table_v1_k6.txt");
        CHECK(cache_file.good()); // the cold run populated the cache
    }
    const RunResult warm = run_cli("trgs --k 6 --json", env);
    REQUIRE(warm.status == 0);
    CHECK(cold.out == warm.out);

    const RunResult uncached = run_cli("trgs --k 6 --json");
    CHECK(uncached.out == cold.out);

    // A corrupted cache entry is regenerated, not trusted.
    {
        std::ofstream corrupt(dir + "/nest_table_v1_k6.txt", std::ios::trunc);
        corrupt << "not a nest table\n";
    }
    const RunResult healed = run_cli("trgs --k 6 --json", env);
    REQUIRE(healed.status == 0);
    CHECK(healed.out == cold.out);

    // The --cache-dir flag takes precedence over the environment.
    const std::string flag_dir = fresh_dir("cacheflag");
    const RunResult flagged =
        run_cli("--cache-dir \"" + flag_dir + "\" trgs --k 6 --json", env);
    REQUIRE(flagged.status == 0);
    CHECK(flagged.out == cold.out);
    std::ifstream flag_file(flag_dir + "/nest_table_v1_k6.txt");
    CHECK(flag_file.good());

    std::system(("rm -rf \"" + dir + "\" \"" + flag_dir + "\"").c_str());
}
