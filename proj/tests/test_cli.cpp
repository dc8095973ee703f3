// Exercises the installed command-line interface end to end: exit codes,
// determinism of stored reports, and the report summarizer.  Expects the
// path of the CLI binary as argv[1] and a scratch directory as argv[2].

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    if (ok) {
        std::printf("ok: %s\n", what.c_str());
    } else {
        std::printf("FAILED: %s\n", what.c_str());
        ++failures;
    }
}

int run(const std::string& cmd) {
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string normalized_report(const std::string& path) {
    nlohmann::json j = nlohmann::json::parse(slurp(path));
    for (auto& c : j["cases"]) c["elapsed_ms"] = 0;
    return j.dump();
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <cli-path> <scratch-dir>\n", argv[0]);
        return 2;
    }
    std::string cli = argv[1];
    std::string dir = argv[2];
    std::filesystem::create_directories(dir);
    std::string quiet = " > /dev/null 2>&1";

    check(run(cli + " list" + quiet) == 0, "list exits 0");
    check(run(cli + " list --format json > " + dir + "/list.json 2>/dev/null") == 0,
          "list --format json exits 0");
    {
        nlohmann::json cases = nlohmann::json::parse(slurp(dir + "/list.json"));
        check(cases.is_array() && cases.size() >= 40, "catalog has at least 40 cases");
        bool t2 = false;
        for (const auto& c : cases)
            if (c["id"] == "T2" && c["strategy"] == "series") t2 = true;
        check(t2, "catalog lists T2 as a series case");
    }

    check(run(cli + " verify --ids RRintro --order 60 --seed 7" + quiet) == 0,
          "verify --ids RRintro --order 60 --seed 7 exits 0");
    check(run(cli + " verify --ids NOPE" + quiet) == 2, "unknown id exits 2");
    check(run(cli + " verify --ids RR17,ALT --format json --parallelism 2 > " + dir +
              "/stdout.json 2>/dev/null") == 0,
          "verify --format json --parallelism 2 exits 0");
    {
        nlohmann::json j = nlohmann::json::parse(slurp(dir + "/stdout.json"));
        check(j["cases"].size() == 2 && j["cases"][0]["status"] == "pass",
              "json output lands on stdout with per-case statuses");
    }
    check(run(cli + " verify --ids MUTANT --with-mutant" + quiet) == 1,
          "the corrupted case makes verify exit 1");

    std::string r1 = dir + "/r1.json", r2 = dir + "/r2.json";
    check(run(cli + " verify --suite quick --seed 42 --ids RRintro,RR17,T3.11,E3,B53 --output " +
              r1 + quiet) == 0,
          "quick subset run exits 0");
    check(run(cli + " verify --suite quick --seed 42 --ids RRintro,RR17,T3.11,E3,B53 --output " +
              r2 + quiet) == 0,
          "repeat run exits 0");
    check(slurp(r1) == slurp(r2) ||
              normalized_report(r1) == normalized_report(r2),
          "repeated runs produce identical reports up to timings");
    {
        nlohmann::json j = nlohmann::json::parse(slurp(r1));
        check(j["suite"] == "quick" && j["seed"] == 42, "report carries suite and seed");
        check(j["cases"].size() == 5, "report holds every requested case");
    }

    check(run(cli + " report " + r1 + " > " + dir + "/summary.txt 2>/dev/null") == 0,
          "report exits 0");
    {
        std::string s = slurp(dir + "/summary.txt");
        check(s.find("5 passed, 0 failed") != std::string::npos, "summary counts the cases");
        for (const char* id : {"RRintro", "RR17", "T3.11", "E3", "B53"})
            check(s.find(id) != std::string::npos, std::string("summary mentions ") + id);
    }
    check(run(cli + " report " + dir + "/does-not-exist.json" + quiet) == 2,
          "missing report exits 2");
    {
        std::ofstream bad(dir + "/bad.json");
        bad << "{ not json";
    }
    check(run(cli + " report " + dir + "/bad.json" + quiet) == 2, "malformed report exits 2");
    {
        std::ofstream empty(dir + "/empty.json");
        empty << "{\"cases\": []}";
    }
    check(run(cli + " report " + dir + "/empty.json > " + dir + "/empty.txt 2>/dev/null") == 0,
          "empty case list exits 0");
    check(slurp(dir + "/empty.txt").find("no cases") != std::string::npos,
          "empty case list prints 'no cases'");

    // failing case: discrepancy must surface in the stored report and summary
    std::string rf = dir + "/fail.json";
    check(run(cli + " verify --ids MUTANT --with-mutant --output " + rf + quiet) == 1,
          "failing verify still writes the report");
    {
        nlohmann::json j = nlohmann::json::parse(slurp(rf));
        check(j["cases"][0]["status"] == "fail", "failing case recorded");
        check(j["cases"][0].contains("first_discrepancy"),
              "failing case carries its first discrepancy");
    }
    check(run(cli + " report " + rf + " > " + dir + "/failsum.txt 2>/dev/null") == 0,
          "report on a failing run exits 0");
    check(slurp(dir + "/failsum.txt").find("first discrepancy") != std::string::npos,
          "summary prints the discrepancy exponent and coefficients");

    std::printf("%d failure(s)\n", failures);
    return failures == 0 ? 0 : 1;
}
