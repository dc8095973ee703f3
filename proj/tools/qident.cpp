// Command-line front end: list the identity catalog, run verification
// suites or single cases, and summarize stored reports.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qident/runner.hpp"

namespace {

int cmd_list(const std::string& format) {
    auto catalog = qident::registry();
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : catalog)
            arr.push_back({{"id", c.id},
                           {"paper_eq", c.paper_eq},
                           {"strategy", c.strategy},
                           {"params", c.params}});
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    std::cout << std::left;
    for (const auto& c : catalog) {
        std::string params;
        for (const auto& [k, v] : c.params)
            params += (params.empty() ? "" : " ") + k + "=" + std::to_string(v);
        printf("%-10s  %-8s  %-44s  %s\n", c.id.c_str(), c.strategy.c_str(),
               c.paper_eq.c_str(), params.c_str());
    }
    std::cout << catalog.size() << " cases\n";
    return 0;
}

int cmd_verify(const qident::RunConfig& cfg, const std::string& output,
               const std::string& format) {
    qident::RunResult res;
    try {
        res = qident::run_suite(cfg, format == "text" ? &std::cerr : nullptr);
    } catch (const qident::usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (!output.empty()) {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "error: cannot write " << output << "\n";
            return 2;
        }
        out << res.report.dump(2) << "\n";
    }
    if (format == "json" && output.empty()) std::cout << res.report.dump(2) << "\n";
    if (format == "text")
        std::cout << res.passed << " passed, " << res.failed << " failed, " << res.inconclusive
                  << " inconclusive (seed " << cfg.seed << ")\n";
    if (res.failed > 0) return 1;
    if (res.inconclusive > 0) return 2;
    return 0;
}

int cmd_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return 2;
    }
    nlohmann::json j;
    try {
        in >> j;
        if (!j.contains("cases") || !j["cases"].is_array()) throw std::runtime_error("no cases");
    } catch (const std::exception& e) {
        std::cerr << "error: malformed report: " << e.what() << "\n";
        return 2;
    }
    const auto& cases = j["cases"];
    if (cases.empty()) {
        std::cout << "no cases\n";
        return 0;
    }
    long passed = 0, failed = 0, other = 0;
    for (const auto& c : cases) {
        std::string status = c.value("status", "?");
        if (status == "pass") ++passed;
        else if (status == "fail") ++failed;
        else ++other;
        std::cout << status << "  " << c.value("id", "?") << "  ("
                  << c.value("paper_eq", "?") << ")\n";
        if (c.contains("first_discrepancy")) {
            const auto& d = c["first_discrepancy"];
            std::cout << "      first discrepancy [" << d.value("kind", "?") << "] at "
                      << d.value("location", "?") << ": lhs " << d.value("lhs", "?") << " vs rhs "
                      << d.value("rhs", "?") << "\n";
        }
        if (c.contains("notes"))
            for (const auto& n : c["notes"]) std::cout << "      note: " << n.get<std::string>() << "\n";
    }
    std::cout << passed << " passed, " << failed << " failed";
    if (other) std::cout << ", " << other << " inconclusive";
    std::cout << " (run " << j.value("run_id", "?") << ", seed " << j.value("seed", 0) << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of a catalog of q-series and Hall-Littlewood identities"};
    app.require_subcommand(1);

    std::string format = "text";

    auto* list = app.add_subcommand("list", "print the identity catalog");
    list->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    qident::RunConfig cfg;
    std::string ids_csv, output;
    auto* verify = app.add_subcommand("verify", "run verification cases");
    verify->add_option("--suite", cfg.suite, "all or quick")
        ->check(CLI::IsMember({"all", "quick"}));
    verify->add_option("--ids", ids_csv, "comma-separated case ids");
    verify->add_option("--seed", cfg.seed, "global seed (default 42)");
    verify->add_option("--order", cfg.order_override, "series truncation order override");
    verify->add_option("--trials", cfg.trials_override, "point trial count override");
    verify->add_option("--parallelism", cfg.parallelism, "worker threads (>= 1)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--output", output, "write the JSON report here");
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--with-mutant", cfg.include_mutant)->group(""); // test builds only

    std::string report_path;
    auto* report = app.add_subcommand("report", "summarize a stored report");
    report->add_option("path", report_path, "report JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    if (list->parsed()) return cmd_list(format);
    if (verify->parsed()) {
        if (!ids_csv.empty()) {
            std::string cur;
            for (char ch : ids_csv + ",") {
                if (ch == ',') {
                    if (!cur.empty()) cfg.ids.push_back(cur);
                    cur.clear();
                } else {
                    cur += ch;
                }
            }
        }
        return cmd_verify(cfg, output, format);
    }
    return cmd_report(report_path);
}
