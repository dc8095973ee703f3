#pragma once

#include <atomic>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "qident/registry.hpp"

namespace qident {

struct RunConfig {
    std::string suite = "all"; // "all" | "quick"
    std::vector<std::string> ids; // empty = whole suite
    uint64_t seed = 42;
    long order_override = -1;
    long trials_override = -1;
    long parallelism = 1;
    bool include_mutant = false;
};

struct RunResult {
    nlohmann::json report;
    long passed = 0, failed = 0, inconclusive = 0;
};

namespace detail_runner {

inline std::map<std::string, long> effective_overrides(const IdentityCase& c,
                                                       const RunConfig& cfg) {
    std::map<std::string, long> ov;
    if (cfg.suite == "quick") {
        // CI-friendly tier: series windows capped at 20, point trials at 3.
        if (c.params.count("order")) ov["order"] = std::min<long>(c.params.at("order"), 20);
        if (c.params.count("trials")) ov["trials"] = std::min<long>(c.params.at("trials"), 3);
    }
    if (cfg.order_override > 0 && c.params.count("order")) ov["order"] = cfg.order_override;
    if (cfg.trials_override > 0 && c.params.count("trials")) ov["trials"] = cfg.trials_override;
    return ov;
}

inline std::string run_id(const RunConfig& cfg) {
    std::string key = cfg.suite;
    for (const auto& id : cfg.ids) key += "," + id;
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << case_seed(cfg.seed, key);
    return os.str();
}

} // namespace detail_runner

// Runs the selected cases (parallel up to cfg.parallelism; per-case RNG is a
// pure function of (seed, id), so results are schedule-independent) and
// assembles the report in catalog order.
inline RunResult run_suite(const RunConfig& cfg, std::ostream* progress = nullptr) {
    std::vector<IdentityCase> catalog = registry(cfg.include_mutant);
    std::vector<const IdentityCase*> selected;
    if (cfg.ids.empty()) {
        for (const auto& c : catalog) selected.push_back(&c);
    } else {
        for (const auto& id : cfg.ids) {
            const IdentityCase* found = nullptr;
            for (const auto& c : catalog)
                if (c.id == id) found = &c;
            if (!found) throw usage_error("unknown case id '" + id + "'");
            selected.push_back(found);
        }
    }

    std::vector<VerificationReport> reports(selected.size());
    std::atomic<size_t> next{0};
    std::mutex io_mu;
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= selected.size()) return;
            const IdentityCase& c = *selected[i];
            reports[i] = verify_case(c, cfg.seed, detail_runner::effective_overrides(c, cfg));
            if (progress) {
                std::lock_guard<std::mutex> lk(io_mu);
                const auto& r = reports[i];
                *progress << (r.status == "pass" ? "[pass] " :
                              r.status == "fail" ? "[FAIL] " : "[????] ")
                          << r.id << "  (" << r.paper_eq << ", " << r.elapsed_ms << " ms)\n";
                for (const auto& n : r.notes) *progress << "       note: " << n << "\n";
                if (r.first_discrepancy)
                    *progress << "       first discrepancy at " << r.first_discrepancy->location
                              << ": lhs " << r.first_discrepancy->lhs << " vs rhs "
                              << r.first_discrepancy->rhs << "\n";
                progress->flush();
            }
        }
    };
    long nthreads = std::max<long>(1, cfg.parallelism);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (long t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    RunResult out;
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& r : reports) {
        cases.push_back(r.to_json());
        if (r.status == "pass") ++out.passed;
        else if (r.status == "fail") ++out.failed;
        else ++out.inconclusive;
    }
    out.report = nlohmann::json{{"run_id", detail_runner::run_id(cfg)},
                                {"seed", cfg.seed},
                                {"suite", cfg.suite},
                                {"cases", cases}};
    return out;
}

} // namespace qident
