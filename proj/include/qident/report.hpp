#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qident {

// Where two sides of an identity first disagree: an exponent for series
// strategies, a sampled point/trial for point strategies.
struct Discrepancy {
    std::string kind; // "exponent" | "point"
    std::string location;
    std::string lhs;
    std::string rhs;

    nlohmann::json to_json() const {
        return nlohmann::json{{"kind", kind}, {"location", location}, {"lhs", lhs}, {"rhs", rhs}};
    }
};

struct VerificationReport {
    std::string id;
    std::string paper_eq;
    std::map<std::string, long> params;
    std::string status = "pass"; // pass | fail | inconclusive
    std::optional<Discrepancy> first_discrepancy;
    std::vector<std::string> notes; // text-discrepancy reports and similar remarks
    long elapsed_ms = 0;
    uint64_t seed = 0;

    nlohmann::json to_json() const {
        nlohmann::json j{{"id", id},       {"paper_eq", paper_eq}, {"params", params},
                         {"status", status}, {"elapsed_ms", elapsed_ms}};
        if (first_discrepancy) j["first_discrepancy"] = first_discrepancy->to_json();
        if (!notes.empty()) j["notes"] = notes;
        return j;
    }
};

} // namespace qident
