#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace mixture {

struct CheckResult {
    std::string id;   // short slug, stable across runs
    std::string ref;  // one-line statement of the fact being checked
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(const std::string& id, const std::string& ref, double residual, double tol) {
        checks.push_back({id, ref, residual, tol, residual < tol});
    }
};

// report is byte-identical for a given seed unless timing is requested
inline nlohmann::ordered_json report_json(const SuiteResult& r, bool timing = false,
                                          double wall_seconds = 0.0) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["ref"] = c.ref;
        jc["residual"] = c.residual;
        jc["tolerance"] = c.tolerance;
        jc["pass"] = c.pass;
        j["checks"].push_back(jc);
    }
    j["passed"] = r.passed();
    if (timing) j["wall_time"] = wall_seconds;
    return j;
}

} // namespace mixture
