#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monocert/report.hpp"
#include "monocert/vec.hpp"

namespace monocert {

// Runner configuration. A flat "key = value" config file carries the same
// keys as the CLI flags: scenario, alpha, trunc, seed, tol, format, out.
struct ScenarioConfig {
    std::string scenario;
    AlphaSpec alpha = AlphaSpec::ones();
    int N = 5;                    // truncation, >= 2
    std::uint64_t seed = 1;
    Rational tol = rat(1, 10000); // float-fallback paths only
    std::string format = "json";  // "json" or "markdown"
    std::string out;              // empty = stdout

    static ScenarioConfig from_file(const std::string& path);
    void apply_key(const std::string& key, const std::string& value);
    void validate() const;
};

struct ScenarioInfo {
    std::string name;
    std::string anchor;  // one-line statement of what the scenario certifies
};

// Stable catalogue of the named certification scenarios.
const std::vector<ScenarioInfo>& list_scenarios();

// Deterministic given (scenario, alpha, N, seed): builds the report, writes
// it to cfg.out when set, and returns it. Module precondition violations
// surface as structured error entries, not exceptions.
CertReport run_scenario(const ScenarioConfig& cfg);

std::string render_report(const CertReport& report, const std::string& format);

}  // namespace monocert
