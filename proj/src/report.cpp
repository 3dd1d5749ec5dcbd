#include "monocert/report.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace monocert {

namespace {

bool apply_rel(const Rational& lhs, const std::string& rel, const Rational& rhs) {
    if (rel == "=") return lhs == rhs;
    if (rel == "<") return lhs < rhs;
    if (rel == "<=") return lhs <= rhs;
    if (rel == ">=") return lhs >= rhs;
    if (rel == ">") return lhs > rhs;
    throw std::invalid_argument("unknown relation: " + rel);
}

bool apply_rel_ext(const ExtRat& lhs, const std::string& rel, const ExtRat& rhs) {
    if (rel == "=") return lhs == rhs;
    if (rel == "<") return !ext_ge(lhs, rhs);
    if (rel == "<=") return ext_ge(rhs, lhs);
    if (rel == ">=") return ext_ge(lhs, rhs);
    if (rel == ">") return !ext_ge(rhs, lhs);
    throw std::invalid_argument("unknown relation: " + rel);
}

ExtRat parse_ext(const std::string& s) {
    if (s == "+inf") return ExtRat::infinity();
    return ExtRat(rat_parse(s));
}

}  // namespace

CheckEntry CheckEntry::relation(std::string name, const Rational& lhs, std::string rel,
                                const Rational& rhs, std::string anchor) {
    bool ok = apply_rel(lhs, rel, rhs);
    return {std::move(name), rat_str(lhs), std::move(rel), rat_str(rhs), ok, std::move(anchor)};
}

CheckEntry CheckEntry::relation_ext(std::string name, const ExtRat& lhs, std::string rel,
                                    const ExtRat& rhs, std::string anchor) {
    bool ok = apply_rel_ext(lhs, rel, rhs);
    return {std::move(name), lhs.str(), std::move(rel), rhs.str(), ok, std::move(anchor)};
}

CheckEntry CheckEntry::boolean(std::string name, bool value, std::string anchor) {
    return {std::move(name), value ? "1" : "0", "=", "1", value, std::move(anchor)};
}

CheckEntry CheckEntry::serialized(std::string name, std::string lhs, std::string rhs,
                                  std::string anchor) {
    bool ok = lhs == rhs;
    return {std::move(name), std::move(lhs), "=", std::move(rhs), ok, std::move(anchor)};
}

CheckEntry CheckEntry::error(std::string name, const std::string& message, std::string anchor) {
    return {std::move(name), "error: " + message, "=", "resolved", false, std::move(anchor)};
}

bool recheck_entry(const CheckEntry& e) {
    if (e.lhs.rfind("error:", 0) == 0) return false;
    try {
        return apply_rel_ext(parse_ext(e.lhs), e.rel, parse_ext(e.rhs));
    } catch (const std::invalid_argument&) {
        // Canonically serialized non-scalar values compare as strings.
        if (e.rel == "=") return e.lhs == e.rhs;
        throw;
    }
}

int CertReport::passed() const {
    int n = 0;
    for (const auto& c : checks) n += c.pass ? 1 : 0;
    return n;
}

int CertReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

std::string CertReport::to_json() const {
    nlohmann::ordered_json j;
    j["scenario"] = scenario;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [k, v] : config) cfg[k] = v;
    j["config"] = cfg;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        j["checks"].push_back({{"name", c.name},
                               {"lhs", c.lhs},
                               {"rel", c.rel},
                               {"rhs", c.rhs},
                               {"pass", c.pass},
                               {"paper_anchor", c.anchor}});
    }
    if (!notes.empty()) j["notes"] = notes;
    j["summary"] = {{"passed", passed()}, {"failed", failed()}};
    return j.dump(2) + "\n";
}

std::string CertReport::to_markdown() const {
    auto cell = [](const std::string& s) {
        std::string out;
        for (char ch : s) {
            if (ch == '|') out += "\\|";
            else out += ch;
        }
        return out;
    };
    std::string md = "# Certification report: " + scenario + "\n\n";
    if (!config.empty()) {
        md += "## Config\n\n";
        for (const auto& [k, v] : config) md += "- " + k + ": `" + v + "`\n";
        md += "\n";
    }
    md += "## Checks\n\n| name | lhs | rel | rhs | pass | anchor |\n";
    md += "|---|---|---|---|---|---|\n";
    for (const auto& c : checks) {
        md += "| " + cell(c.name) + " | `" + cell(c.lhs) + "` | " + cell(c.rel) + " | `" +
              cell(c.rhs) + "` | " + (c.pass ? "yes" : "**NO**") + " | " + cell(c.anchor) +
              " |\n";
    }
    if (!notes.empty()) {
        md += "\n## Notes\n\n";
        for (const auto& n : notes) md += "- " + n + "\n";
    }
    md += "\nSummary: " + std::to_string(passed()) + " passed, " + std::to_string(failed()) +
          " failed.\n";
    return md;
}

}  // namespace monocert
