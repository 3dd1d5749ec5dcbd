#pragma once

#include <string>
#include <vector>

#include "monocert/rational.hpp"

namespace monocert {

// One certified relation between two exactly-serialized values. A report is
// re-checkable offline: parse lhs/rhs, apply rel, compare with pass.
struct CheckEntry {
    std::string name;
    std::string lhs;   // exact rational "p/q", "+inf", or a serialized value
    std::string rel;   // one of "=", "<", "<=", ">=", ">"
    std::string rhs;
    bool pass;
    std::string anchor;  // one-line statement of the certified fact

    static CheckEntry relation(std::string name, const Rational& lhs, std::string rel,
                               const Rational& rhs, std::string anchor);
    static CheckEntry relation_ext(std::string name, const ExtRat& lhs, std::string rel,
                                   const ExtRat& rhs, std::string anchor);
    static CheckEntry boolean(std::string name, bool value, std::string anchor);
    // Equality of canonically serialized values (vectors etc.): pass iff the
    // two serializations agree byte for byte.
    static CheckEntry serialized(std::string name, std::string lhs, std::string rhs,
                                 std::string anchor);
    static CheckEntry error(std::string name, const std::string& message, std::string anchor);
};

// Re-evaluates the relation from the serialized strings alone.
bool recheck_entry(const CheckEntry& e);

struct CertReport {
    std::string scenario;
    std::vector<std::pair<std::string, std::string>> config;  // echoed inputs
    std::vector<CheckEntry> checks;
    std::vector<std::string> notes;

    int passed() const;
    int failed() const;
    bool all_pass() const { return failed() == 0; }

    void add(CheckEntry e) { checks.push_back(std::move(e)); }
    void note(std::string n) { notes.push_back(std::move(n)); }

    std::string to_json() const;      // deterministic, key order fixed
    std::string to_markdown() const;  // mirrors the JSON content
};

}  // namespace monocert
