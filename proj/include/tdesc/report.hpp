#pragma once

#include <string>
#include <vector>

namespace tdesc {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail; // counterexample or witness, in the text grammars
};

// Outcome of a verification suite: one line per checked property.
struct Report {
    std::string title;
    std::vector<CheckLine> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(const std::string& name, bool ok, const std::string& detail = "") {
        checks.push_back({name, ok, detail});
    }

    void merge(const Report& other) {
        for (const auto& c : other.checks) checks.push_back(c);
    }

    std::string text() const {
        std::string out;
        for (const auto& c : checks) {
            out += c.pass ? "PASS" : "FAIL";
            out += "  ";
            out += c.name;
            if (!c.detail.empty()) {
                out += "  [";
                out += c.detail;
                out += "]";
            }
            out += '\n';
        }
        return out;
    }
};

} // namespace tdesc
