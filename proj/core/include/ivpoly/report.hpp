#pragma once

#include <string>
#include <vector>

namespace ivpoly {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Itemized verification result; verify_* operations report through this
// instead of throwing, so callers see every failing check at once.
struct Report {
    std::vector<Check> checks;

    void add(std::string name, bool passed, std::string detail = "") {
        checks.push_back({std::move(name), passed, std::move(detail)});
    }

    void merge(const Report& other, const std::string& prefix) {
        for (const Check& c : other.checks)
            checks.push_back({prefix + c.name, c.passed, c.detail});
    }

    bool all_passed() const {
        for (const Check& c : checks)
            if (!c.passed) return false;
        return true;
    }

    const Check* find(const std::string& name) const {
        for (const Check& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

}  // namespace ivpoly
