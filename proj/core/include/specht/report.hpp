#pragma once

#include <string>
#include <utility>
#include <vector>

namespace specht {

/// Outcome of a verification sweep: how many instances were checked and every
/// violation found (expected none).  Notes carry informational findings that
/// are not failures.
struct VerifyReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    long long checked = 0;
    std::vector<std::string> violations;
    std::vector<std::string> notes;

    bool passed() const { return violations.empty(); }

    void param(std::string key, std::string value) {
        params.emplace_back(std::move(key), std::move(value));
    }
    void violation(std::string message) { violations.push_back(std::move(message)); }
    void note(std::string message) { notes.push_back(std::move(message)); }

    void merge(const VerifyReport& other);
};

}  // namespace specht
