#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace homtwist {

struct CheckRecord {
    std::string id;              // stable check identifier, e.g. "algebra.hom_associativity"
    std::string law;             // the mathematical law being checked, human-readable
    bool pass = false;
    std::string counterexample;  // first failing basis tuple, empty on pass
    std::string detail;
    long long micros = 0;
};

struct VerificationReport {
    std::vector<CheckRecord> checks;

    void add(CheckRecord r) { checks.push_back(std::move(r)); }

    void merge(const VerificationReport& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    int fail_count() const {
        int n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }

    const CheckRecord* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

class CheckTimer {
public:
    CheckTimer() : start_(std::chrono::steady_clock::now()) {}
    long long micros() const {
        return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace homtwist
