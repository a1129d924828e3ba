#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace drum {

/// Outcome of one named identity check. A witness is present exactly when
/// the check failed and points at the first discrepancy found.
struct VerificationReport {
    struct Witness {
        std::string what;                          // which quantity disagreed
        std::string expected;
        std::string actual;
        std::optional<std::pair<int, int>> index;  // matrix position, if any
    };

    std::string check;
    bool passed = true;
    std::optional<Witness> witness;
    std::string note;                        // e.g. sub-checks skipped and why
    std::map<std::string, long long> metrics;  // exact quantities worth reporting
    double elapsed_ms = 0.0;

    static VerificationReport pass(std::string name) {
        VerificationReport r;
        r.check = std::move(name);
        return r;
    }

    static VerificationReport fail(std::string name, Witness w) {
        VerificationReport r;
        r.check = std::move(name);
        r.passed = false;
        r.witness = std::move(w);
        return r;
    }

    void fail_with(Witness w) {
        if (passed) {
            passed = false;
            witness = std::move(w);
        }
    }
};

}  // namespace drum
