#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apollo/depth.hpp"

namespace apollo {

struct CheckResult {
    std::string name;
    bool pass = true;
    bool note_only = false;  // informational discrepancy, never fails the run
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.note_only && !c.pass) return false;
        return true;
    }
};

/// Deterministic generator for reproducible sampled checks (splitmix64).
struct DetRng {
    uint64_t state;
    explicit DetRng(uint64_t seed) : state(seed) {}
    uint64_t next();
    double uniform();                 // [0, 1)
    long range(long lo, long hi);     // inclusive
    Rational rational(long max_den);  // in (0, 1], denominator <= max_den
};

/// Known reference values that disagree with the definitions implemented
/// here; surfaced as warnings wherever the inputs show up.
struct ReferenceDiscrepancy {
    Triple input;
    long published_depth;
    long computed_depth;
    std::string note;
};
const std::vector<ReferenceDiscrepancy>& reference_discrepancies();

SuiteReport verify_groups();
SuiteReport verify_depth();
SuiteReport verify_spinor();
SuiteReport verify_packing();
SuiteReport verify_integrality();

/// suite: all | groups | depth | spinor | packing | integrality.
std::vector<SuiteReport> run_verify(const std::string& suite);

}  // namespace apollo
