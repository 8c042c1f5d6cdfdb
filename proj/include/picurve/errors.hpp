#pragma once

#include <stdexcept>
#include <string>

namespace picurve {

// Input fails a structural precondition (bad table, non-bijective map, ...).
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A construction would exceed a configured size cap.
struct size_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A search exhausted its budget; carries the best lower bound found so far.
struct budget_error : std::runtime_error {
    budget_error(const std::string& msg, long long lower_bound)
        : std::runtime_error(msg), partial_lower_bound(lower_bound) {}
    long long partial_lower_bound = 0;
};

// Request is outside the algebraically supported scope (wrong characteristic,
// non-solvable group without override, ...).
struct scope_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace picurve
