#pragma once

// Exhaustive verification suites behind `gtam verify`.

#include <string>
#include <vector>

namespace gtam {

struct VerificationReport {
    std::string suite;
    long instances = 0;
    bool ok = true;
    std::string counterexample;  // serialized objects of the first failure
    double seconds = 0;
};

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Default size bound of a suite (the acceptance value).
int default_suite_size(const std::string& suite);

/// Throws DomainError on an unknown suite name.
VerificationReport run_suite(const std::string& suite, int max_size);

}  // namespace gtam
