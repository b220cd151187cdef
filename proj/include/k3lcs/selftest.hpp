#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace k3lcs {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Quick invariant suites over every module; deterministic in the seed.
std::vector<SuiteResult> run_selftest(std::uint64_t seed);

}  // namespace k3lcs
