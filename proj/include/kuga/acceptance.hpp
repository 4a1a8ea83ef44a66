#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kuga/json_io.hpp"

namespace kuga {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    double seconds = 0;
    double budget_seconds = 0;  // 0 when there is no runtime requirement
    std::string summary;        // one line, shown next to PASS/FAIL
    Json details;
};

inline constexpr int kCriterionCount = 10;
inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Runs one acceptance criterion (1..10). Exceptions are caught and reported as failures.
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultSeed);

Json to_json(const CriterionResult& r);

}  // namespace kuga
