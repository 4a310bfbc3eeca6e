// The acceptance battery: ten criteria, each returning pass/fail with a
// one-line account of what was compared.

#ifndef DGLOC_VERIFY_ACCEPTANCE_HPP
#define DGLOC_VERIFY_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dgloc {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

inline constexpr int kCriterionCount = 10;
inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Runs criterion `id` (1..10). Sampling is driven by `seed` only.
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultSeed);

/// "PASS [3] name: detail". Timing is left out so the line is reproducible.
std::string format_result(const CriterionResult& result);

}  // namespace dgloc

#endif  // DGLOC_VERIFY_ACCEPTANCE_HPP
