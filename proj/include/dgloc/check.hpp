// Named pass/fail outcome used by check suites and reports.

#ifndef DGLOC_CHECK_HPP
#define DGLOC_CHECK_HPP

#include <string>
#include <vector>

namespace dgloc {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

inline bool all_pass(const std::vector<CheckResult>& checks)
{
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

}  // namespace dgloc

#endif  // DGLOC_CHECK_HPP
