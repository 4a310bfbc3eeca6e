// Verification suite for RB_n GL(r): d^2 = 0, the simplicial identities of
// the face and degeneracy morphisms and their compatibility with d, the
// gauge action, freeness over the boundary, points of pi_0 and the tangent
// complex at sampled flat points.

#ifndef DGLOC_RBG_CHECK_HPP
#define DGLOC_RBG_CHECK_HPP

#include "dgloc/check.hpp"

#include <cstdint>
#include <vector>

namespace dgloc {

struct ResolutionCheckOptions {
    int n = 2;
    int r = 1;
    std::uint64_t seed = 1;
    /// Flat points sampled for the pi_0 and tangent checks.
    int samples = 5;
};

std::vector<CheckResult> resolution_check(const ResolutionCheckOptions& options);

/// Individual parts, each covering the given (n, r) only.
CheckResult check_face_identities(int n, int r);
CheckResult check_degeneracy_identities(int n, int r);
CheckResult check_structure_maps_commute_with_d(int n, int r);
CheckResult check_gauge_action(int n, int r, std::uint64_t seed);

}  // namespace dgloc

#endif  // DGLOC_RBG_CHECK_HPP
