// Independent reference computations. They read face tables directly and
// use their own dense elimination, sharing no code paths with the engine
// beyond the rational number type.

#ifndef DGLOC_VERIFY_ORACLES_HPP
#define DGLOC_VERIFY_ORACLES_HPP

#include "dgloc/moduli.hpp"
#include "dgloc/rbg.hpp"
#include "dgloc/scomplex.hpp"

#include <vector>

namespace dgloc::oracle {

using DenseRows = std::vector<std::vector<Rational>>;

/// Plain Gauss-Jordan on a copy.
std::size_t rank(DenseRows rows);

/// Untwisted rational Betti numbers b_0..b_dim.
std::vector<std::size_t> betti_numbers(const SemiSimplicialSet& space);

struct TwistedDims {
    std::size_t kernel_minus1 = 0;     // ker(C^0_res -> C^1)
    std::vector<std::size_t> tangent;  // degrees 0 .. max(0, dim S - 1)
};

/// Restricted complex C^0_res -> C^1 -> C^2 -> ... of the rank-one local
/// system with monodromy t(e) along each edge (tail to head), coefficients
/// living at the last vertex of each simplex.
TwistedDims twisted_restricted_dims(const SemiSimplicialSet& space, const std::vector<Rational>& monodromy);

/// For a connection by diagonal matrices, ad(E) splits into r^2 rank-one
/// blocks E_ab with monodromy E_aa / E_bb; the dims are summed over blocks.
/// Throws std::invalid_argument on a non-diagonal matrix.
TwistedDims weight_block_dims(const SemiSimplicialSet& space, const Connection& diagonal);

/// rank of C^0(Delta[n], ad E) -> C^1, xi -> xi_j g_ij - g_ij xi_i, i.e. dim B^1.
std::size_t simplex_coboundary_rank(int n, std::size_t r, const SimplexConnection& edges);

}  // namespace dgloc::oracle

#endif  // DGLOC_VERIFY_ORACLES_HPP
