// The Lie bracket on the tangent complex of the derived moduli of local
// systems, read off the quadratic Taylor component of the differential of
// Hom(S, RBG) at a flat connection, and its structure on cohomology.
//
// Tangent degree k carries Lie degree k+1. With delta = (-1)^k lambda_1:
//   [x, y] = -(-1)^{|x||y|} [y, x]
//   delta [x, y] = [delta x, y] + (-1)^{k_x + 1} [x, delta y]

#ifndef DGLOC_BRACKET_HPP
#define DGLOC_BRACKET_HPP

#include "dgloc/dgalg.hpp"
#include "dgloc/moduli.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace dgloc {

class TangentBracket {
public:
    TangentBracket(const SemiSimplicialSet& space, const FlatConnection& e);

    const HomPresentation& presentation() const { return hom_; }
    /// Tangent complex before the gauge quotient, degrees 0..top().
    const RationalComplex& complex() const { return complex_; }
    int top() const { return complex_.highest_degree(); }
    std::size_t dim(int degree) const { return complex_.dim(degree); }

    TangentVector zero(int degree) const;
    TangentVector basis_vector(int degree, std::size_t i) const;

    /// Bracket of homogeneous vectors; zero when it would land above top().
    TangentVector bracket(const TangentVector& x, const TangentVector& y) const;
    /// delta = (-1)^k lambda_1 : T^k -> T^{k+1}.
    TangentVector delta(const TangentVector& x) const;
    bool cubic_vanishes() const;

private:
    HomPresentation hom_;
    Point point_;
    RationalComplex complex_;
    TaylorComponent quadratic_;
    bool cubic_zero_ = false;
};

struct BracketTable {
    std::size_t r = 1;
    /// Tangent cohomology dims, degrees 0..top.
    std::vector<std::size_t> dims;
    /// constants.at({a, b})[i][j]: class of [h^a_i, h^b_j] in H^{a+b+1}
    /// against the chosen representatives.
    std::map<std::pair<int, int>, std::vector<std::vector<RationalVector>>> constants;

    bool closed = false;          // brackets of cocycles are cocycles
    bool descends = false;        // [coboundary, cocycle] is a coboundary
    bool antisymmetric = false;
    bool jacobi = false;          // on cohomology
    bool lambda1_squared_zero = false;
    bool lambda1_derivation = false;  // on all pairs of basis cochains
    bool lambda3_zero = false;
    /// Agreement with the Alexander-Whitney commutator; only evaluated at
    /// the trivial connection.
    std::optional<bool> aw_commutator;

    bool ok() const
    {
        return closed && descends && antisymmetric && jacobi && lambda1_squared_zero && lambda1_derivation &&
               lambda3_zero && aw_commutator.value_or(true);
    }
};

BracketTable bracket_on_tangent(const SemiSimplicialSet& space, const FlatConnection& e);

/// phi . psi - (-1)^{pq} psi . phi for cochains of degrees p, q.
MatrixCochain aw_commutator(const SemiSimplicialSet& space, const MatrixCochain& phi, const MatrixCochain& psi);

}  // namespace dgloc

#endif  // DGLOC_BRACKET_HPP
