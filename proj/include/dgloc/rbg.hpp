// The explicit resolution RB_n GL(r) of the nerve of GL(r): a quasi-free
// dg-algebra on r x r matrices of generators g_{i_0..i_p} (0 <= i_0 < ... <
// i_p <= n, p >= 1) in degree 1 - p, its simplicial structure maps and the
// gauge action.

#ifndef DGLOC_RBG_HPP
#define DGLOC_RBG_HPP

#include "dgloc/dgalg.hpp"
#include "dgloc/exactlin.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dgloc {

/// Label of the (row, col) entry (1-based) of the matrix generator attached
/// to a simplex, e.g. "g_012[1,2]".
std::string generator_label(const std::string& simplex_id, int row, int col);

/// Matrix entry [row, col] (0-based) of g_back * g_front, each entry product
/// written front factor first:  sum_k g_front[k, col] * g_back[row, k].
/// Writing the factors in that order is the Koszul sign that makes d^2 = 0
/// when both blocks are odd.
Polynomial matrix_product_entry(const GeneratorSet& gens, const std::string& back_id, const std::string& front_id,
                                int r, int row, int col);

/// det of the r x r block of degree-0 generators of one edge.
Polynomial determinant_polynomial(const GeneratorSet& gens, const std::string& edge_id, int r);

struct RBPresentation {
    int n = 0;
    int r = 1;
    DgPresentation algebra;

    GenIndex generator(const std::vector<int>& tuple, int row, int col) const;
};

/// d(g_{i_0..i_p}) = sum_{nu=1}^{p-1} (-1)^nu (g_{i_0..^i_nu..i_p} - g_{i_nu..i_p} g_{i_0..i_nu})
/// with det(g_ij) != 0 recorded as constraints.
RBPresentation build_rb(int n, int r);

/// Coface [n-1] -> [n] skipping i.
std::vector<int> coface_map(int n, int i);
/// Codegeneracy [n+1] -> [n] hitting j twice.
std::vector<int> codegeneracy_map(int n, int j);

/// Algebra map C[RB_m] -> C[RB_n] induced by a monotone map f: [m] -> [n].
/// g_t goes to g_{f(t)} when f(t) is strictly increasing; a collapsed edge
/// goes to the identity matrix, a collapsed higher block to 0.
AlgebraMorphism simplicial_operator(const RBPresentation& source, const RBPresentation& target,
                                    const std::vector<int>& f);
/// Face d_i: C[RB_{n-1}] -> C[RB_n]; `lower` must be RB_{n-1} of the same r.
AlgebraMorphism face_map(const RBPresentation& rb, const RBPresentation& lower, int i);
/// Degeneracy s_j: C[RB_{n+1}] -> C[RB_n]; `upper` must be RB_{n+1}.
AlgebraMorphism degeneracy_map(const RBPresentation& rb, const RBPresentation& upper, int j);

/// g_{i_0..i_p} -> h_{i_p} g_{i_0..i_p} h_{i_0}^{-1} for a family h_0..h_n.
/// Throws std::domain_error if some h_k is singular.
AlgebraMorphism gauge_transform(const RBPresentation& rb, const std::vector<RationalMatrix>& family);

struct InjectivityReport {
    int n = 0;
    int r = 1;
    /// Generator counts per degree, split into those on proper faces of
    /// Delta[n] and the rest.
    std::map<int, std::size_t> boundary_counts;
    std::map<int, std::size_t> new_counts;
    bool new_are_top_block = false;     // exactly the r^2 entries of g_{0..n}
    bool boundary_closed_under_d = false;
    bool boundary_is_face_image = false;  // generated by the images of the face maps
    bool ok() const { return new_are_top_block && boundary_closed_under_d && boundary_is_face_image; }
};

/// RB_n is free over the subalgebra coming from the boundary of Delta[n] on
/// the r^2 generators of the top block.
InjectivityReport injectivity_skeleton_check(int n, int r);

/// Edge matrices g_ij, i < j, of a point of B_n GL(r).
using SimplexConnection = std::map<std::pair<int, int>, RationalMatrix>;

/// g_{i,i+1} = steps[i], g_ik = g_{k-1,k} ... g_{i,i+1}.
SimplexConnection flat_simplex_connection(const std::vector<RationalMatrix>& steps);
/// Throws PointError when the tuple is not flat or not invertible.
Point rb_point(const RBPresentation& rb, const SimplexConnection& edges);

struct SimplexTangentResult {
    std::vector<std::size_t> dims;  // tangent cohomology by degree
    bool higher_vanish = false;

    std::size_t h0() const { return dims.empty() ? 0 : dims[0]; }
};

/// Tangent cohomology of RB_n at a flat point.
SimplexTangentResult simplex_tangent_check(int n, int r, const SimplexConnection& edges);

}  // namespace dgloc

#endif  // DGLOC_RBG_HPP
