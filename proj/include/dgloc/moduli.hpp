// Flat simplicial GL(r)-connections on a semi-simplicial set, the
// Alexander-Whitney cochain algebra, the presentation of Hom(S, RBG) and
// the tangent complexes of the derived moduli of local systems.
//
// Orientation: an edge e runs from its tail d_1 e to its head d_0 e, so the
// connection matrix E(e) plays the role of g_ij with (i, j) = (d_1 e, d_0 e).

#ifndef DGLOC_MODULI_HPP
#define DGLOC_MODULI_HPP

#include "dgloc/dgalg.hpp"
#include "dgloc/exactlin.hpp"
#include "dgloc/scomplex.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dgloc {

class SpaceError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ConnectionError : public std::domain_error {
public:
    enum class Kind { Shape, Singular, NonFlat };

    ConnectionError(Kind kind, std::string simplex_id, const std::string& what)
        : std::domain_error(what), kind_(kind), simplex_id_(std::move(simplex_id))
    {
    }
    Kind kind() const { return kind_; }
    /// Offending edge (Shape, Singular) or 2-simplex (NonFlat).
    const std::string& simplex_id() const { return simplex_id_; }

private:
    Kind kind_;
    std::string simplex_id_;
};

// ---------------------------------------------------------------------------
// Matrix cochains

/// r x r matrix per p-simplex, indexed like S's p-simplices.
struct MatrixCochain {
    int degree = 0;
    std::size_t r = 1;
    std::vector<RationalMatrix> values;

    friend bool operator==(const MatrixCochain&, const MatrixCochain&) = default;
};

MatrixCochain zero_cochain(const SemiSimplicialSet& space, int degree, std::size_t r);
/// (phi . psi)(s) = phi(back_face(s, p)) * psi(front_face(s, q)). A product
/// landing above dim S is the zero cochain with no values.
MatrixCochain aw_product(const SemiSimplicialSet& space, const MatrixCochain& phi, const MatrixCochain& psi);
/// (d phi)(s) = sum_nu (-1)^nu phi(d_nu s).
MatrixCochain coboundary(const SemiSimplicialSet& space, const MatrixCochain& phi);

// ---------------------------------------------------------------------------
// Connections

/// One matrix per edge, in the space's edge order. Not necessarily flat.
struct Connection {
    std::size_t r = 1;
    std::vector<RationalMatrix> edges;

    friend bool operator==(const Connection&, const Connection&) = default;
};

/// Throws ConnectionError(Shape) for a missing or unknown edge or a wrong size.
Connection make_connection(const SemiSimplicialSet& space, std::size_t r,
                           const std::map<std::string, RationalMatrix>& edges);
Connection trivial_connection(const SemiSimplicialSet& space, std::size_t r);
bool is_trivial(const Connection& e);

/// residual(s) = E(d_0 s) E(d_2 s) - E(d_1 s) on 2-simplices.
/// Throws ConnectionError(Singular) on a non-invertible edge.
MatrixCochain mc_residual(const SemiSimplicialSet& space, const Connection& e);
/// First 2-simplex with nonzero residual.
std::optional<SimplexRef> check_flat(const SemiSimplicialSet& space, const Connection& e);

/// A connection verified invertible and flat.
class FlatConnection {
public:
    /// Throws ConnectionError (Singular or NonFlat, naming the simplex).
    FlatConnection(const SemiSimplicialSet& space, Connection e);

    const Connection& connection() const { return e_; }
    std::size_t r() const { return e_.r; }
    const RationalMatrix& operator[](std::size_t edge) const { return e_.edges[edge]; }

private:
    Connection e_;
};

/// E(e) -> h(d_0 e) E(e) h(d_1 e)^{-1}; `family` has one matrix per vertex.
/// Throws ConnectionError(Singular) naming the vertex for a singular entry.
Connection gauge_apply(const SemiSimplicialSet& space, const std::vector<RationalMatrix>& family, const Connection& e);
FlatConnection gauge_apply(const SemiSimplicialSet& space, const std::vector<RationalMatrix>& family,
                           const FlatConnection& e);

// ---------------------------------------------------------------------------
// Hom(S, RBG)

struct GeneratorSite {
    SimplexRef simplex;
    int row = 0;  // 0-based
    int col = 0;
};

struct HomPresentation {
    std::size_t r = 1;
    DgPresentation algebra;
    /// Simplex and matrix entry of each generator, by GenIndex.
    std::vector<GeneratorSite> sites;

    GenIndex generator(const SemiSimplicialSet& space, SimplexRef s, int row, int col) const;
};

/// One r x r block of generators per simplex of dim p >= 1, in degree 1-p, with
/// d(g_s) = sum_{nu=1}^{p-1} (-1)^nu (g_{d_nu s} - g_{back_face(s, p-nu)} g_{front_face(s, nu)})
/// and det constraints on the edge blocks. Throws SpaceError if S fails
/// validation or two simplices of positive dimension share an id.
HomPresentation build_hom_presentation(const SemiSimplicialSet& space, std::size_t r);

/// Functor of points: a connection is a degree-0 assignment; it is a point
/// of pi_0 exactly when flat. Throws PointError otherwise.
Point connection_to_point(const SemiSimplicialSet& space, const HomPresentation& hom, const Connection& e);
Connection point_to_connection(const SemiSimplicialSet& space, const HomPresentation& hom, const Point& x);

/// Tangent vector of T^k (coordinates over the degree -k generators) as a
/// matrix (k+1)-cochain, and back.
MatrixCochain tangent_to_cochain(const SemiSimplicialSet& space, const HomPresentation& hom, const TangentVector& v);
TangentVector cochain_to_tangent(const SemiSimplicialSet& space, const HomPresentation& hom, const MatrixCochain& c);

// ---------------------------------------------------------------------------
// Tangent complexes

/// Tangent complex of Hom(S, RBG) at E; degree k is the space of matrix
/// (k+1)-cochains.
RationalComplex deformation_complex(const SemiSimplicialSet& space, const FlatConnection& e);

/// Linearized action of the gauge group fixed at the basepoint:
/// C^0_res -> T^0, xi -> (e -> xi(d_0 e) E(e) - E(e) xi(d_1 e)).
/// C^0_res coordinates: non-basepoint vertices in order, entries row-major.
RationalMatrix gauge_linearization(const SemiSimplicialSet& space, const HomPresentation& hom, const FlatConnection& e);

/// deformation_complex with C^0_res prepended in degree -1. Throws
/// SpaceError if S has no basepoint or a disconnected 1-skeleton.
RationalComplex restricted_deformation_complex(const SemiSimplicialSet& space, const FlatConnection& e);

struct DeformationReport {
    std::string space;
    std::string basepoint;
    std::string connection_digest;
    std::size_t r = 1;
    /// Tangent cohomology of the derived moduli, degrees 0, 1, ...
    std::vector<std::size_t> dims;
    /// Cohomology of Hom(S, RBG) before the gauge quotient.
    std::vector<std::size_t> prequotient_dims;
    /// dim ker(C^0_res -> C^1); 0 when the gauge action is free.
    std::size_t gauge_kernel_dim = 0;
    bool euler_consistent = false;
    /// Cocycle representatives per degree (only when requested).
    std::vector<std::vector<RationalVector>> bases;

    bool gauge_action_free() const { return gauge_kernel_dim == 0; }
};

DeformationReport tangent_report(const SemiSimplicialSet& space, const FlatConnection& e, bool with_bases = false);

/// 64-bit FNV-1a of a text, as 16 hex digits.
std::string text_digest(std::string_view text);
/// text_digest of the serialized connection.
std::string connection_digest(const SemiSimplicialSet& space, const Connection& e);

struct InvarianceReport {
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;
    bool equal = false;
};

/// Compares tangent cohomology vectors (zero-padded) of two pointed spaces
/// with connections the caller asserts correspond under a weak equivalence.
InvarianceReport triangulation_invariance(const SemiSimplicialSet& s1, const FlatConnection& e1,
                                          const SemiSimplicialSet& s2, const FlatConnection& e2);

}  // namespace dgloc

#endif  // DGLOC_MODULI_HPP
