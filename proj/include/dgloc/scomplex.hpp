// Finite semi-simplicial sets (Delta-complexes): simplices with explicit
// face tables and no degeneracies.

#ifndef DGLOC_SCOMPLEX_HPP
#define DGLOC_SCOMPLEX_HPP

#include <compare>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace dgloc {

/// Handle to a simplex: its dimension and position within that dimension.
struct SimplexRef {
    int dim = 0;
    std::size_t index = 0;

    auto operator<=>(const SimplexRef&) const = default;
};

struct Simplex {
    static constexpr std::size_t kUnresolved = std::numeric_limits<std::size_t>::max();

    std::string id;
    /// Face ids as written, d_0 first.
    std::vector<std::string> face_ids;
    /// Resolved positions in dimension dim-1; kUnresolved when the id is unknown.
    std::vector<std::size_t> faces;
};

class SpaceBuilder;

/// Immutable after construction. Use SpaceBuilder to make or modify one.
class SemiSimplicialSet {
public:
    SemiSimplicialSet() = default;

    const std::string& name() const { return name_; }
    /// Highest dimension with at least one simplex; -1 for the empty space.
    int dimension() const { return static_cast<int>(cells_.size()) - 1; }
    std::size_t count(int dim) const;
    std::size_t total_count() const;

    const Simplex& simplex(SimplexRef s) const;
    const std::string& id(SimplexRef s) const { return simplex(s).id; }
    std::optional<SimplexRef> find(int dim, const std::string& id) const;
    /// Looks an id up in every dimension; ids may repeat across dimensions,
    /// in which case the lowest dimension wins.
    std::optional<SimplexRef> find_any(const std::string& id) const;

    /// i-th face. Requires a resolved face table (validate() == ok).
    SimplexRef face(SimplexRef s, int i) const;

    std::optional<SimplexRef> basepoint() const { return basepoint_; }
    /// Throws std::logic_error when no basepoint is stored.
    SimplexRef require_basepoint() const;

    bool one_skeleton_connected() const;
    long euler_characteristic() const;

    /// All simplices of one dimension as refs, in storage order.
    std::vector<SimplexRef> simplices(int dim) const;

private:
    friend class SpaceBuilder;

    std::string name_;
    std::vector<std::vector<Simplex>> cells_;
    std::vector<std::unordered_map<std::string, std::size_t>> lookup_;
    std::optional<SimplexRef> basepoint_;
};

class SpaceBuilder {
public:
    explicit SpaceBuilder(std::string name);
    /// Starts from an existing space (for edits such as test mutations).
    explicit SpaceBuilder(const SemiSimplicialSet& space);

    /// Throws std::invalid_argument on a duplicate id within the dimension,
    /// a negative dimension, or a face count other than dim+1 (0 for vertices).
    SpaceBuilder& add(int dim, std::string id, std::vector<std::string> face_ids = {});
    /// Replaces the face list of an existing simplex.
    SpaceBuilder& set_faces(int dim, const std::string& id, std::vector<std::string> face_ids);
    SpaceBuilder& set_basepoint(std::string vertex_id);
    SpaceBuilder& rename(std::string name);

    /// Resolves face ids. Unknown ids stay unresolved and are reported by
    /// validate(); an unknown basepoint id throws std::invalid_argument.
    SemiSimplicialSet build() const;

private:
    struct Record {
        int dim;
        std::string id;
        std::vector<std::string> faces;
    };
    std::string name_;
    std::vector<Record> records_;
    std::map<std::pair<int, std::string>, std::size_t> index_;
    std::optional<std::string> basepoint_;
};

struct ValidationReport {
    bool ok = true;
    std::string message;
    /// Simplex the first violation is attributed to, if any.
    std::optional<std::string> simplex_id;
    int simplex_dim = -1;
};

/// Checks resolved faces, the simplicial identities d_i d_j = d_{j-1} d_i
/// (i < j) and, when a basepoint is stored, connectivity of the 1-skeleton.
ValidationReport validate(const SemiSimplicialSet& space);

/// Identifier of the face (i_0 ... i_p) of the standard n-simplex: digits
/// concatenated for n <= 9, dot-separated otherwise.
std::string vertex_tuple_id(const std::vector<int>& vertices, int n);

SemiSimplicialSet standard_simplex(int n);
/// All proper faces of the standard n-simplex (n >= 1).
SemiSimplicialSet boundary_simplex(int n);
/// k vertices v0..v{k-1} and k edges e0..e{k-1}, e_i running v_i -> v_{i+1}.
SemiSimplicialSet circle(int edges);
/// One vertex v with loops e1..eg.
SemiSimplicialSet wedge_of_circles(int circles);
/// One vertex v, edges a b c, triangles L = (b, c, a) and U = (a, c, b).
SemiSimplicialSet torus();
/// Boundary of the 3-simplex.
SemiSimplicialSet sphere();

/// Iterated faces: front_face(s, nu) = d_{nu+1} ... d_p s (vertices 0..nu),
/// back_face(s, nu) = d_0^{p-nu} s (vertices p-nu..p). 0 <= nu <= dim s,
/// otherwise std::out_of_range.
SimplexRef front_face(const SemiSimplicialSet& space, SimplexRef s, int nu);
SimplexRef back_face(const SemiSimplicialSet& space, SimplexRef s, int nu);

/// Rational Betti numbers of the simplicial cochain complex, index = degree.
std::vector<std::size_t> untwisted_cohomology(const SemiSimplicialSet& space);

}  // namespace dgloc

#endif  // DGLOC_SCOMPLEX_HPP
