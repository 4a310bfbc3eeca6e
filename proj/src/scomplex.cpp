#include "dgloc/scomplex.hpp"

#include "dgloc/exactlin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dgloc {

// ---------------------------------------------------------------------------
// SemiSimplicialSet

std::size_t SemiSimplicialSet::count(int dim) const
{
    if (dim < 0 || dim > dimension())
        return 0;
    return cells_[static_cast<std::size_t>(dim)].size();
}

std::size_t SemiSimplicialSet::total_count() const
{
    std::size_t n = 0;
    for (const auto& level : cells_)
        n += level.size();
    return n;
}

const Simplex& SemiSimplicialSet::simplex(SimplexRef s) const
{
    if (s.dim < 0 || s.dim > dimension() || s.index >= count(s.dim))
        throw std::out_of_range("simplex reference out of range");
    return cells_[static_cast<std::size_t>(s.dim)][s.index];
}

std::optional<SimplexRef> SemiSimplicialSet::find(int dim, const std::string& id) const
{
    if (dim < 0 || dim > dimension())
        return std::nullopt;
    const auto& table = lookup_[static_cast<std::size_t>(dim)];
    auto it = table.find(id);
    if (it == table.end())
        return std::nullopt;
    return SimplexRef{dim, it->second};
}

std::optional<SimplexRef> SemiSimplicialSet::find_any(const std::string& id) const
{
    for (int d = 0; d <= dimension(); ++d)
        if (auto s = find(d, id))
            return s;
    return std::nullopt;
}

SimplexRef SemiSimplicialSet::face(SimplexRef s, int i) const
{
    const Simplex& x = simplex(s);
    if (i < 0 || i > s.dim)
        throw std::out_of_range("face index out of range");
    const std::size_t f = x.faces[static_cast<std::size_t>(i)];
    if (f == Simplex::kUnresolved)
        throw std::logic_error("unresolved face '" + x.face_ids[static_cast<std::size_t>(i)] + "' of " + x.id);
    return SimplexRef{s.dim - 1, f};
}

SimplexRef SemiSimplicialSet::require_basepoint() const
{
    if (!basepoint_)
        throw std::logic_error("space '" + name_ + "' has no basepoint");
    return *basepoint_;
}

bool SemiSimplicialSet::one_skeleton_connected() const
{
    const std::size_t n = count(0);
    if (n == 0)
        return true;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto root = [&](std::size_t v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (std::size_t e = 0; e < count(1); ++e) {
        const auto& faces = cells_[1][e].faces;
        if (faces[0] == Simplex::kUnresolved || faces[1] == Simplex::kUnresolved)
            continue;
        parent[root(faces[0])] = root(faces[1]);
    }
    const std::size_t r0 = root(0);
    for (std::size_t v = 1; v < n; ++v)
        if (root(v) != r0)
            return false;
    return true;
}

long SemiSimplicialSet::euler_characteristic() const
{
    long chi = 0;
    for (int d = 0; d <= dimension(); ++d)
        chi += (d % 2 == 0 ? 1L : -1L) * static_cast<long>(count(d));
    return chi;
}

std::vector<SimplexRef> SemiSimplicialSet::simplices(int dim) const
{
    std::vector<SimplexRef> out;
    for (std::size_t i = 0; i < count(dim); ++i)
        out.push_back({dim, i});
    return out;
}

// ---------------------------------------------------------------------------
// SpaceBuilder

SpaceBuilder::SpaceBuilder(std::string name) : name_(std::move(name)) {}

SpaceBuilder::SpaceBuilder(const SemiSimplicialSet& space) : name_(space.name())
{
    for (int d = 0; d <= space.dimension(); ++d)
        for (const auto& s : space.cells_[static_cast<std::size_t>(d)])
            add(d, s.id, s.face_ids);
    if (auto b = space.basepoint())
        basepoint_ = space.id(*b);
}

SpaceBuilder& SpaceBuilder::add(int dim, std::string id, std::vector<std::string> face_ids)
{
    if (dim < 0)
        throw std::invalid_argument("negative simplex dimension for '" + id + "'");
    if (id.empty())
        throw std::invalid_argument("empty simplex id");
    const std::size_t expected = dim == 0 ? 0 : static_cast<std::size_t>(dim) + 1;
    if (face_ids.size() != expected)
        throw std::invalid_argument("simplex '" + id + "' of dimension " + std::to_string(dim) + " needs " +
                                    std::to_string(expected) + " faces, got " + std::to_string(face_ids.size()));
    if (!index_.emplace(std::pair{dim, id}, records_.size()).second)
        throw std::invalid_argument("duplicate simplex id '" + id + "' in dimension " + std::to_string(dim));
    records_.push_back({dim, std::move(id), std::move(face_ids)});
    return *this;
}

SpaceBuilder& SpaceBuilder::set_faces(int dim, const std::string& id, std::vector<std::string> face_ids)
{
    auto it = index_.find({dim, id});
    if (it == index_.end())
        throw std::invalid_argument("no simplex '" + id + "' in dimension " + std::to_string(dim));
    if (face_ids.size() != records_[it->second].faces.size())
        throw std::invalid_argument("face count mismatch for '" + id + "'");
    records_[it->second].faces = std::move(face_ids);
    return *this;
}

SpaceBuilder& SpaceBuilder::set_basepoint(std::string vertex_id)
{
    basepoint_ = std::move(vertex_id);
    return *this;
}

SpaceBuilder& SpaceBuilder::rename(std::string name)
{
    name_ = std::move(name);
    return *this;
}

SemiSimplicialSet SpaceBuilder::build() const
{
    SemiSimplicialSet s;
    s.name_ = name_;
    int top = -1;
    for (const auto& r : records_)
        top = std::max(top, r.dim);
    s.cells_.resize(static_cast<std::size_t>(top + 1));
    s.lookup_.resize(static_cast<std::size_t>(top + 1));
    for (const auto& r : records_) {
        auto& level = s.cells_[static_cast<std::size_t>(r.dim)];
        s.lookup_[static_cast<std::size_t>(r.dim)].emplace(r.id, level.size());
        level.push_back(Simplex{r.id, r.faces, {}});
    }
    for (int d = 1; d <= top; ++d) {
        const auto& below = s.lookup_[static_cast<std::size_t>(d - 1)];
        for (auto& x : s.cells_[static_cast<std::size_t>(d)]) {
            x.faces.reserve(x.face_ids.size());
            for (const auto& f : x.face_ids) {
                auto it = below.find(f);
                x.faces.push_back(it == below.end() ? Simplex::kUnresolved : it->second);
            }
        }
    }
    if (basepoint_) {
        auto v = s.find(0, *basepoint_);
        if (!v)
            throw std::invalid_argument("basepoint '" + *basepoint_ + "' is not a vertex");
        s.basepoint_ = v;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate(const SemiSimplicialSet& space)
{
    auto fail = [](std::string msg, const Simplex& x, int dim) {
        ValidationReport r;
        r.ok = false;
        r.message = std::move(msg);
        r.simplex_id = x.id;
        r.simplex_dim = dim;
        return r;
    };

    for (int d = 1; d <= space.dimension(); ++d)
        for (std::size_t k = 0; k < space.count(d); ++k) {
            const Simplex& x = space.simplex({d, k});
            for (std::size_t i = 0; i < x.faces.size(); ++i)
                if (x.faces[i] == Simplex::kUnresolved)
                    return fail("face d_" + std::to_string(i) + " of " + x.id + " is '" + x.face_ids[i] +
                                    "', which is not a " + std::to_string(d - 1) + "-simplex",
                                x, d);
        }

    for (int d = 2; d <= space.dimension(); ++d)
        for (std::size_t k = 0; k < space.count(d); ++k) {
            const SimplexRef s{d, k};
            for (int j = 1; j <= d; ++j)
                for (int i = 0; i < j; ++i) {
                    const SimplexRef lhs = space.face(space.face(s, j), i);
                    const SimplexRef rhs = space.face(space.face(s, i), j - 1);
                    if (lhs != rhs) {
                        std::ostringstream msg;
                        msg << "simplicial identity d_" << i << " d_" << j << " = d_" << j - 1 << " d_" << i
                            << " fails on " << space.id(s) << ": " << space.id(lhs) << " != " << space.id(rhs);
                        return fail(msg.str(), space.simplex(s), d);
                    }
                }
        }

    if (space.basepoint() && !space.one_skeleton_connected()) {
        ValidationReport r;
        r.ok = false;
        r.message = "1-skeleton of '" + space.name() + "' is not connected";
        return r;
    }
    return {};
}

// ---------------------------------------------------------------------------
// Builders

std::string vertex_tuple_id(const std::vector<int>& vertices, int n)
{
    std::string id;
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        if (n > 9 && k > 0)
            id += '.';
        id += std::to_string(vertices[k]);
    }
    return id;
}

namespace {

// Faces of the standard n-simplex of dimension <= max_dim, lexicographic
// within each dimension.
SpaceBuilder simplex_faces(int n, int max_dim, std::string name)
{
    SpaceBuilder b(std::move(name));
    for (int p = 0; p <= max_dim; ++p) {
        std::vector<bool> pick(static_cast<std::size_t>(n + 1), false);
        std::fill(pick.begin(), pick.begin() + p + 1, true);
        do {
            std::vector<int> verts;
            for (int v = 0; v <= n; ++v)
                if (pick[static_cast<std::size_t>(v)])
                    verts.push_back(v);
            std::vector<std::string> faces;
            if (p > 0)
                for (int i = 0; i <= p; ++i) {
                    auto f = verts;
                    f.erase(f.begin() + i);
                    faces.push_back(vertex_tuple_id(f, n));
                }
            b.add(p, vertex_tuple_id(verts, n), std::move(faces));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    b.set_basepoint(vertex_tuple_id({0}, n));
    return b;
}

}  // namespace

SemiSimplicialSet standard_simplex(int n)
{
    if (n < 0)
        throw std::invalid_argument("standard_simplex: n must be >= 0");
    return simplex_faces(n, n, "simplex" + std::to_string(n)).build();
}

SemiSimplicialSet boundary_simplex(int n)
{
    if (n < 1)
        throw std::invalid_argument("boundary_simplex: n must be >= 1");
    return simplex_faces(n, n - 1, "boundary" + std::to_string(n)).build();
}

SemiSimplicialSet circle(int edges)
{
    if (edges < 1)
        throw std::invalid_argument("circle: need at least one edge");
    SpaceBuilder b("circle" + std::to_string(edges));
    for (int i = 0; i < edges; ++i)
        b.add(0, "v" + std::to_string(i));
    for (int i = 0; i < edges; ++i)
        b.add(1, "e" + std::to_string(i), {"v" + std::to_string((i + 1) % edges), "v" + std::to_string(i)});
    b.set_basepoint("v0");
    return b.build();
}

SemiSimplicialSet wedge_of_circles(int circles)
{
    if (circles < 1)
        throw std::invalid_argument("wedge_of_circles: need at least one circle");
    SpaceBuilder b("wedge" + std::to_string(circles));
    b.add(0, "v");
    for (int i = 1; i <= circles; ++i)
        b.add(1, "e" + std::to_string(i), {"v", "v"});
    b.set_basepoint("v");
    return b.build();
}

SemiSimplicialSet torus()
{
    SpaceBuilder b("torus");
    b.add(0, "v");
    b.add(1, "a", {"v", "v"});
    b.add(1, "b", {"v", "v"});
    b.add(1, "c", {"v", "v"});
    b.add(2, "L", {"b", "c", "a"});
    b.add(2, "U", {"a", "c", "b"});
    b.set_basepoint("v");
    return b.build();
}

SemiSimplicialSet sphere()
{
    return SpaceBuilder(boundary_simplex(3)).rename("sphere").build();
}

// ---------------------------------------------------------------------------
// Iterated faces

SimplexRef front_face(const SemiSimplicialSet& space, SimplexRef s, int nu)
{
    if (nu < 0 || nu > s.dim)
        throw std::out_of_range("front_face: nu out of range");
    // d_{nu+1} d_{nu+2} ... d_p: apply d_p first.
    for (int i = s.dim; i > nu; --i)
        s = space.face(s, i);
    return s;
}

SimplexRef back_face(const SemiSimplicialSet& space, SimplexRef s, int nu)
{
    if (nu < 0 || nu > s.dim)
        throw std::out_of_range("back_face: nu out of range");
    while (s.dim > nu)
        s = space.face(s, 0);
    return s;
}

// ---------------------------------------------------------------------------
// Untwisted cohomology

std::vector<std::size_t> untwisted_cohomology(const SemiSimplicialSet& space)
{
    const int top = space.dimension();
    if (top < 0)
        return {};
    std::vector<std::size_t> dims;
    std::vector<RationalMatrix> diffs;
    for (int p = 0; p <= top; ++p)
        dims.push_back(space.count(p));
    for (int p = 0; p < top; ++p) {
        RationalMatrix d(space.count(p + 1), space.count(p));
        for (std::size_t k = 0; k < space.count(p + 1); ++k)
            for (int i = 0; i <= p + 1; ++i) {
                const SimplexRef f = space.face({p + 1, k}, i);
                d(k, f.index) += (i % 2 == 0) ? 1 : -1;
            }
        diffs.push_back(std::move(d));
    }
    return cohomology(RationalComplex(0, std::move(dims), std::move(diffs))).dims();
}

}  // namespace dgloc
