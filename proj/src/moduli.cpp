#include "dgloc/moduli.hpp"

#include "dgloc/connection_io.hpp"
#include "dgloc/rbg.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <set>

namespace dgloc {

namespace {

void require_valid(const SemiSimplicialSet& space)
{
    const auto report = validate(space);
    if (!report.ok)
        throw SpaceError(report.message);
}

void require_shape(const SemiSimplicialSet& space, const Connection& e)
{
    if (e.r < 1)
        throw ConnectionError(ConnectionError::Kind::Shape, "", "connection rank must be at least 1");
    if (e.edges.size() != space.count(1))
        throw ConnectionError(ConnectionError::Kind::Shape, "", "connection needs one matrix per edge");
    for (std::size_t i = 0; i < e.edges.size(); ++i)
        if (e.edges[i].rows() != e.r || e.edges[i].cols() != e.r)
            throw ConnectionError(ConnectionError::Kind::Shape, space.id({1, i}),
                                  "matrix on edge " + space.id({1, i}) + " is not " + std::to_string(e.r) + "x" +
                                      std::to_string(e.r));
}

void require_invertible(const SemiSimplicialSet& space, const Connection& e)
{
    for (std::size_t i = 0; i < e.edges.size(); ++i)
        if (determinant(e.edges[i]) == 0)
            throw ConnectionError(ConnectionError::Kind::Singular, space.id({1, i}),
                                  "matrix on edge " + space.id({1, i}) + " is singular");
}

std::size_t position_in(const GeneratorSet& gens, GenIndex g)
{
    const auto& list = gens.of_degree(gens.degree(g));
    return static_cast<std::size_t>(std::lower_bound(list.begin(), list.end(), g) - list.begin());
}

}  // namespace

// ---------------------------------------------------------------------------

MatrixCochain zero_cochain(const SemiSimplicialSet& space, int degree, std::size_t r)
{
    MatrixCochain c{degree, r, {}};
    if (degree >= 0 && degree <= space.dimension())
        c.values.assign(space.count(degree), RationalMatrix(r, r));
    return c;
}

MatrixCochain aw_product(const SemiSimplicialSet& space, const MatrixCochain& phi, const MatrixCochain& psi)
{
    if (phi.r != psi.r)
        throw std::invalid_argument("cochains of different rank");
    const int p = phi.degree;
    const int q = psi.degree;
    MatrixCochain out = zero_cochain(space, p + q, phi.r);
    for (auto s : space.simplices(p + q)) {
        const auto back = back_face(space, s, p);
        const auto front = front_face(space, s, q);
        out.values[s.index] = phi.values[back.index] * psi.values[front.index];
    }
    return out;
}

MatrixCochain coboundary(const SemiSimplicialSet& space, const MatrixCochain& phi)
{
    MatrixCochain out = zero_cochain(space, phi.degree + 1, phi.r);
    for (auto s : space.simplices(phi.degree + 1))
        for (int nu = 0; nu <= phi.degree + 1; ++nu) {
            const auto& v = phi.values[space.face(s, nu).index];
            if (nu % 2 == 0)
                out.values[s.index] += v;
            else
                out.values[s.index] -= v;
        }
    return out;
}

// ---------------------------------------------------------------------------

Connection make_connection(const SemiSimplicialSet& space, std::size_t r,
                           const std::map<std::string, RationalMatrix>& edges)
{
    Connection e{r, {}};
    for (const auto& [id, m] : edges)
        if (!space.find(1, id))
            throw ConnectionError(ConnectionError::Kind::Shape, id, "unknown edge " + id);
    for (auto s : space.simplices(1)) {
        auto it = edges.find(space.id(s));
        if (it == edges.end())
            throw ConnectionError(ConnectionError::Kind::Shape, space.id(s), "no matrix for edge " + space.id(s));
        e.edges.push_back(it->second);
    }
    require_shape(space, e);
    return e;
}

Connection trivial_connection(const SemiSimplicialSet& space, std::size_t r)
{
    return Connection{r, std::vector<RationalMatrix>(space.count(1), RationalMatrix::identity(r))};
}

bool is_trivial(const Connection& e)
{
    const auto id = RationalMatrix::identity(e.r);
    return std::all_of(e.edges.begin(), e.edges.end(), [&](const RationalMatrix& m) { return m == id; });
}

MatrixCochain mc_residual(const SemiSimplicialSet& space, const Connection& e)
{
    require_valid(space);
    require_shape(space, e);
    require_invertible(space, e);
    MatrixCochain out = zero_cochain(space, 2, e.r);
    for (auto s : space.simplices(2)) {
        const auto& m0 = e.edges[space.face(s, 0).index];
        const auto& m1 = e.edges[space.face(s, 1).index];
        const auto& m2 = e.edges[space.face(s, 2).index];
        out.values[s.index] = m0 * m2;
        out.values[s.index] -= m1;
    }
    return out;
}

std::optional<SimplexRef> check_flat(const SemiSimplicialSet& space, const Connection& e)
{
    const auto residual = mc_residual(space, e);
    for (std::size_t i = 0; i < residual.values.size(); ++i)
        if (!residual.values[i].is_zero())
            return SimplexRef{2, i};
    return std::nullopt;
}

FlatConnection::FlatConnection(const SemiSimplicialSet& space, Connection e) : e_(std::move(e))
{
    if (auto bad = check_flat(space, e_))
        throw ConnectionError(ConnectionError::Kind::NonFlat, space.id(*bad),
                              "connection is not flat on 2-simplex " + space.id(*bad));
}

Connection gauge_apply(const SemiSimplicialSet& space, const std::vector<RationalMatrix>& family, const Connection& e)
{
    require_shape(space, e);
    if (family.size() != space.count(0))
        throw std::invalid_argument("gauge family needs one matrix per vertex");
    std::vector<RationalMatrix> inverses;
    for (std::size_t v = 0; v < family.size(); ++v) {
        if (family[v].rows() != e.r || family[v].cols() != e.r)
            throw std::invalid_argument("gauge matrix has the wrong size");
        if (determinant(family[v]) == 0)
            throw ConnectionError(ConnectionError::Kind::Singular, space.id({0, v}),
                                  "gauge matrix at vertex " + space.id({0, v}) + " is singular");
        inverses.push_back(inverse(family[v]));
    }
    Connection out{e.r, {}};
    for (auto s : space.simplices(1)) {
        const auto head = space.face(s, 0).index;
        const auto tail = space.face(s, 1).index;
        out.edges.push_back(family[head] * e.edges[s.index] * inverses[tail]);
    }
    return out;
}

FlatConnection gauge_apply(const SemiSimplicialSet& space, const std::vector<RationalMatrix>& family,
                           const FlatConnection& e)
{
    return FlatConnection(space, gauge_apply(space, family, e.connection()));
}

// ---------------------------------------------------------------------------

GenIndex HomPresentation::generator(const SemiSimplicialSet& space, SimplexRef s, int row, int col) const
{
    return algebra.generators().index(generator_label(space.id(s), row + 1, col + 1));
}

HomPresentation build_hom_presentation(const SemiSimplicialSet& space, std::size_t r)
{
    if (r < 1)
        throw std::invalid_argument("rank must be at least 1");
    require_valid(space);
    const int ri = static_cast<int>(r);

    std::set<std::string> seen;
    std::vector<Generator> list;
    for (int p = 1; p <= space.dimension(); ++p)
        for (auto s : space.simplices(p)) {
            if (!seen.insert(space.id(s)).second)
                throw SpaceError("simplex id " + space.id(s) + " is used in two positive dimensions");
            for (int a = 1; a <= ri; ++a)
                for (int b = 1; b <= ri; ++b)
                    list.push_back({generator_label(space.id(s), a, b), 1 - p});
        }
    GeneratorSet gens(std::move(list));

    std::vector<Polynomial> diff(gens.size());
    std::vector<GeneratorSite> sites(gens.size());
    for (int p = 1; p <= space.dimension(); ++p)
        for (auto s : space.simplices(p))
            for (int a = 0; a < ri; ++a)
                for (int b = 0; b < ri; ++b) {
                    Polynomial d;
                    for (int nu = 1; nu < p; ++nu) {
                        Polynomial term = Polynomial::generator(
                            gens.index(generator_label(space.id(space.face(s, nu)), a + 1, b + 1)));
                        term -= matrix_product_entry(gens, space.id(back_face(space, s, p - nu)),
                                                     space.id(front_face(space, s, nu)), ri, a, b);
                        d += (nu % 2 == 0 ? Rational(1) : Rational(-1)) * term;
                    }
                    const GenIndex g = gens.index(generator_label(space.id(s), a + 1, b + 1));
                    diff[g] = std::move(d);
                    sites[g] = GeneratorSite{s, a, b};
                }

    std::vector<Polynomial> constraints;
    for (auto s : space.simplices(1))
        constraints.push_back(determinant_polynomial(gens, space.id(s), ri));
    return HomPresentation{r, DgPresentation(std::move(gens), std::move(diff), std::move(constraints)),
                           std::move(sites)};
}

Point connection_to_point(const SemiSimplicialSet& space, const HomPresentation& hom, const Connection& e)
{
    require_shape(space, e);
    if (e.r != hom.r)
        throw ConnectionError(ConnectionError::Kind::Shape, "", "connection rank differs from the presentation");
    RationalVector values(hom.algebra.generators().size());
    for (auto s : space.simplices(1))
        for (std::size_t a = 0; a < e.r; ++a)
            for (std::size_t b = 0; b < e.r; ++b)
                values[hom.generator(space, s, static_cast<int>(a), static_cast<int>(b))] = e.edges[s.index](a, b);
    return make_point(hom.algebra, std::move(values));
}

Connection point_to_connection(const SemiSimplicialSet& space, const HomPresentation& hom, const Point& x)
{
    Connection e = trivial_connection(space, hom.r);
    for (auto s : space.simplices(1))
        for (std::size_t a = 0; a < hom.r; ++a)
            for (std::size_t b = 0; b < hom.r; ++b)
                e.edges[s.index](a, b) = x[hom.generator(space, s, static_cast<int>(a), static_cast<int>(b))];
    return e;
}

MatrixCochain tangent_to_cochain(const SemiSimplicialSet& space, const HomPresentation& hom, const TangentVector& v)
{
    const auto& basis = hom.algebra.generators().of_degree(-v.degree);
    if (v.coords.size() != basis.size())
        throw std::invalid_argument("tangent vector has the wrong number of coordinates");
    MatrixCochain c = zero_cochain(space, v.degree + 1, hom.r);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& site = hom.sites[basis[i]];
        c.values[site.simplex.index](static_cast<std::size_t>(site.row), static_cast<std::size_t>(site.col)) =
            v.coords[i];
    }
    return c;
}

TangentVector cochain_to_tangent(const SemiSimplicialSet& space, const HomPresentation& hom, const MatrixCochain& c)
{
    (void)space;
    const auto& basis = hom.algebra.generators().of_degree(-(c.degree - 1));
    TangentVector v{c.degree - 1, RationalVector(basis.size())};
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& site = hom.sites[basis[i]];
        v.coords[i] = c.values[site.simplex.index](static_cast<std::size_t>(site.row), static_cast<std::size_t>(site.col));
    }
    return v;
}

// ---------------------------------------------------------------------------

RationalComplex deformation_complex(const SemiSimplicialSet& space, const FlatConnection& e)
{
    const auto hom = build_hom_presentation(space, e.r());
    return linearize_at_point(hom.algebra, connection_to_point(space, hom, e.connection()));
}

RationalMatrix gauge_linearization(const SemiSimplicialSet& space, const HomPresentation& hom, const FlatConnection& e)
{
    const auto base = space.basepoint();
    if (!base)
        throw SpaceError("space " + space.name() + " has no basepoint");
    const std::size_t r = e.r();
    const std::size_t rr = r * r;
    const auto& gens = hom.algebra.generators();

    // Column block of each vertex; the basepoint has none.
    std::vector<std::optional<std::size_t>> block(space.count(0));
    std::size_t next = 0;
    for (std::size_t v = 0; v < space.count(0); ++v)
        if (v != base->index)
            block[v] = next++;

    RationalMatrix g(gens.of_degree(0).size(), next * rr);
    for (auto s : space.simplices(1)) {
        const auto& m = e[s.index];
        auto row = [&](std::size_t i, std::size_t j) {
            return position_in(gens, hom.generator(space, s, static_cast<int>(i), static_cast<int>(j)));
        };
        if (auto head = block[space.face(s, 0).index])
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = 0; b < r; ++b)
                    for (std::size_t j = 0; j < r; ++j)
                        g(row(a, j), *head * rr + a * r + b) += m(b, j);
        if (auto tail = block[space.face(s, 1).index])
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = 0; b < r; ++b)
                    for (std::size_t i = 0; i < r; ++i)
                        g(row(i, b), *tail * rr + a * r + b) -= m(i, a);
    }
    return g;
}

RationalComplex restricted_deformation_complex(const SemiSimplicialSet& space, const FlatConnection& e)
{
    require_valid(space);
    if (!space.basepoint())
        throw SpaceError("space " + space.name() + " has no basepoint");
    if (!space.one_skeleton_connected())
        throw SpaceError("space " + space.name() + " has a disconnected 1-skeleton");
    const auto hom = build_hom_presentation(space, e.r());
    const auto tangent = linearize_at_point(hom.algebra, connection_to_point(space, hom, e.connection()));
    auto g = gauge_linearization(space, hom, e);

    std::vector<std::size_t> dims{g.cols()};
    std::vector<RationalMatrix> diffs{std::move(g)};
    for (int k = 0; k <= tangent.highest_degree(); ++k) {
        dims.push_back(tangent.dim(k));
        if (k < tangent.highest_degree())
            diffs.push_back(tangent.differential(k));
    }
    return RationalComplex(-1, std::move(dims), std::move(diffs));
}

DeformationReport tangent_report(const SemiSimplicialSet& space, const FlatConnection& e, bool with_bases)
{
    const auto restricted = restricted_deformation_complex(space, e);
    const auto h = cohomology(restricted, with_bases);

    DeformationReport rep;
    rep.space = space.name();
    rep.basepoint = space.id(*space.basepoint());
    rep.connection_digest = connection_digest(space, e.connection());
    rep.r = e.r();
    rep.gauge_kernel_dim = h.dim(-1);
    for (int k = 0; k <= restricted.highest_degree(); ++k) {
        rep.dims.push_back(h.dim(k));
        if (with_bases)
            rep.bases.push_back(h.representatives(k));
    }
    rep.prequotient_dims = cohomology(deformation_complex(space, e)).dims();

    long chi_chain = 0;
    long chi_coh = 0;
    for (int k = -1; k <= restricted.highest_degree(); ++k) {
        const long sign = (k % 2 == 0) ? 1 : -1;
        chi_chain += sign * static_cast<long>(restricted.dim(k));
        chi_coh += sign * static_cast<long>(h.dim(k));
    }
    rep.euler_consistent = chi_chain == chi_coh;
    return rep;
}

std::string text_digest(std::string_view text)
{
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

std::string connection_digest(const SemiSimplicialSet& space, const Connection& e)
{
    return text_digest(serialize_connection(space, e));
}

InvarianceReport triangulation_invariance(const SemiSimplicialSet& s1, const FlatConnection& e1,
                                          const SemiSimplicialSet& s2, const FlatConnection& e2)
{
    InvarianceReport rep;
    rep.first = tangent_report(s1, e1).dims;
    rep.second = tangent_report(s2, e2).dims;
    auto trim = [](std::vector<std::size_t> v) {
        while (!v.empty() && v.back() == 0)
            v.pop_back();
        return v;
    };
    rep.equal = trim(rep.first) == trim(rep.second);
    return rep;
}

}  // namespace dgloc
