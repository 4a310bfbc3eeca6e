#include "dgloc/rbg.hpp"

#include "dgloc/scomplex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dgloc {

std::string generator_label(const std::string& simplex_id, int row, int col)
{
    return "g_" + simplex_id + "[" + std::to_string(row) + "," + std::to_string(col) + "]";
}

Polynomial matrix_product_entry(const GeneratorSet& gens, const std::string& back_id, const std::string& front_id,
                                int r, int row, int col)
{
    Polynomial out;
    for (int k = 0; k < r; ++k) {
        const auto front = Polynomial::generator(gens.index(generator_label(front_id, k + 1, col + 1)));
        const auto back = Polynomial::generator(gens.index(generator_label(back_id, row + 1, k + 1)));
        out += multiply(gens, front, back);
    }
    return out;
}

Polynomial determinant_polynomial(const GeneratorSet& gens, const std::string& edge_id, int r)
{
    std::vector<int> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial det;
    do {
        int inversions = 0;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
                    ++inversions;
        Polynomial term = Polynomial::constant(inversions % 2 == 0 ? 1 : -1);
        for (int i = 0; i < r; ++i)
            term = multiply(gens, term,
                            Polynomial::generator(gens.index(
                                generator_label(edge_id, i + 1, perm[static_cast<std::size_t>(i)] + 1))));
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

namespace {

std::vector<std::vector<int>> increasing_tuples(int n)
{
    std::vector<std::vector<int>> out;
    for (int p = 1; p <= n; ++p) {
        std::vector<bool> pick(static_cast<std::size_t>(n + 1), false);
        std::fill(pick.begin(), pick.begin() + p + 1, true);
        do {
            std::vector<int> t;
            for (int v = 0; v <= n; ++v)
                if (pick[static_cast<std::size_t>(v)])
                    t.push_back(v);
            out.push_back(std::move(t));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return out;
}

std::vector<int> slice(const std::vector<int>& t, std::size_t from, std::size_t to)
{
    return std::vector<int>(t.begin() + static_cast<std::ptrdiff_t>(from),
                            t.begin() + static_cast<std::ptrdiff_t>(to));
}

}  // namespace

GenIndex RBPresentation::generator(const std::vector<int>& tuple, int row, int col) const
{
    return algebra.generators().index(generator_label(vertex_tuple_id(tuple, n), row + 1, col + 1));
}

RBPresentation build_rb(int n, int r)
{
    if (n < 0 || r < 1)
        throw std::invalid_argument("build_rb needs n >= 0 and r >= 1");
    const auto tuples = increasing_tuples(n);
    std::vector<Generator> list;
    for (const auto& t : tuples)
        for (int a = 1; a <= r; ++a)
            for (int b = 1; b <= r; ++b)
                list.push_back({generator_label(vertex_tuple_id(t, n), a, b), 2 - static_cast<int>(t.size())});
    GeneratorSet gens(std::move(list));

    std::vector<Polynomial> diff(gens.size());
    for (const auto& t : tuples) {
        const std::size_t p = t.size() - 1;
        const std::string id = vertex_tuple_id(t, n);
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) {
                Polynomial d;
                for (std::size_t nu = 1; nu < p; ++nu) {
                    auto face = t;
                    face.erase(face.begin() + static_cast<std::ptrdiff_t>(nu));
                    Polynomial term = Polynomial::generator(gens.index(generator_label(vertex_tuple_id(face, n), a + 1, b + 1)));
                    term -= matrix_product_entry(gens, vertex_tuple_id(slice(t, nu, p + 1), n),
                                                 vertex_tuple_id(slice(t, 0, nu + 1), n), r, a, b);
                    d += (nu % 2 == 0 ? Rational(1) : Rational(-1)) * term;
                }
                diff[gens.index(generator_label(id, a + 1, b + 1))] = std::move(d);
            }
    }
    std::vector<Polynomial> constraints;
    for (const auto& t : tuples)
        if (t.size() == 2)
            constraints.push_back(determinant_polynomial(gens, vertex_tuple_id(t, n), r));
    return RBPresentation{n, r, DgPresentation(std::move(gens), std::move(diff), std::move(constraints))};
}

std::vector<int> coface_map(int n, int i)
{
    if (i < 0 || i > n)
        throw std::out_of_range("coface index out of range");
    std::vector<int> f;
    for (int k = 0; k < n; ++k)
        f.push_back(k < i ? k : k + 1);
    return f;
}

std::vector<int> codegeneracy_map(int n, int j)
{
    if (j < 0 || j > n)
        throw std::out_of_range("codegeneracy index out of range");
    std::vector<int> f;
    for (int k = 0; k <= n + 1; ++k)
        f.push_back(k <= j ? k : k - 1);
    return f;
}

AlgebraMorphism simplicial_operator(const RBPresentation& source, const RBPresentation& target,
                                    const std::vector<int>& f)
{
    if (source.r != target.r)
        throw std::invalid_argument("simplicial operator between different ranks");
    if (f.size() != static_cast<std::size_t>(source.n + 1))
        throw std::invalid_argument("simplicial operator has the wrong domain");
    for (std::size_t k = 0; k < f.size(); ++k)
        if (f[k] < 0 || f[k] > target.n || (k > 0 && f[k] < f[k - 1]))
            throw std::invalid_argument("simplicial operator is not monotone into [n]");

    const auto& src = source.algebra.generators();
    AlgebraMorphism out;
    out.images.resize(src.size());
    for (const auto& t : increasing_tuples(source.n)) {
        std::vector<int> image;
        for (int v : t)
            image.push_back(f[static_cast<std::size_t>(v)]);
        const bool injective = std::adjacent_find(image.begin(), image.end()) == image.end();
        for (int a = 0; a < source.r; ++a)
            for (int b = 0; b < source.r; ++b) {
                Polynomial img;
                if (injective)
                    img = Polynomial::generator(target.generator(image, a, b));
                else if (t.size() == 2 && a == b)
                    img = Polynomial::constant(1);
                out.images[source.generator(t, a, b)] = std::move(img);
            }
    }
    return out;
}

AlgebraMorphism face_map(const RBPresentation& rb, const RBPresentation& lower, int i)
{
    if (rb.n < 1 || lower.n != rb.n - 1)
        throw std::invalid_argument("face_map needs RB_n and RB_{n-1}");
    return simplicial_operator(lower, rb, coface_map(rb.n, i));
}

AlgebraMorphism degeneracy_map(const RBPresentation& rb, const RBPresentation& upper, int j)
{
    if (upper.n != rb.n + 1)
        throw std::invalid_argument("degeneracy_map needs RB_n and RB_{n+1}");
    return simplicial_operator(upper, rb, codegeneracy_map(rb.n, j));
}

AlgebraMorphism gauge_transform(const RBPresentation& rb, const std::vector<RationalMatrix>& family)
{
    if (family.size() != static_cast<std::size_t>(rb.n + 1))
        throw std::invalid_argument("gauge family needs one matrix per vertex");
    std::vector<RationalMatrix> inverses;
    for (const auto& h : family) {
        if (h.rows() != static_cast<std::size_t>(rb.r) || !h.is_square())
            throw std::invalid_argument("gauge matrix has the wrong size");
        inverses.push_back(inverse(h));  // throws on singular
    }
    const auto& gens = rb.algebra.generators();
    AlgebraMorphism out;
    out.images.resize(gens.size());
    const auto r = static_cast<std::size_t>(rb.r);
    for (const auto& t : increasing_tuples(rb.n)) {
        const auto& head = family[static_cast<std::size_t>(t.back())];
        const auto& tail_inv = inverses[static_cast<std::size_t>(t.front())];
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b) {
                Polynomial img;
                for (std::size_t c = 0; c < r; ++c)
                    for (std::size_t d = 0; d < r; ++d) {
                        const Rational coeff = head(a, c) * tail_inv(d, b);
                        if (coeff != 0)
                            img += Polynomial::generator(rb.generator(t, static_cast<int>(c), static_cast<int>(d)), coeff);
                    }
                out.images[rb.generator(t, static_cast<int>(a), static_cast<int>(b))] = std::move(img);
            }
    }
    return out;
}

InjectivityReport injectivity_skeleton_check(int n, int r)
{
    const RBPresentation rb = build_rb(n, r);
    const auto& gens = rb.algebra.generators();
    std::vector<int> all(static_cast<std::size_t>(n + 1));
    std::iota(all.begin(), all.end(), 0);

    InjectivityReport rep;
    rep.n = n;
    rep.r = r;
    std::set<GenIndex> top;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            if (n >= 1)
                top.insert(rb.generator(all, a, b));

    std::set<GenIndex> boundary;
    for (GenIndex g = 0; g < gens.size(); ++g) {
        if (top.contains(g)) {
            ++rep.new_counts[gens.degree(g)];
        } else {
            boundary.insert(g);
            ++rep.boundary_counts[gens.degree(g)];
        }
    }
    rep.new_are_top_block = n >= 1 && top.size() == static_cast<std::size_t>(r * r) && rep.new_counts.size() == 1 &&
                            rep.new_counts.begin()->first == 1 - n;

    rep.boundary_closed_under_d = true;
    for (GenIndex g : boundary)
        for (const auto& [m, c] : rb.algebra.differential(g).terms())
            for (auto f : m)
                if (!boundary.contains(f))
                    rep.boundary_closed_under_d = false;

    // Each boundary generator is hit by some face map, and no face map
    // reaches the top block.
    std::set<GenIndex> hit;
    bool face_avoids_top = true;
    if (n >= 1) {
        const RBPresentation lower = build_rb(n - 1, r);
        for (int i = 0; i <= n; ++i) {
            const auto f = face_map(rb, lower, i);
            for (const auto& img : f.images)
                for (const auto& [m, c] : img.terms())
                    for (auto g : m) {
                        if (top.contains(g))
                            face_avoids_top = false;
                        hit.insert(g);
                    }
        }
    }
    rep.boundary_is_face_image = face_avoids_top && hit == boundary;
    return rep;
}

SimplexConnection flat_simplex_connection(const std::vector<RationalMatrix>& steps)
{
    SimplexConnection out;
    const int n = static_cast<int>(steps.size());
    for (int i = 0; i < n; ++i) {
        RationalMatrix acc = steps[static_cast<std::size_t>(i)];
        out[{i, i + 1}] = acc;
        for (int k = i + 2; k <= n; ++k) {
            acc = steps[static_cast<std::size_t>(k - 1)] * acc;
            out[{i, k}] = acc;
        }
    }
    return out;
}

Point rb_point(const RBPresentation& rb, const SimplexConnection& edges)
{
    std::map<std::string, Rational> values;
    for (int i = 0; i <= rb.n; ++i)
        for (int j = i + 1; j <= rb.n; ++j) {
            auto it = edges.find({i, j});
            if (it == edges.end())
                throw PointError(PointError::Kind::MissingValue, vertex_tuple_id({i, j}, rb.n),
                                 "no matrix for edge " + vertex_tuple_id({i, j}, rb.n));
            const auto& m = it->second;
            if (m.rows() != static_cast<std::size_t>(rb.r) || !m.is_square())
                throw std::invalid_argument("edge matrix has the wrong size");
            for (int a = 0; a < rb.r; ++a)
                for (int b = 0; b < rb.r; ++b)
                    values[generator_label(vertex_tuple_id({i, j}, rb.n), a + 1, b + 1)] =
                        m(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
        }
    return make_point(rb.algebra, values);
}

SimplexTangentResult simplex_tangent_check(int n, int r, const SimplexConnection& edges)
{
    const RBPresentation rb = build_rb(n, r);
    const Point x = rb_point(rb, edges);
    SimplexTangentResult out;
    out.dims = cohomology(linearize_at_point(rb.algebra, x)).dims();
    out.higher_vanish = std::all_of(out.dims.begin() + (out.dims.empty() ? 0 : 1), out.dims.end(),
                                    [](std::size_t d) { return d == 0; });
    return out;
}

}  // namespace dgloc
