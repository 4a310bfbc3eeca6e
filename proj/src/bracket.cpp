#include "dgloc/bracket.hpp"

namespace dgloc {

namespace {

int sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

bool same(const TangentVector& x, const TangentVector& y)
{
    return x.degree == y.degree && x.coords == y.coords;
}

TangentVector combine(TangentVector x, const TangentVector& y, int s)
{
    for (std::size_t i = 0; i < x.coords.size(); ++i)
        x.coords[i] += s * y.coords[i];
    return x;
}

RationalVector scaled_sum(const RationalVector& acc, const RationalVector& v, int s)
{
    if (acc.empty())
        return s == 1 ? v : scaled_sum(RationalVector(v.size()), v, s);
    RationalVector out = acc;
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] += s * v[i];
    return out;
}

}  // namespace

TangentBracket::TangentBracket(const SemiSimplicialSet& space, const FlatConnection& e)
    : hom_(build_hom_presentation(space, e.r())),
      point_(connection_to_point(space, hom_, e.connection())),
      complex_(linearize_at_point(hom_.algebra, point_)),
      quadratic_(hom_.algebra, point_, 2)
{
    cubic_zero_ = TaylorComponent(hom_.algebra, point_, 3).is_zero();
}

TangentVector TangentBracket::zero(int degree) const
{
    return TangentVector{degree, RationalVector(complex_.dim(degree))};
}

TangentVector TangentBracket::basis_vector(int degree, std::size_t i) const
{
    TangentVector v = zero(degree);
    v.coords.at(i) = 1;
    return v;
}

TangentVector TangentBracket::bracket(const TangentVector& x, const TangentVector& y) const
{
    const int out = x.degree + y.degree + 1;
    if (x.degree > top() || y.degree > top() || out > top())
        return zero(out);
    return whitehead_bracket(quadratic_, x, y);
}

TangentVector TangentBracket::delta(const TangentVector& x) const
{
    if (x.degree >= top())
        return zero(x.degree + 1);
    TangentVector out{x.degree + 1, complex_.differential(x.degree).apply(x.coords)};
    if (x.degree % 2 != 0)
        for (auto& c : out.coords)
            c = -c;
    return out;
}

bool TangentBracket::cubic_vanishes() const { return cubic_zero_; }

MatrixCochain aw_commutator(const SemiSimplicialSet& space, const MatrixCochain& phi, const MatrixCochain& psi)
{
    MatrixCochain out = aw_product(space, phi, psi);
    const MatrixCochain other = aw_product(space, psi, phi);
    const bool minus = (phi.degree * psi.degree) % 2 == 0;
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        if (minus)
            out.values[i] -= other.values[i];
        else
            out.values[i] += other.values[i];
    }
    return out;
}

BracketTable bracket_on_tangent(const SemiSimplicialSet& space, const FlatConnection& e)
{
    const TangentBracket tb(space, e);
    const auto restricted = restricted_deformation_complex(space, e);
    const auto h = cohomology(restricted, true);
    const int top = tb.top();

    BracketTable table;
    table.r = e.r();
    for (int k = 0; k <= top; ++k)
        table.dims.push_back(h.dim(k));

    auto rep = [&](int degree, std::size_t i) { return TangentVector{degree, h.representatives(degree)[i]}; };

    table.closed = true;
    for (int a = 0; a <= top; ++a)
        for (int b = 0; a + b + 1 <= top; ++b) {
            auto& block = table.constants[{a, b}];
            block.assign(h.dim(a), std::vector<RationalVector>(h.dim(b)));
            for (std::size_t i = 0; i < h.dim(a); ++i)
                for (std::size_t j = 0; j < h.dim(b); ++j) {
                    const auto v = tb.bracket(rep(a, i), rep(b, j));
                    if (!h.is_cocycle(a + b + 1, v.coords)) {
                        table.closed = false;
                        block[i][j] = RationalVector(h.dim(a + b + 1));
                        continue;
                    }
                    block[i][j] = h.classify(a + b + 1, v.coords);
                }
        }

    table.descends = true;
    for (int a = 0; a <= top; ++a)
        for (int b = 0; a + b + 1 <= top; ++b)
            for (const auto& beta : h.boundaries(a))
                for (std::size_t j = 0; j < h.dim(b); ++j) {
                    const auto v = tb.bracket(TangentVector{a, beta}, rep(b, j));
                    if (!h.is_coboundary(a + b + 1, v.coords))
                        table.descends = false;
                }

    table.antisymmetric = true;
    for (const auto& [key, block] : table.constants) {
        const auto [a, b] = key;
        const auto& mirror = table.constants.at({b, a});
        const int s = -sign((a + 1) * (b + 1));
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = 0; j < block[i].size(); ++j) {
                RationalVector expected = mirror[j][i];
                for (auto& c : expected)
                    c *= s;
                if (block[i][j] != expected)
                    table.antisymmetric = false;
            }
    }

    // [x, [y, z]] for basis classes, expanded through the structure constants.
    auto nested = [&](int a, std::size_t i, int b, std::size_t j, int c, std::size_t k) {
        const auto& inner = table.constants.at({b, c})[j][k];
        const auto& outer = table.constants.at({a, b + c + 1})[i];
        RationalVector out(h.dim(a + b + c + 2));
        for (std::size_t m = 0; m < inner.size(); ++m)
            if (inner[m] != 0)
                for (std::size_t t = 0; t < out.size(); ++t)
                    out[t] += inner[m] * outer[m][t];
        return out;
    };
    table.jacobi = true;
    for (int a = 0; a <= top; ++a)
        for (int b = 0; a + b + 2 <= top; ++b)
            for (int c = 0; a + b + c + 2 <= top; ++c)
                for (std::size_t i = 0; i < h.dim(a); ++i)
                    for (std::size_t j = 0; j < h.dim(b); ++j)
                        for (std::size_t k = 0; k < h.dim(c); ++k) {
                            const int la = a + 1, lb = b + 1, lc = c + 1;
                            RationalVector sum;
                            sum = scaled_sum(sum, nested(a, i, b, j, c, k), sign(la * lc));
                            sum = scaled_sum(sum, nested(b, j, c, k, a, i), sign(lb * la));
                            sum = scaled_sum(sum, nested(c, k, a, i, b, j), sign(lc * lb));
                            if (!is_zero(sum))
                                table.jacobi = false;
                        }

    table.lambda1_squared_zero = !restricted.d_squared_failure().has_value();

    table.lambda1_derivation = true;
    for (int a = 0; a <= top; ++a)
        for (int b = 0; a + b + 1 <= top; ++b)
            for (std::size_t i = 0; i < tb.dim(a); ++i)
                for (std::size_t j = 0; j < tb.dim(b); ++j) {
                    const auto x = tb.basis_vector(a, i);
                    const auto y = tb.basis_vector(b, j);
                    const auto lhs = tb.delta(tb.bracket(x, y));
                    const auto rhs = combine(tb.bracket(tb.delta(x), y), tb.bracket(x, tb.delta(y)), sign(a + 1));
                    if (!same(lhs, rhs))
                        table.lambda1_derivation = false;
                }

    table.lambda3_zero = tb.cubic_vanishes();

    if (is_trivial(e.connection())) {
        bool agree = true;
        const auto& hom = tb.presentation();
        for (int a = 0; a <= top; ++a)
            for (int b = 0; a + b + 1 <= top; ++b)
                for (std::size_t i = 0; i < tb.dim(a); ++i)
                    for (std::size_t j = 0; j < tb.dim(b); ++j) {
                        const auto x = tb.basis_vector(a, i);
                        const auto y = tb.basis_vector(b, j);
                        const auto expected = cochain_to_tangent(
                            space, hom,
                            aw_commutator(space, tangent_to_cochain(space, hom, x), tangent_to_cochain(space, hom, y)));
                        if (!same(tb.bracket(x, y), expected))
                            agree = false;
                    }
        table.aw_commutator = agree;
    }
    return table;
}

}  // namespace dgloc
