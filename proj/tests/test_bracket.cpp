#include <doctest.h>

#include "dgloc/bracket.hpp"
#include "dgloc/sampling.hpp"

using namespace dgloc;

namespace {

TangentVector combine(TangentVector a, const TangentVector& b, int sign)
{
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        a.coords[i] += sign * b.coords[i];
    return a;
}

TangentVector random_vector(Sampler& sampler, const TangentBracket& br, int degree)
{
    auto v = br.zero(degree);
    for (auto& c : v.coords)
        c = sampler.integer(-2, 2);
    return v;
}

int lie_degree(const TangentVector& v) { return v.degree + 1; }

int koszul(const TangentVector& x, const TangentVector& y) { return (lie_degree(x) * lie_degree(y)) % 2 ? -1 : 1; }

}  // namespace

TEST_CASE("bracket laws hold on the standard fixtures")
{
    for (const auto& s : {torus(), sphere(), wedge_of_circles(2), circle(1)})
        for (std::size_t r = 1; r <= 2; ++r) {
            CAPTURE(s.name());
            CAPTURE(r);
            const auto table = bracket_on_tangent(s, FlatConnection(s, trivial_connection(s, r)));
            CHECK(table.ok());
            REQUIRE(table.aw_commutator.has_value());
            CHECK(*table.aw_commutator);
        }
}

TEST_CASE("bracket laws at sampled connections")
{
    Sampler sampler(44);
    const auto t = torus();
    for (int trial = 0; trial < 3; ++trial) {
        const auto table = bracket_on_tangent(t, sampler.flat_connection(t, 2));
        CHECK(table.ok());
        CHECK_FALSE(table.aw_commutator.has_value());
    }
}

TEST_CASE("brackets above the top degree vanish")
{
    const auto s = wedge_of_circles(1);
    const TangentBracket br(s, FlatConnection(s, trivial_connection(s, 2)));
    CHECK(br.top() == 0);
    const auto x = br.basis_vector(0, 1);
    for (const auto& c : br.bracket(x, br.basis_vector(0, 2)).coords)
        CHECK(c == 0);
}

TEST_CASE("cochain-level identities on Delta[3]")
{
    Sampler sampler(7);
    const auto s = standard_simplex(3);
    for (const bool trivial : {true, false}) {
        const auto e = trivial ? FlatConnection(s, trivial_connection(s, 2)) : sampler.flat_connection(s, 2);
        const TangentBracket br(s, e);
        CHECK(br.cubic_vanishes());
        for (int trial = 0; trial < 4; ++trial) {
            const auto x = random_vector(sampler, br, 0);
            const auto y = random_vector(sampler, br, 0);
            const auto z = random_vector(sampler, br, 0);
            const auto w = random_vector(sampler, br, 1);

            CHECK(br.bracket(x, y) == combine(br.zero(1), br.bracket(y, x), -koszul(x, y)));
            CHECK(br.bracket(x, w) == combine(br.zero(2), br.bracket(w, x), -koszul(x, w)));

            // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
            const auto lhs = br.bracket(x, br.bracket(y, z));
            const auto rhs = combine(br.bracket(br.bracket(x, y), z), br.bracket(y, br.bracket(x, z)), koszul(x, y));
            CHECK(lhs == rhs);

            CHECK(br.delta(br.delta(x)) == br.zero(2));
            const auto d_xy = br.delta(br.bracket(x, y));
            const auto leibniz = combine(br.bracket(br.delta(x), y), br.bracket(x, br.delta(y)), -1);
            CHECK(d_xy == leibniz);
        }
    }
}

TEST_CASE("Alexander-Whitney commutator matches the bracket at the trivial connection")
{
    Sampler sampler(19);
    const auto s = torus();
    const TangentBracket br(s, FlatConnection(s, trivial_connection(s, 2)));
    const auto& hom = br.presentation();
    for (int trial = 0; trial < 4; ++trial) {
        const auto x = random_vector(sampler, br, 0);
        const auto y = random_vector(sampler, br, 0);
        const auto aw = aw_commutator(s, tangent_to_cochain(s, hom, x), tangent_to_cochain(s, hom, y));
        CHECK(cochain_to_tangent(s, hom, aw) == br.bracket(x, y));
    }
}

TEST_CASE("bracket table constants")
{
    const auto t = torus();
    const auto table = bracket_on_tangent(t, FlatConnection(t, trivial_connection(t, 1)));
    CHECK(table.dims == std::vector<std::size_t>{2, 1});
    // Degree-0 classes have odd Lie degree, so their bracket is symmetric.
    const auto& c = table.constants.at({0, 0});
    REQUIRE(c.size() == 2);
    REQUIRE(c[0].size() == 2);
    CHECK(c[0][1] == c[1][0]);
}
