#include <doctest.h>

#include "dgloc/rbg.hpp"
#include "dgloc/rbg_check.hpp"
#include "dgloc/sampling.hpp"

using namespace dgloc;

namespace {

Polynomial g(const RBPresentation& rb, const std::vector<int>& t, int row = 0, int col = 0)
{
    return Polynomial::generator(rb.generator(t, row, col));
}

Polynomial mul(const RBPresentation& rb, const Polynomial& a, const Polynomial& b)
{
    return multiply(rb.algebra.generators(), a, b);
}

}  // namespace

TEST_CASE("generator labels and degrees")
{
    CHECK(generator_label("012", 1, 2) == "g_012[1,2]");
    const auto rb = build_rb(3, 2);
    const auto& gens = rb.algebra.generators();
    // C(4,2) + C(4,3) + C(4,4) blocks of 4 entries.
    CHECK(gens.size() == (6 + 4 + 1) * 4);
    CHECK(gens.degree(rb.generator({0, 1, 2, 3}, 1, 0)) == -2);
    CHECK(gens.degree(rb.generator({1, 3}, 0, 0)) == 0);
    CHECK(rb.algebra.constraints().size() == 6);
    CHECK(build_rb(0, 2).algebra.generators().size() == 0);
}

TEST_CASE("d(g_012) for r = 1")
{
    const auto rb = build_rb(2, 1);
    const auto expected = mul(rb, g(rb, {1, 2}), g(rb, {0, 1})) - g(rb, {0, 2});
    CHECK(rb.algebra.differential(rb.generator({0, 1, 2}, 0, 0)) == expected);
    CHECK(rb.algebra.differential(rb.generator({0, 1}, 0, 0)).is_zero());
}

TEST_CASE("d(g_012) for r = 2")
{
    const auto rb = build_rb(2, 2);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            Polynomial expected = -g(rb, {0, 2}, a, b);
            for (int k = 0; k < 2; ++k)
                expected += mul(rb, g(rb, {1, 2}, a, k), g(rb, {0, 1}, k, b));
            CHECK(rb.algebra.differential(rb.generator({0, 1, 2}, a, b)) == expected);
        }
}

TEST_CASE("d(g_0123) for r = 1")
{
    const auto rb = build_rb(3, 1);
    const auto expected = -g(rb, {0, 2, 3}) + mul(rb, g(rb, {1, 2, 3}), g(rb, {0, 1})) + g(rb, {0, 1, 3}) -
                          mul(rb, g(rb, {2, 3}), g(rb, {0, 1, 2}));
    CHECK(rb.algebra.differential(rb.generator({0, 1, 2, 3}, 0, 0)) == expected);
}

TEST_CASE("d^2 = 0 on RB_n for n <= 4, r <= 2")
{
    for (int n = 0; n <= 4; ++n)
        for (int r = 1; r <= 2; ++r) {
            CAPTURE(n);
            CAPTURE(r);
            CHECK_FALSE(check_d_squared(build_rb(n, r).algebra).has_value());
        }
}

TEST_CASE("determinant constraint")
{
    const auto rb = build_rb(1, 2);
    const auto& gens = rb.algebra.generators();
    const auto det = determinant_polynomial(gens, "01", 2);
    std::vector<Rational> v(gens.size());
    v[rb.generator({0, 1}, 0, 0)] = 2;
    v[rb.generator({0, 1}, 0, 1)] = 3;
    v[rb.generator({0, 1}, 1, 0)] = 1;
    v[rb.generator({0, 1}, 1, 1)] = 5;
    CHECK(evaluate(gens, det, v) == 7);
}

TEST_CASE("coface and codegeneracy maps")
{
    CHECK(coface_map(3, 1) == std::vector<int>{0, 2, 3});
    CHECK(coface_map(2, 2) == std::vector<int>{0, 1});
    CHECK(codegeneracy_map(2, 1) == std::vector<int>{0, 1, 1, 2});
    CHECK(codegeneracy_map(0, 0) == std::vector<int>{0, 0});
}

TEST_CASE("face and degeneracy images")
{
    const auto rb2 = build_rb(2, 1), rb1 = build_rb(1, 1), rb3 = build_rb(3, 1);
    // d_1 on Delta[2] sends g_01 to g_02.
    const auto d1 = face_map(rb2, rb1, 1);
    CHECK(d1.images[rb1.generator({0, 1}, 0, 0)] == g(rb2, {0, 2}));
    // s_0 collapses edge 01 of Delta[3] to the identity, kills g_012.
    const auto s0 = degeneracy_map(rb2, rb3, 0);
    CHECK(s0.images[rb3.generator({0, 1}, 0, 0)] == Polynomial::constant(1));
    CHECK(s0.images[rb3.generator({0, 1, 2}, 0, 0)].is_zero());
    CHECK(s0.images[rb3.generator({1, 2, 3}, 0, 0)] == g(rb2, {0, 1, 2}));
}

TEST_CASE("structure maps: identities and compatibility with d")
{
    for (int r = 1; r <= 2; ++r) {
        CHECK(check_face_identities(3, r).pass);
        CHECK(check_degeneracy_identities(3, r).pass);
        CHECK(check_structure_maps_commute_with_d(3, r).pass);
        CHECK(check_gauge_action(3, r, 17).pass);
    }
}

TEST_CASE("a corrupted face map is caught")
{
    const auto rb2 = build_rb(2, 1), rb1 = build_rb(1, 1);
    auto f = face_map(rb2, rb1, 0);
    CHECK_FALSE(differential_mismatch(rb1.algebra, rb2.algebra, f).has_value());
    // Doubling the image of g_01 breaks d on g_012 only.
    const auto rb3 = build_rb(3, 1);
    auto top = face_map(rb3, rb2, 1);
    top.images[rb2.generator({0, 1}, 0, 0)] = 2 * top.images[rb2.generator({0, 1}, 0, 0)];
    const auto miss = differential_mismatch(rb2.algebra, rb3.algebra, top);
    REQUIRE(miss.has_value());
    CHECK(*miss == rb2.generator({0, 1, 2}, 0, 0));
}

TEST_CASE("gauge action commutes with d on random families")
{
    Sampler sampler(9);
    for (int r = 1; r <= 2; ++r) {
        const auto rb = build_rb(3, r);
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<RationalMatrix> family;
            for (int k = 0; k <= 3; ++k)
                family.push_back(sampler.invertible(static_cast<std::size_t>(r)));
            CHECK_FALSE(differential_mismatch(rb.algebra, rb.algebra, gauge_transform(rb, family)).has_value());
        }
        std::vector<RationalMatrix> singular(4, RationalMatrix::identity(static_cast<std::size_t>(r)));
        singular[2] = RationalMatrix(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
        CHECK_THROWS_AS(gauge_transform(rb, singular), std::domain_error);
    }
}

TEST_CASE("injectivity over the boundary")
{
    for (int n = 1; n <= 3; ++n) {
        const auto report = injectivity_skeleton_check(n, 2);
        CHECK(report.ok());
        CHECK(report.new_counts.at(1 - n) == 4);
    }
}

TEST_CASE("flat points and rejection of non-flat tuples")
{
    const RationalMatrix a{{1, 1}, {0, 1}}, b{{2, 0}, {1, 1}};
    const auto edges = flat_simplex_connection({a, b});
    CHECK(edges.at({0, 2}) == b * a);
    const auto rb = build_rb(2, 2);
    CHECK_NOTHROW(rb_point(rb, edges));

    auto broken = edges;
    broken.at({0, 2}) = a * b;
    try {
        rb_point(rb, broken);
        FAIL("expected PointError");
    } catch (const PointError& e) {
        CHECK(e.kind() == PointError::Kind::OffPi0);
    }
    auto singular = edges;
    singular.at({0, 1}) = RationalMatrix(2, 2);
    CHECK_THROWS_AS(rb_point(rb, singular), PointError);
}

TEST_CASE("tangent cohomology on Delta[n] is the gauge directions")
{
    Sampler sampler(4);
    for (int n = 1; n <= 3; ++n)
        for (std::size_t r = 1; r <= 2; ++r) {
            const auto result = simplex_tangent_check(n, static_cast<int>(r), sampler.simplex_connection(n, r));
            CHECK(result.h0() == static_cast<std::size_t>(n) * r * r);
            CHECK(result.higher_vanish);
        }
}

TEST_CASE("resolution check report")
{
    const auto checks = resolution_check({3, 1, 5, 3});
    CHECK(all_pass(checks));
    CHECK(checks.size() >= 8);
    CHECK_THROWS_AS(resolution_check({-1, 1, 1, 1}), std::invalid_argument);
}
