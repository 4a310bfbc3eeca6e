#include <doctest.h>

#include "dgloc/exactlin.hpp"

#include <random>

using namespace dgloc;

namespace {

Rational q(long num, long den)
{
    Rational x(num, den);
    x.canonicalize();
    return x;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range)
{
    std::uniform_int_distribution<int> entry(-range, range);
    std::uniform_int_distribution<int> den(1, 3);
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = q(entry(rng), den(rng));
    return m;
}

/// Rank-deficient matrix as a product of thin factors.
RationalMatrix low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t k)
{
    return random_matrix(rng, rows, k, 3) * random_matrix(rng, k, cols, 3);
}

}  // namespace

TEST_CASE("rationals parse and print")
{
    CHECK(parse_rational("3/6") == q(1, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(parse_rational("+2/3") == q(2, 3));
    CHECK(format_rational(q(6, 4)) == "3/2");
    CHECK(format_rational(Rational(-5)) == "-5");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("matrix arithmetic")
{
    const RationalMatrix a{{1, 2}, {3, 4}};
    const RationalMatrix b{{0, 1}, {1, 0}};
    CHECK(a * b == RationalMatrix{{2, 1}, {4, 3}});
    CHECK(a + b == RationalMatrix{{1, 3}, {4, 4}});
    CHECK(a.transpose() == RationalMatrix{{1, 3}, {2, 4}});
    CHECK(a.apply(RationalVector{1, -1}) == RationalVector{-1, -1});
    CHECK(RationalMatrix::identity(2) * a == a);
    CHECK(a.to_string() == "1 2 ; 3 4");
}

TEST_CASE("rank, kernel and image of a known matrix")
{
    const RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(rank(m) == 2);
    const auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    CHECK(is_zero(m.apply(ker[0])));
    CHECK(image_basis(m).size() == 2);
    CHECK(determinant(m) == 0);
    CHECK_THROWS_AS(inverse(m), std::domain_error);
}

TEST_CASE("kernel vectors are primitive integral")
{
    const RationalMatrix m{{q(1, 2), q(1, 3)}};
    const auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    for (const auto& x : ker[0])
        CHECK(x.get_den() == 1);
    CHECK(is_zero(m.apply(ker[0])));
}

TEST_CASE("empty shapes")
{
    const RationalMatrix z(0, 3);
    CHECK(rank(z) == 0);
    CHECK(kernel_basis(z).size() == 3);
    const RationalMatrix w(2, 0);
    CHECK(rank(w) == 0);
    CHECK(kernel_basis(w).empty());
}

TEST_CASE("rank-nullity and solve on random matrices")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + trial % 5, cols = 1 + (trial * 3) % 6;
        const std::size_t k = 1 + trial % std::min(rows, cols);
        const auto m = trial % 2 ? low_rank(rng, rows, cols, k) : random_matrix(rng, rows, cols, 4);
        const auto ker = kernel_basis(m);
        CHECK(rank(m) + ker.size() == cols);
        CHECK(rank(m) == rank(m.transpose()));
        for (const auto& v : ker)
            CHECK(is_zero(m.apply(v)));
        CHECK(rank(RationalMatrix::from_columns(rows, image_basis(m))) == rank(m));

        const auto x = random_matrix(rng, cols, 1, 5).column(0);
        const auto b = m.apply(x);
        const auto y = solve(m, b);
        REQUIRE(y.has_value());
        CHECK(m.apply(*y) == b);
    }
}

TEST_CASE("solve reports inconsistent systems")
{
    const RationalMatrix m{{1, 1}, {2, 2}};
    CHECK_FALSE(solve(m, RationalVector{1, 3}).has_value());
}

TEST_CASE("inverse and determinant agree")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto m = random_matrix(rng, 3, 3, 5);
        if (determinant(m) == 0)
            continue;
        CHECK(m * inverse(m) == RationalMatrix::identity(3));
        CHECK(determinant(m) * determinant(inverse(m)) == 1);
    }
    CHECK(determinant(RationalMatrix{{2, 0}, {0, q(1, 4)}}) == q(1, 2));
}

TEST_CASE("cohomology of a small complex")
{
    // 1 -> 2 -> 1 with d0 = (1,1)^T and d1 = (1,-1): exact everywhere.
    const RationalComplex exact(0, {1, 2, 1}, {RationalMatrix{{1}, {1}}, RationalMatrix{{1, -1}}});
    CHECK(cohomology(exact).dims() == std::vector<std::size_t>{0, 0, 0});
    CHECK(exact.euler_characteristic() == 0);

    // Zero differentials: cohomology is the whole space.
    const RationalComplex flat(-1, {2, 3}, {RationalMatrix(3, 2)});
    const auto h = cohomology(flat, true);
    CHECK(h.dim(-1) == 2);
    CHECK(h.dim(0) == 3);
    CHECK(h.dim(5) == 0);
}

TEST_CASE("cohomology rejects d^2 != 0")
{
    const RationalComplex bad(0, {1, 1, 1}, {RationalMatrix{{1}}, RationalMatrix{{1}}});
    CHECK(bad.d_squared_failure() == 0);
    CHECK_THROWS_AS(cohomology(bad), std::domain_error);
}

TEST_CASE("representatives classify and lift")
{
    // C^0 = Q^1 -> C^1 = Q^3 -> C^2 = Q^1 with d0 = (1,0,0)^T, d1 = (0,0,1).
    const RationalComplex c(0, {1, 3, 1}, {RationalMatrix{{1}, {0}, {0}}, RationalMatrix{{0, 0, 1}}});
    const auto h = cohomology(c, true);
    REQUIRE(h.dim(1) == 1);
    const RationalVector cocycle{5, 2, 0};
    CHECK(h.is_cocycle(1, cocycle));
    CHECK_FALSE(h.is_coboundary(1, cocycle));
    CHECK(h.is_coboundary(1, RationalVector{3, 0, 0}));
    const auto coords = h.classify(1, cocycle);
    REQUIRE(coords.size() == 1);
    const auto lifted = h.lift(1, coords);
    RationalVector diff(3);
    for (int i = 0; i < 3; ++i)
        diff[i] = cocycle[i] - lifted[i];
    CHECK(h.is_coboundary(1, diff));
    CHECK_THROWS_AS(h.classify(1, RationalVector{0, 0, 1}), std::invalid_argument);
}

TEST_CASE("random complexes: dims match rank formula")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 15; ++trial) {
        // d1 d0 = 0 by construction: d0 spans part of ker d1.
        const auto d1 = low_rank(rng, 3, 5, 2);
        const auto ker = kernel_basis(d1);
        std::vector<RationalVector> cols(ker.begin(), ker.begin() + 2);
        cols.push_back(ker[0]);
        const auto d0 = RationalMatrix::from_columns(5, cols);
        const RationalComplex c(0, {3, 5, 3}, {d0, d1});
        REQUIRE_FALSE(c.d_squared_failure().has_value());
        const auto h = cohomology(c);
        CHECK(h.dim(0) == 3 - rank(d0));
        CHECK(h.dim(1) == 5 - rank(d1) - rank(d0));
        CHECK(h.dim(2) == 3 - rank(d1));
        long chi = 0;
        for (int k = 0; k < 3; ++k)
            chi += (k % 2 ? -1 : 1) * static_cast<long>(h.dim(k));
        CHECK(chi == c.euler_characteristic());
    }
}
