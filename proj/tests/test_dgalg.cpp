#include <doctest.h>

#include "dgloc/dgalg.hpp"

#include <random>

using namespace dgloc;

namespace {

using Values = std::map<std::string, Rational>;

Polynomial gen(const GeneratorSet& g, const std::string& label)
{
    return Polynomial::generator(g.index(label));
}

/// d t = x y - z, d s = x - 2, and a closed degree -2 generator u.
DgPresentation small_algebra()
{
    GeneratorSet g({{"x", 0}, {"y", 0}, {"z", 0}, {"t", -1}, {"s", -1}, {"u", -2}});
    std::vector<Polynomial> d(g.size());
    d[g.index("t")] = multiply(g, gen(g, "x"), gen(g, "y")) - gen(g, "z");
    d[g.index("s")] = gen(g, "x") - Polynomial::constant(2);
    return DgPresentation(g, d, {gen(g, "z")});
}

}  // namespace

TEST_CASE("generator sets are canonical")
{
    GeneratorSet g({{"b", 0}, {"a", -1}, {"c", 0}});
    CHECK(g[0].label == "a");
    CHECK(g.index("c") == 2);
    CHECK(g.lowest_degree() == -1);
    CHECK(g.of_degree(0).size() == 2);
    CHECK_THROWS_AS(GeneratorSet({{"a", 0}, {"a", 0}}), std::invalid_argument);
    CHECK_THROWS_AS(GeneratorSet({{"a", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(g.index("zz"), std::out_of_range);
}

TEST_CASE("Koszul signs")
{
    GeneratorSet g({{"s", -1}, {"t", -1}, {"x", 0}, {"u", -2}});
    const auto s = gen(g, "s"), t = gen(g, "t"), x = gen(g, "x"), u = gen(g, "u");
    CHECK(multiply(g, s, t) == -multiply(g, t, s));
    CHECK(multiply(g, s, s).is_zero());
    CHECK(multiply(g, x, s) == multiply(g, s, x));
    CHECK(multiply(g, u, s) == multiply(g, s, u));
    CHECK(multiply(g, x, x).max_order() == 2);

    Monomial m{g.index("t"), g.index("x"), g.index("s")};
    CHECK(normalize(g, m) == -1);
    Monomial twice{g.index("s"), g.index("s")};
    CHECK(normalize(g, twice) == 0);
    CHECK(homogeneous_degree(g, multiply(g, s, u)) == -3);
    CHECK_FALSE(homogeneous_degree(g, s + x).has_value());
}

TEST_CASE("multiplication is associative and graded commutative")
{
    GeneratorSet g({{"a", 0}, {"b", -1}, {"c", -1}, {"e", -2}});
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> coef(-3, 3), pick(0, 3);
    auto random_poly = [&] {
        Polynomial p;
        for (int k = 0; k < 3; ++k) {
            Monomial m{static_cast<GenIndex>(pick(rng)), static_cast<GenIndex>(pick(rng))};
            const int sign = normalize(g, m);
            if (sign != 0)
                p.add_term(m, Rational(sign * coef(rng)));
        }
        return p;
    };
    for (int trial = 0; trial < 30; ++trial) {
        const auto p = random_poly(), q = random_poly(), r = random_poly();
        CHECK(multiply(g, multiply(g, p, q), r) == multiply(g, p, multiply(g, q, r)));
        CHECK(multiply(g, p, q + r) == multiply(g, p, q) + multiply(g, p, r));
    }
    const auto b = gen(g, "b"), e = gen(g, "e");
    const auto be = multiply(g, b, e);
    CHECK(multiply(g, be, b).is_zero());
}

TEST_CASE("presentation validation")
{
    GeneratorSet g({{"x", 0}, {"t", -1}});
    std::vector<Polynomial> wrong(g.size());
    wrong[g.index("t")] = gen(g, "t");
    CHECK_THROWS_AS(DgPresentation(g, wrong), std::invalid_argument);
    std::vector<Polynomial> ok(g.size());
    ok[g.index("t")] = gen(g, "x");
    CHECK_NOTHROW(DgPresentation(g, ok));
    CHECK_THROWS_AS(DgPresentation(g, ok, {gen(g, "t")}), std::invalid_argument);
}

TEST_CASE("Leibniz rule and d^2")
{
    const auto p = small_algebra();
    const auto& g = p.generators();
    const auto t = gen(g, "t"), s = gen(g, "s");
    CHECK(p.apply_differential(multiply(g, t, s)) ==
          multiply(g, p.apply_differential(t), s) - multiply(g, t, p.apply_differential(s)));
    CHECK_FALSE(check_d_squared(p).has_value());

    // d u = s z is not a cycle: d(s z) = z z.
    GeneratorSet h({{"z", 0}, {"s", -1}, {"u", -2}});
    std::vector<Polynomial> d(h.size());
    d[h.index("s")] = gen(h, "z");
    d[h.index("u")] = multiply(h, gen(h, "s"), gen(h, "z"));
    const auto failure = check_d_squared(DgPresentation(h, d));
    REQUIRE(failure.has_value());
    CHECK(failure->label == "u");
}

TEST_CASE("points")
{
    const auto p = small_algebra();
    const auto x = make_point(p, Values{{"x", 2}, {"y", 3}, {"z", 6}});
    CHECK(x[p.generators().index("y")] == 3);
    try {
        make_point(p, Values{{"x", 2}, {"y", 3}, {"z", 5}});
        FAIL("expected OffPi0");
    } catch (const PointError& e) {
        CHECK(e.kind() == PointError::Kind::OffPi0);
        CHECK(e.subject() == "t");
    }
    try {
        make_point(p, Values{{"x", 2}, {"y", 0}, {"z", 0}});
        FAIL("expected ConstraintViolated");
    } catch (const PointError& e) {
        CHECK(e.kind() == PointError::Kind::ConstraintViolated);
    }
    try {
        make_point(p, Values{{"x", 2}, {"y", 3}});
        FAIL("expected MissingValue");
    } catch (const PointError& e) {
        CHECK(e.kind() == PointError::Kind::MissingValue);
        CHECK(e.subject() == "z");
    }
}

TEST_CASE("linearization at (2,3,6)")
{
    const auto p = small_algebra();
    const auto x = make_point(p, Values{{"x", 2}, {"y", 3}, {"z", 6}});
    const auto c = linearize_at_point(p, x);
    CHECK(c.lowest_degree() == 0);
    const auto& d0 = c.differential(0);
    // Rows s, t; columns x, y, z.
    REQUIRE(d0.rows() == 2);
    REQUIRE(d0.cols() == 3);
    const auto& g = p.generators();
    const auto row_t = g.of_degree(-1)[0] == g.index("t") ? 0u : 1u;
    CHECK(d0(row_t, 0) == 3);
    CHECK(d0(row_t, 1) == 2);
    CHECK(d0(row_t, 2) == -1);
    const auto h = cohomology(c);
    CHECK(h.dim(0) == 1);
    CHECK(h.dim(1) == 0);
}

TEST_CASE("Taylor parts recover the polynomial")
{
    const auto p = small_algebra();
    const auto& g = p.generators();
    const auto x = make_point(p, Values{{"x", 2}, {"y", 3}, {"z", 6}});
    const auto parts = taylor_parts(g, p.differential(g.index("t")), x);
    REQUIRE(parts.size() >= 3);
    CHECK(parts[0].is_zero());
    CHECK(parts[2] == multiply(g, gen(g, "x"), gen(g, "y")));
    std::vector<Rational> shifted(g.size());
    for (GenIndex i = 0; i < g.size(); ++i)
        shifted[i] = x[i];
    shifted[g.index("x")] += 1;
    Rational total = 0;
    std::vector<Rational> delta(g.size());
    delta[g.index("x")] = 1;
    for (const auto& part : parts)
        total += evaluate(g, part, delta);
    CHECK(total == evaluate(g, p.differential(g.index("t")), shifted));
}

TEST_CASE("morphisms: substitution and differential mismatch")
{
    GeneratorSet a({{"x", 0}, {"t", -1}});
    std::vector<Polynomial> da(a.size());
    da[a.index("t")] = gen(a, "x") - Polynomial::constant(1);
    const DgPresentation src(a, da);

    GeneratorSet b({{"y", 0}, {"s", -1}});
    std::vector<Polynomial> db(b.size());
    db[b.index("s")] = gen(b, "y") - Polynomial::constant(1);
    const DgPresentation dst(b, db);

    AlgebraMorphism good{std::vector<Polynomial>(2)};
    good.images[a.index("x")] = gen(b, "y");
    good.images[a.index("t")] = gen(b, "s");
    CHECK_FALSE(differential_mismatch(src, dst, good).has_value());

    AlgebraMorphism bad = good;
    bad.images[a.index("t")] = 2 * gen(b, "s");
    const auto miss = differential_mismatch(src, dst, bad);
    REQUIRE(miss.has_value());
    CHECK(*miss == a.index("t"));

    const auto twice = compose(b, good, AlgebraMorphism{{gen(a, "t"), gen(a, "x")}});
    CHECK(substitute(b, good, multiply(a, gen(a, "x"), gen(a, "t"))) == multiply(b, gen(b, "y"), gen(b, "s")));
    CHECK(twice.images.size() == 2);
}

TEST_CASE("whitehead bracket on a quadratic differential")
{
    // d t = a b: purely quadratic at the origin.
    GeneratorSet g({{"a", 0}, {"b", 0}, {"t", -1}});
    std::vector<Polynomial> d(g.size());
    d[g.index("t")] = multiply(g, gen(g, "a"), gen(g, "b"));
    const DgPresentation p(g, d);
    const auto origin = make_point(p, Values{{"a", 0}, {"b", 0}});
    const TaylorComponent q(p, origin, 2);
    CHECK_FALSE(q.is_zero());
    const TangentVector xa{0, {1, 0}}, xb{0, {0, 1}};
    const auto ab = whitehead_bracket(q, xa, xb);
    const auto ba = whitehead_bracket(q, xb, xa);
    CHECK(ab.degree == 1);
    CHECK(ab.coords == RationalVector{1});
    // Lie degree 1 on both: symmetric.
    CHECK(ba.coords == ab.coords);
    CHECK(TaylorComponent(p, origin, 3).is_zero());
    CHECK(contract(g, d[g.index("t")], xa) == gen(g, "b"));
}
