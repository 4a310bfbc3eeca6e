#include "dgloc/verify/acceptance.hpp"

#include "dgloc/bracket.hpp"
#include "dgloc/moduli.hpp"
#include "dgloc/rbg.hpp"
#include "dgloc/rbg_check.hpp"
#include "dgloc/sampling.hpp"
#include "dgloc/scomplex.hpp"
#include "dgloc/verify/oracles.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace dgloc {

namespace {

struct Fixture {
    std::string label;
    SemiSimplicialSet space;
    std::size_t r;
};

std::string join(const std::vector<std::size_t>& v)
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? "," : "") << v[i];
    out << ')';
    return out.str();
}

Fixture fixture(std::string label, SemiSimplicialSet space, std::size_t r)
{
    return Fixture{std::move(label) + " r=" + std::to_string(r), std::move(space), r};
}

/// Trivial-connection fixtures with the dims they must produce.
std::vector<std::pair<Fixture, std::vector<std::size_t>>> trivial_fixtures()
{
    std::vector<std::pair<Fixture, std::vector<std::size_t>>> out;
    out.push_back({fixture("torus", torus(), 2), {8, 4}});
    out.push_back({fixture("sphere", sphere(), 2), {0, 4}});
    for (std::size_t r = 1; r <= 3; ++r) {
        for (int g = 1; g <= 3; ++g)
            out.push_back({fixture("wedge(" + std::to_string(g) + ")", wedge_of_circles(g), r),
                           {static_cast<std::size_t>(g) * r * r}});
        out.push_back({fixture("circle(1)", circle(1), r), {r * r}});
    }
    return out;
}

std::vector<Fixture> sampled_fixtures()
{
    std::vector<Fixture> out;
    for (std::size_t r = 1; r <= 2; ++r) {
        out.push_back(fixture("torus", torus(), r));
        out.push_back(fixture("sphere", sphere(), r));
        out.push_back(fixture("circle(1)", circle(1), r));
        out.push_back(fixture("circle(3)", circle(3), r));
        out.push_back(fixture("wedge(2)", wedge_of_circles(2), r));
        out.push_back(fixture("simplex2", standard_simplex(2), r));
        out.push_back(fixture("simplex3", standard_simplex(3), r));
        out.push_back(fixture("boundary2", boundary_simplex(2), r));
    }
    return out;
}

std::string first_failure(const std::vector<std::string>& failures)
{
    if (failures.empty())
        return "";
    std::string s = "; first failure: " + failures.front();
    if (failures.size() > 1)
        s += " (+" + std::to_string(failures.size() - 1) + " more)";
    return s;
}

// ---------------------------------------------------------------------------

CriterionResult resolution_soundness(std::uint64_t)
{
    std::vector<std::string> failures;
    int checked = 0;
    for (int n = 0; n <= 4; ++n)
        for (int r = 1; r <= 2; ++r) {
            ++checked;
            if (auto f = check_d_squared(build_rb(n, r).algebra))
                failures.push_back("n=" + std::to_string(n) + " r=" + std::to_string(r) + " at " + f->label);
        }

    // d(g_012) = g_12 g_01 - g_02 entrywise, for r = 1, 2.
    for (int r = 1; r <= 2; ++r) {
        const auto rb = build_rb(2, r);
        const auto& gens = rb.algebra.generators();
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) {
                Polynomial expected = -Polynomial::generator(rb.generator({0, 2}, a, b));
                for (int k = 0; k < r; ++k)
                    expected += multiply(gens, Polynomial::generator(rb.generator({1, 2}, a, k)),
                                         Polynomial::generator(rb.generator({0, 1}, k, b)));
                if (rb.algebra.differential(rb.generator({0, 1, 2}, a, b)) != expected)
                    failures.push_back("d(g_012) differs at r=" + std::to_string(r));
            }
    }
    // d(g_0123) = -(g_023 - g_123 g_01) + (g_013 - g_23 g_012) at r = 1.
    {
        const auto rb = build_rb(3, 1);
        const auto& gens = rb.algebra.generators();
        auto g = [&](std::vector<int> t) { return Polynomial::generator(rb.generator(t, 0, 0)); };
        const Polynomial expected = -(g({0, 2, 3}) - multiply(gens, g({1, 2, 3}), g({0, 1}))) +
                                    (g({0, 1, 3}) - multiply(gens, g({2, 3}), g({0, 1, 2})));
        if (rb.algebra.differential(rb.generator({0, 1, 2, 3}, 0, 0)) != expected)
            failures.push_back("d(g_0123) differs");
    }
    return {1, "resolution soundness", failures.empty(),
            "d^2 = 0 on " + std::to_string(checked) + " presentations (n<=4, r<=2); d(g_012), d(g_0123) match the closed forms" +
                first_failure(failures)};
}

CriterionResult simplicial_structure(std::uint64_t)
{
    std::vector<CheckResult> checks;
    for (int r = 1; r <= 2; ++r) {
        checks.push_back(check_face_identities(3, r));
        checks.push_back(check_degeneracy_identities(3, r));
        checks.push_back(check_structure_maps_commute_with_d(3, r));
    }
    std::vector<std::string> failures;
    for (const auto& c : checks)
        if (!c.pass)
            failures.push_back(c.name + ": " + c.detail);
    return {2, "simplicial structure", failures.empty(),
            "n<=3, r<=2: faces " + checks[0].detail + "; degeneracies " + checks[1].detail + "; d-compatibility " +
                checks[2].detail + " (per r)" + first_failure(failures)};
}

CriterionResult contractible_tangent(std::uint64_t seed)
{
    Sampler sampler(seed);
    std::vector<std::string> failures;
    int checked = 0;
    for (int n = 2; n <= 4; ++n)
        for (std::size_t r = 1; r <= 2; ++r)
            for (int s = 0; s < 25; ++s) {
                ++checked;
                const auto point = sampler.simplex_connection(n, r);
                const auto got = simplex_tangent_check(n, static_cast<int>(r), point);
                const auto boundary_rank = oracle::simplex_coboundary_rank(n, r, point);
                const auto expected = static_cast<std::size_t>(n) * r * r;
                if (!got.higher_vanish || got.h0() != boundary_rank || boundary_rank != expected)
                    failures.push_back("n=" + std::to_string(n) + " r=" + std::to_string(r) + " sample " +
                                       std::to_string(s) + ": dims " + join(got.dims) + ", dim B^1 " +
                                       std::to_string(boundary_rank));
            }
    return {3, "tangent complex of Delta[n]", failures.empty(),
            std::to_string(checked) + " flat points on Delta[2..4], r<=2: H^0 = dim B^1 = n r^2, H^>=1 = 0" +
                first_failure(failures)};
}

CriterionResult trivial_connections(std::uint64_t)
{
    std::vector<std::string> failures;
    std::size_t checked = 0;
    for (const auto& [fx, literal] : trivial_fixtures()) {
        ++checked;
        const auto rep = tangent_report(fx.space, FlatConnection(fx.space, trivial_connection(fx.space, fx.r)));
        const auto betti = oracle::betti_numbers(fx.space);
        std::vector<std::size_t> from_betti;
        for (std::size_t k = 1; k < std::max<std::size_t>(betti.size(), 2); ++k)
            from_betti.push_back(fx.r * fx.r * (k < betti.size() ? betti[k] : 0));
        if (rep.dims != literal || rep.dims != from_betti)
            failures.push_back(fx.label + ": engine " + join(rep.dims) + ", expected " + join(literal) + ", oracle " +
                               join(from_betti));
    }
    return {4, "trivial connections", failures.empty(),
            std::to_string(checked) + " fixtures (torus, sphere, wedges, circle) match r^2 x Betti numbers" +
                first_failure(failures)};
}

CriterionResult nontrivial_torus(std::uint64_t)
{
    const auto space = torus();
    auto diag = [](Rational x, Rational y) { return RationalMatrix{{x, 0}, {0, y}}; };
    const std::vector<std::pair<RationalMatrix, RationalMatrix>> pairs{
        {diag(1, 2), diag(3, 1)},
        {diag(-1, 1), diag(1, 1)},
        {diag(2, 2), diag(3, 3)},
    };
    std::vector<std::string> failures;
    std::string headline;
    for (const auto& [a, b] : pairs) {
        // L = (b, c, a): E(b) E(a) = E(c).
        const auto e = make_connection(space, 2, {{"a", a}, {"b", b}, {"c", b * a}});
        const auto rep = tangent_report(space, FlatConnection(space, e));
        const auto blocks = oracle::weight_block_dims(space, e);
        if (headline.empty())
            headline = join(rep.dims);
        if (rep.dims != blocks.tangent || rep.gauge_kernel_dim != blocks.kernel_minus1)
            failures.push_back("A=" + a.to_string() + " B=" + b.to_string() + ": engine " + join(rep.dims) +
                               ", weight blocks " + join(blocks.tangent));
    }
    return {5, "nontrivial torus holonomy", failures.empty(),
            "A=diag(1,2), B=diag(3,1) gives " + headline + ", equal to the weight-block complex; " +
                std::to_string(pairs.size()) + " holonomy pairs compared" + first_failure(failures)};
}

CriterionResult triangulation_change(std::uint64_t seed)
{
    Sampler sampler(seed);
    std::vector<std::string> failures;
    int checked = 0;
    const auto c1 = circle(1);
    const auto c3 = circle(3);
    const auto d2 = standard_simplex(2);
    const auto d0 = standard_simplex(0);
    for (std::size_t r = 1; r <= 2; ++r)
        for (int s = 0; s < 6; ++s) {
            // Holonomy M around the loop; on circle(3) it is E(e2) E(e1) E(e0).
            const RationalMatrix m = s == 0 ? RationalMatrix::identity(r) : sampler.mild_invertible(r);
            const RationalMatrix e0 = sampler.mild_invertible(r);
            const RationalMatrix e1 = sampler.mild_invertible(r);
            const RationalMatrix e2 = m * inverse(e1 * e0);
            const auto inv = triangulation_invariance(
                c1, FlatConnection(c1, make_connection(c1, r, {{"e0", m}})), c3,
                FlatConnection(c3, make_connection(c3, r, {{"e0", e0}, {"e1", e1}, {"e2", e2}})));
            ++checked;
            if (!inv.equal)
                failures.push_back("circle r=" + std::to_string(r) + ": " + join(inv.first) + " vs " + join(inv.second));

            const auto flat = s == 0 ? FlatConnection(d2, trivial_connection(d2, r)) : sampler.flat_connection(d2, r);
            const auto inv2 =
                triangulation_invariance(d2, flat, d0, FlatConnection(d0, trivial_connection(d0, r)));
            ++checked;
            bool zero = true;
            for (auto d : inv2.first)
                zero = zero && d == 0;
            if (!inv2.equal || !zero)
                failures.push_back("Delta[2] vs Delta[0] r=" + std::to_string(r) + ": " + join(inv2.first) + " vs " +
                                   join(inv2.second));
        }
    return {6, "triangulation invariance", failures.empty(),
            std::to_string(checked) + " pairs: circle(1) vs circle(3), Delta[2] vs Delta[0]" + first_failure(failures)};
}

CriterionResult gauge_coherence(std::uint64_t seed)
{
    Sampler sampler(seed);
    std::vector<std::string> failures;
    int checked = 0;
    for (const auto& space : {torus(), sphere()})
        for (std::size_t r = 1; r <= 2; ++r) {
            const std::vector<FlatConnection> seeds{FlatConnection(space, trivial_connection(space, r)),
                                                    sampler.flat_connection(space, r)};
            for (std::size_t k = 0; k < seeds.size(); ++k) {
                const auto before = tangent_report(space, seeds[k]);
                for (int f = 0; f < 10; ++f) {
                    ++checked;
                    const auto moved = gauge_apply(space, sampler.gauge_family(space, r, true), seeds[k]);
                    const auto after = tangent_report(space, moved);
                    if (after.dims != before.dims || after.prequotient_dims != before.prequotient_dims ||
                        after.gauge_kernel_dim != before.gauge_kernel_dim)
                        failures.push_back(space.name() + " r=" + std::to_string(r) + " family " + std::to_string(f) +
                                           ": " + join(before.dims) + " -> " + join(after.dims));
                }
            }
        }
    for (int r = 1; r <= 2; ++r) {
        const auto c = check_gauge_action(2, r, seed + static_cast<std::uint64_t>(r));
        if (!c.pass)
            failures.push_back("RB_2 r=" + std::to_string(r) + ": " + c.detail);
    }
    return {7, "gauge coherence", failures.empty(),
            std::to_string(checked) + " basepoint-fixing gauge moves on torus/sphere leave dims unchanged; "
                                      "composition law on RB_2" +
                first_failure(failures)};
}

CriterionResult bracket_laws(std::uint64_t)
{
    std::vector<std::string> failures;
    std::size_t checked = 0;
    for (const auto& [fx, literal] : trivial_fixtures()) {
        (void)literal;
        ++checked;
        const auto t = bracket_on_tangent(fx.space, FlatConnection(fx.space, trivial_connection(fx.space, fx.r)));
        if (!t.ok()) {
            std::string which;
            if (!t.lambda1_squared_zero) which += " lambda1^2";
            if (!t.antisymmetric) which += " antisymmetry";
            if (!t.jacobi) which += " Jacobi";
            if (!t.lambda3_zero) which += " lambda3";
            if (!t.closed) which += " closure";
            if (!t.descends) which += " descent";
            if (!t.lambda1_derivation) which += " derivation";
            if (!t.aw_commutator.value_or(true)) which += " AW-commutator";
            failures.push_back(fx.label + ":" + which);
        }
    }
    return {8, "bracket laws", failures.empty(),
            std::to_string(checked) +
                " fixtures: lambda1^2 = 0, antisymmetry, Jacobi, lambda3 = 0 (plus closure, descent, derivation, "
                "AW commutator)" +
                first_failure(failures)};
}

CriterionResult functor_of_points(std::uint64_t seed)
{
    Sampler sampler(seed);
    std::vector<std::string> failures;
    int round_trips = 0, rejections = 0;
    for (const auto& fx : sampled_fixtures()) {
        const auto hom = build_hom_presentation(fx.space, fx.r);
        // Edges lying on some 2-simplex; perturbing one must break flatness.
        std::vector<std::size_t> on_triangle;
        for (auto e : fx.space.simplices(1))
            for (auto s : fx.space.simplices(2))
                for (int i = 0; i <= 2; ++i)
                    if (fx.space.face(s, i) == e && (on_triangle.empty() || on_triangle.back() != e.index))
                        on_triangle.push_back(e.index);
        for (int k = 0; k < 50; ++k) {
            const auto e = sampler.flat_connection(fx.space, fx.r);
            ++round_trips;
            if (point_to_connection(fx.space, hom, connection_to_point(fx.space, hom, e.connection())) != e.connection())
                failures.push_back(fx.label + ": round trip changed sample " + std::to_string(k));
            if (on_triangle.empty())
                continue;
            const auto edge = on_triangle[static_cast<std::size_t>(sampler.integer(0, static_cast<int>(on_triangle.size()) - 1))];
            const auto broken = perturb_edge(e.connection(), edge);
            ++rejections;
            std::string named;
            try {
                (void)FlatConnection(fx.space, broken);
            } catch (const ConnectionError& err) {
                if (err.kind() == ConnectionError::Kind::NonFlat)
                    named = err.simplex_id();
            }
            const auto ref = fx.space.find(2, named);
            bool good = ref.has_value();
            if (good) {
                bool touches = false;
                for (int i = 0; i <= 2; ++i)
                    touches = touches || fx.space.face(*ref, i).index == edge;
                good = touches && !mc_residual(fx.space, broken).values[ref->index].is_zero();
            }
            bool point_rejected = false;
            try {
                (void)connection_to_point(fx.space, hom, broken);
            } catch (const PointError& err) {
                point_rejected = err.kind() == PointError::Kind::OffPi0;
            }
            if (!good || !point_rejected)
                failures.push_back(fx.label + ": perturbation of edge " + fx.space.id({1, edge}) +
                                   " not rejected with a failing 2-simplex");
        }
    }
    return {9, "functor of points", failures.empty(),
            std::to_string(round_trips) + " round trips over " + std::to_string(sampled_fixtures().size()) +
                " fixtures (50 each); " + std::to_string(rejections) + " non-flat perturbations rejected" +
                first_failure(failures)};
}

CriterionResult linearized_freeness(std::uint64_t seed)
{
    Sampler sampler(seed);
    std::vector<Fixture> fixtures = sampled_fixtures();
    for (std::size_t r = 1; r <= 2; ++r) {
        fixtures.push_back(fixture("simplex0", standard_simplex(0), r));
        fixtures.push_back(fixture("simplex4", standard_simplex(4), r));
        fixtures.push_back(fixture("boundary3", boundary_simplex(3), r));
        fixtures.push_back(fixture("wedge(1)", wedge_of_circles(1), r));
        fixtures.push_back(fixture("wedge(3)", wedge_of_circles(3), r));
    }
    std::vector<std::string> failures;
    int checked = 0;
    for (const auto& fx : fixtures) {
        for (int k = 0; k < 11; ++k) {
            const auto e = k == 0 ? FlatConnection(fx.space, trivial_connection(fx.space, fx.r))
                                  : sampler.flat_connection(fx.space, fx.r);
            ++checked;
            const auto rep = tangent_report(fx.space, e);
            if (!rep.gauge_action_free() || !rep.euler_consistent)
                failures.push_back(fx.label + ": ker(C^0_res -> C^1) has dim " + std::to_string(rep.gauge_kernel_dim));
        }
    }
    return {10, "linearized freeness", failures.empty(),
            "ker(C^0_res -> C^1) = 0 for " + std::to_string(checked) + " flat connections on " +
                std::to_string(fixtures.size()) + " pointed fixtures" + first_failure(failures)};
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed)
{
    static const std::vector<std::function<CriterionResult(std::uint64_t)>> table{
        resolution_soundness, simplicial_structure, contractible_tangent, trivial_connections, nontrivial_torus,
        triangulation_change, gauge_coherence,      bracket_laws,         functor_of_points,   linearized_freeness,
    };
    if (id < 1 || id > kCriterionCount)
        throw std::out_of_range("criterion id must be 1.." + std::to_string(kCriterionCount));
    const auto start = std::chrono::steady_clock::now();
    CriterionResult out;
    try {
        out = table[static_cast<std::size_t>(id - 1)](seed);
    } catch (const std::exception& e) {
        out = {id, "criterion " + std::to_string(id), false, std::string("threw: ") + e.what()};
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (id == 1 && out.seconds >= 60) {
        out.pass = false;
        out.detail += "; over the one-minute budget";
    }
    return out;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed)
{
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id)
        out.push_back(run_criterion(id, seed));
    return out;
}

std::string format_result(const CriterionResult& r)
{
    return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + ": " + r.detail;
}

}  // namespace dgloc
