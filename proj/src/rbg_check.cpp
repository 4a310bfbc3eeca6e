#include "dgloc/rbg_check.hpp"

#include "dgloc/rbg.hpp"
#include "dgloc/sampling.hpp"
#include "dgloc/scomplex.hpp"

#include <deque>
#include <stdexcept>

namespace dgloc {

namespace {

/// A monotone map [from] -> [to].
struct Step {
    std::vector<int> map;
    int from;
    int to;
};

Step coface(int n, int i) { return {coface_map(n, i), n - 1, n}; }
Step codegeneracy(int n, int j) { return {codegeneracy_map(n, j), n + 1, n}; }

std::vector<int> compose_steps(const std::vector<Step>& steps)
{
    std::vector<int> out(static_cast<std::size_t>(steps.front().from + 1));
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = static_cast<int>(k);
    for (const auto& s : steps)
        for (auto& v : out)
            v = s.map[static_cast<std::size_t>(v)];
    return out;
}

class Levels {
public:
    explicit Levels(int r) : r_(r) {}

    const RBPresentation& at(int n)
    {
        while (static_cast<int>(rbs_.size()) <= n)
            rbs_.push_back(build_rb(static_cast<int>(rbs_.size()), r_));
        return rbs_[static_cast<std::size_t>(n)];
    }

    /// Algebra map of the composite, steps applied first to last.
    AlgebraMorphism morphism(const std::vector<Step>& steps)
    {
        AlgebraMorphism acc = simplicial_operator(at(steps.front().from), at(steps.front().to), steps.front().map);
        for (std::size_t k = 1; k < steps.size(); ++k) {
            const auto f = simplicial_operator(at(steps[k].from), at(steps[k].to), steps[k].map);
            acc = compose(at(steps[k].to).algebra.generators(), f, acc);
        }
        return acc;
    }

    AlgebraMorphism identity(int n)
    {
        const auto& gens = at(n).algebra.generators();
        AlgebraMorphism id;
        for (GenIndex g = 0; g < gens.size(); ++g)
            id.images.push_back(Polynomial::generator(g));
        return id;
    }

private:
    int r_;
    std::deque<RBPresentation> rbs_;  // stable references
};

/// Both sides must agree as maps of ordinals (else the identity itself is
/// misstated) and as algebra morphisms.
bool same_composite(Levels& levels, const std::vector<Step>& lhs, const std::vector<Step>& rhs)
{
    if (compose_steps(lhs) != compose_steps(rhs))
        throw std::logic_error("misstated simplicial identity");
    return levels.morphism(lhs).images == levels.morphism(rhs).images;
}

std::string count_detail(int checked, int failed)
{
    return std::to_string(checked) + " identities, " + std::to_string(failed) + " failed";
}

std::vector<RationalMatrix> family_product(const std::vector<RationalMatrix>& a, const std::vector<RationalMatrix>& b)
{
    std::vector<RationalMatrix> out;
    for (std::size_t k = 0; k < a.size(); ++k)
        out.push_back(a[k] * b[k]);
    return out;
}

}  // namespace

CheckResult check_face_identities(int n, int r)
{
    Levels levels(r);
    int checked = 0, failed = 0;
    // d_i d_j = d_{j-1} d_i (i < j), i.e. delta^j delta^i = delta^i delta^{j-1}.
    for (int m = 2; m <= n; ++m)
        for (int j = 1; j <= m; ++j)
            for (int i = 0; i < j; ++i) {
                ++checked;
                if (!same_composite(levels, {coface(m - 1, i), coface(m, j)}, {coface(m - 1, j - 1), coface(m, i)}))
                    ++failed;
            }
    return {"face_identities", failed == 0, count_detail(checked, failed)};
}

CheckResult check_degeneracy_identities(int n, int r)
{
    Levels levels(r);
    int checked = 0, failed = 0;
    // sigma^j sigma^i = sigma^i sigma^{j+1}, i <= j.
    for (int m = 0; m + 2 <= n; ++m)
        for (int j = 0; j <= m; ++j)
            for (int i = 0; i <= j; ++i) {
                ++checked;
                if (!same_composite(levels, {codegeneracy(m + 1, i), codegeneracy(m, j)},
                                    {codegeneracy(m + 1, j + 1), codegeneracy(m, i)}))
                    ++failed;
            }
    // sigma^j delta^i.
    for (int m = 0; m + 1 <= n; ++m)
        for (int j = 0; j <= m; ++j)
            for (int i = 0; i <= m + 1; ++i) {
                ++checked;
                const std::vector<Step> lhs{coface(m + 1, i), codegeneracy(m, j)};
                bool ok = false;
                if (i == j || i == j + 1) {
                    std::vector<int> id(static_cast<std::size_t>(m + 1));
                    for (int k = 0; k <= m; ++k)
                        id[static_cast<std::size_t>(k)] = k;
                    if (compose_steps(lhs) != id)
                        throw std::logic_error("misstated simplicial identity");
                    ok = levels.morphism(lhs).images == levels.identity(m).images;
                } else if (i < j) {
                    ok = same_composite(levels, lhs, {codegeneracy(m - 1, j - 1), coface(m, i)});
                } else {
                    ok = same_composite(levels, lhs, {codegeneracy(m - 1, j), coface(m, i - 1)});
                }
                if (!ok)
                    ++failed;
            }
    return {"degeneracy_identities", failed == 0, count_detail(checked, failed)};
}

CheckResult check_structure_maps_commute_with_d(int n, int r)
{
    Levels levels(r);
    int checked = 0, failed = 0;
    std::string first;
    for (int m = 1; m <= n; ++m)
        for (int i = 0; i <= m; ++i) {
            ++checked;
            if (differential_mismatch(levels.at(m - 1).algebra, levels.at(m).algebra,
                                      face_map(levels.at(m), levels.at(m - 1), i))) {
                if (failed++ == 0)
                    first = "face d_" + std::to_string(i) + " at level " + std::to_string(m);
            }
        }
    for (int m = 0; m < n; ++m)
        for (int j = 0; j <= m; ++j) {
            ++checked;
            if (differential_mismatch(levels.at(m + 1).algebra, levels.at(m).algebra,
                                      degeneracy_map(levels.at(m), levels.at(m + 1), j))) {
                if (failed++ == 0)
                    first = "degeneracy s_" + std::to_string(j) + " at level " + std::to_string(m);
            }
        }
    std::string detail = std::to_string(checked) + " morphisms, " + std::to_string(failed) + " failed";
    if (!first.empty())
        detail += " (first: " + first + ")";
    return {"structure_maps_commute_with_d", failed == 0, detail};
}

CheckResult check_gauge_action(int n, int r, std::uint64_t seed)
{
    Levels levels(r);
    const auto& rb = levels.at(n);
    const auto& gens = rb.algebra.generators();
    const auto ru = static_cast<std::size_t>(r);
    Sampler sampler(seed);
    std::vector<RationalMatrix> g, h, id;
    for (int k = 0; k <= n; ++k) {
        g.push_back(sampler.mild_invertible(ru));
        h.push_back(sampler.mild_invertible(ru));
        id.push_back(RationalMatrix::identity(ru));
    }
    const auto act_g = gauge_transform(rb, g);
    const auto act_h = gauge_transform(rb, h);

    std::vector<std::string> bad;
    if (gauge_transform(rb, id).images != levels.identity(n).images)
        bad.push_back("identity");
    if (differential_mismatch(rb.algebra, rb.algebra, act_g) || differential_mismatch(rb.algebra, rb.algebra, act_h))
        bad.push_back("commutes with d");
    // Pulling back along h then g is the action of the pointwise product g h.
    if (compose(gens, act_h, act_g).images != gauge_transform(rb, family_product(g, h)).images)
        bad.push_back("composition");
    if (n >= 1) {
        const auto& lower = levels.at(n - 1);
        for (int i = 0; i <= n; ++i) {
            const auto f = face_map(rb, lower, i);
            std::vector<RationalMatrix> restricted;
            for (int v : coface_map(n, i))
                restricted.push_back(g[static_cast<std::size_t>(v)]);
            if (compose(gens, f, gauge_transform(lower, restricted)).images != compose(gens, act_g, f).images) {
                bad.push_back("face d_" + std::to_string(i));
                break;
            }
        }
    }
    std::string detail = bad.empty() ? "identity, d-equivariance, composition, face compatibility" : "failed:";
    for (const auto& b : bad)
        detail += " " + b;
    return {"gauge_action", bad.empty(), detail};
}

std::vector<CheckResult> resolution_check(const ResolutionCheckOptions& o)
{
    if (o.n < 0 || o.r < 1)
        throw std::invalid_argument("resolution check needs n >= 0 and r >= 1");
    std::vector<CheckResult> out;
    const auto rb = build_rb(o.n, o.r);

    {
        const auto fail = check_d_squared(rb.algebra);
        out.push_back({"d_squared", !fail, fail ? "d^2 != 0 on " + fail->label : "d^2 = 0 on all generators"});
    }
    {
        std::size_t expected = 0;
        for (int p = 1; p <= o.n; ++p) {
            std::size_t binom = 1;
            for (int k = 0; k < p + 1; ++k)
                binom = binom * static_cast<std::size_t>(o.n + 1 - k) / static_cast<std::size_t>(k + 1);
            expected += binom * static_cast<std::size_t>(o.r * o.r);
        }
        const auto got = rb.algebra.generators().size();
        out.push_back({"generator_count", got == expected,
                       std::to_string(got) + " generators, expected " + std::to_string(expected)});
    }
    out.push_back(check_structure_maps_commute_with_d(o.n, o.r));
    out.push_back(check_face_identities(o.n, o.r));
    out.push_back(check_degeneracy_identities(o.n, o.r));
    out.push_back(check_gauge_action(o.n, o.r, o.seed));

    if (o.n >= 1) {
        const auto inj = injectivity_skeleton_check(o.n, o.r);
        std::string detail = "new generators:";
        for (const auto& [deg, count] : inj.new_counts)
            detail += " " + std::to_string(count) + " in degree " + std::to_string(deg);
        out.push_back({"injectivity", inj.ok(), detail});
    }

    Sampler sampler(o.seed);
    const auto ru = static_cast<std::size_t>(o.r);
    int accepted = 0, rejected = 0, tangent_ok = 0;
    const int perturbable = o.n >= 2 ? o.samples : 0;
    for (int s = 0; s < o.samples; ++s) {
        const auto point = sampler.simplex_connection(o.n, ru);
        try {
            (void)rb_point(rb, point);
            ++accepted;
        } catch (const PointError&) {
        }
        const auto t = simplex_tangent_check(o.n, o.r, point);
        if (t.higher_vanish && t.h0() == static_cast<std::size_t>(o.n * o.r * o.r))
            ++tangent_ok;
        if (o.n >= 2) {
            auto broken = point;
            RationalMatrix p = RationalMatrix::identity(ru);
            p(0, 0) = 2;
            broken[{0, o.n}] = broken[{0, o.n}] * p;
            try {
                (void)rb_point(rb, broken);
            } catch (const PointError& e) {
                if (e.kind() == PointError::Kind::OffPi0)
                    ++rejected;
            }
        }
    }
    out.push_back({"points_of_pi0", accepted == o.samples && rejected == perturbable,
                   std::to_string(accepted) + "/" + std::to_string(o.samples) + " flat tuples accepted, " +
                       std::to_string(rejected) + "/" + std::to_string(perturbable) + " perturbed tuples rejected"});
    out.push_back({"tangent_at_flat_points", tangent_ok == o.samples,
                   std::to_string(tangent_ok) + "/" + std::to_string(o.samples) + " points with H^0 = " +
                       std::to_string(o.n * o.r * o.r) + " and H^>=1 = 0"});
    return out;
}

}  // namespace dgloc
