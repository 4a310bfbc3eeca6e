#include "dgloc/sampling.hpp"

namespace dgloc {

namespace {

RationalMatrix power(const RationalMatrix& x, long k)
{
    RationalMatrix base = k < 0 ? inverse(x) : x;
    RationalMatrix out = RationalMatrix::identity(x.rows());
    for (long i = 0; i < (k < 0 ? -k : k); ++i)
        out = out * base;
    return out;
}

/// Untwisted coboundary C^1 -> C^2 on edge indicator functions.
RationalMatrix edge_coboundary(const SemiSimplicialSet& space)
{
    RationalMatrix d(space.count(2), space.count(1));
    for (auto s : space.simplices(2)) {
        d(s.index, space.face(s, 0).index) += 1;
        d(s.index, space.face(s, 1).index) -= 1;
        d(s.index, space.face(s, 2).index) += 1;
    }
    return d;
}

}  // namespace

int Sampler::integer(int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

RationalMatrix Sampler::invertible(std::size_t r, int range)
{
    for (;;) {
        RationalMatrix m(r, r);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b)
                m(a, b) = integer(-range, range);
        if (determinant(m) != 0)
            return m;
    }
}

RationalMatrix Sampler::mild_invertible(std::size_t r)
{
    RationalMatrix upper = RationalMatrix::identity(r);
    RationalMatrix lower = RationalMatrix::identity(r);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a + 1; b < r; ++b) {
            upper(a, b) = integer(-1, 1);
            lower(b, a) = integer(-1, 1);
        }
    RationalMatrix diag(r, r);
    for (std::size_t a = 0; a < r; ++a) {
        int v = 0;
        while (v == 0)
            v = integer(-2, 2);
        diag(a, a) = v;
    }
    return lower * diag * upper;
}

std::vector<RationalMatrix> Sampler::gauge_family(const SemiSimplicialSet& space, std::size_t r, bool fix_basepoint)
{
    const auto base = space.basepoint();
    std::vector<RationalMatrix> family;
    for (std::size_t v = 0; v < space.count(0); ++v) {
        if (fix_basepoint && base && base->index == v)
            family.push_back(RationalMatrix::identity(r));
        else
            family.push_back(mild_invertible(r));
    }
    return family;
}

FlatConnection Sampler::flat_connection(const SemiSimplicialSet& space, std::size_t r)
{
    Connection e{r, {}};
    if (space.count(2) == 0) {
        for (std::size_t i = 0; i < space.count(1); ++i)
            e.edges.push_back(mild_invertible(r));
        return FlatConnection(space, std::move(e));
    }
    const auto cocycles = kernel_basis(edge_coboundary(space));
    std::vector<long> k(space.count(1), 0);
    for (const auto& z : cocycles) {
        const int c = integer(-1, 1);
        for (std::size_t i = 0; i < k.size(); ++i)
            k[i] += c * z[i].get_num().get_si();
    }
    const RationalMatrix x = mild_invertible(r);
    for (long ki : k)
        e.edges.push_back(power(x, ki));
    return gauge_apply(space, gauge_family(space, r, false), FlatConnection(space, std::move(e)));
}

SimplexConnection Sampler::simplex_connection(int n, std::size_t r)
{
    std::vector<RationalMatrix> steps;
    for (int i = 0; i < n; ++i)
        steps.push_back(mild_invertible(r));
    return flat_simplex_connection(steps);
}

Connection perturb_edge(const Connection& e, std::size_t edge)
{
    RationalMatrix p = RationalMatrix::identity(e.r);
    p(0, 0) = 2;
    if (e.r > 1)
        p(0, 1) = 1;
    Connection out = e;
    out.edges.at(edge) = out.edges.at(edge) * p;
    return out;
}

}  // namespace dgloc
