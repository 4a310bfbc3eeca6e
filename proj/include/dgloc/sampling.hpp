// Seeded random matrices, gauge families and flat connections for property
// tests and the acceptance battery.

#ifndef DGLOC_SAMPLING_HPP
#define DGLOC_SAMPLING_HPP

#include "dgloc/moduli.hpp"
#include "dgloc/rbg.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace dgloc {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform in [lo, hi].
    int integer(int lo, int hi);
    /// Integer entries in [-range, range], resampled until invertible.
    RationalMatrix invertible(std::size_t r, int range = 3);
    /// Unipotent-times-diagonal matrix with small entries; keeps products
    /// of many factors readable.
    RationalMatrix mild_invertible(std::size_t r);

    /// One invertible matrix per vertex; identity at the basepoint when
    /// `fix_basepoint`.
    std::vector<RationalMatrix> gauge_family(const SemiSimplicialSet& space, std::size_t r, bool fix_basepoint);

    /// A flat connection: E(e) = X^{k(e)} for a random integral 1-cocycle k
    /// and a random X, followed by a random gauge transformation. On spaces
    /// without 2-simplices every edge is independent.
    FlatConnection flat_connection(const SemiSimplicialSet& space, std::size_t r);

    /// Flat point of Delta[n] from random consecutive steps.
    SimplexConnection simplex_connection(int n, std::size_t r);

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// E(e) -> E(e) * P for a fixed non-identity invertible P; used to break
/// flatness on triangles containing e.
Connection perturb_edge(const Connection& e, std::size_t edge);

}  // namespace dgloc

#endif  // DGLOC_SAMPLING_HPP
