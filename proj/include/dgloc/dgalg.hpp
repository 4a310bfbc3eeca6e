// Free graded-commutative dg-algebras with generators in degrees <= 0:
// polynomial arithmetic with Koszul signs, the differential, points of pi_0,
// and the Taylor components of the differential at a point.

#ifndef DGLOC_DGALG_HPP
#define DGLOC_DGALG_HPP

#include "dgloc/exactlin.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace dgloc {

using GenIndex = std::uint32_t;

struct Generator {
    std::string label;
    int degree = 0;

    bool odd() const { return degree % 2 != 0; }
};

/// Generators in canonical (lexicographic by label) order. A generator's
/// index is its position in that order; Koszul signs are computed relative
/// to it.
class GeneratorSet {
public:
    GeneratorSet() = default;
    /// Throws std::invalid_argument on duplicate labels or positive degrees.
    explicit GeneratorSet(std::vector<Generator> generators);

    std::size_t size() const { return gens_.size(); }
    const Generator& operator[](GenIndex i) const { return gens_[i]; }
    const std::vector<Generator>& all() const { return gens_; }
    int degree(GenIndex i) const { return gens_[i].degree; }
    bool odd(GenIndex i) const { return gens_[i].odd(); }

    std::optional<GenIndex> find(const std::string& label) const;
    /// Throws std::out_of_range("unknown generator ...").
    GenIndex index(const std::string& label) const;

    /// Generators of one degree, in canonical order.
    const std::vector<GenIndex>& of_degree(int degree) const;
    /// Most negative degree present (0 when empty).
    int lowest_degree() const { return lowest_; }

private:
    std::vector<Generator> gens_;
    std::unordered_map<std::string, GenIndex> lookup_;
    std::map<int, std::vector<GenIndex>> by_degree_;
    int lowest_ = 0;
};

/// Sorted factor list; even generators may repeat, odd ones appear at most once.
using Monomial = std::vector<GenIndex>;

/// Rational combination of canonical monomials.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    Polynomial() = default;
    static Polynomial constant(const Rational& c);
    static Polynomial generator(GenIndex g, const Rational& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Monomial& m) const;
    /// Longest monomial (0 for constants and for the zero polynomial).
    std::size_t max_order() const;

    /// `m` must already be canonical.
    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    Terms terms_;
};

/// Sorts `factors` into canonical order in place, returning the Koszul sign
/// of the permutation, or 0 if an odd generator repeats.
int normalize(const GeneratorSet& gens, Monomial& factors);

Polynomial multiply(const GeneratorSet& gens, const Polynomial& p, const Polynomial& q);
int monomial_degree(const GeneratorSet& gens, const Monomial& m);
/// Degree of a homogeneous polynomial; nullopt if zero or inhomogeneous.
std::optional<int> homogeneous_degree(const GeneratorSet& gens, const Polynomial& p);
std::string to_string(const GeneratorSet& gens, const Polynomial& p);

// ---------------------------------------------------------------------------

class DgPresentation {
public:
    DgPresentation() = default;
    /// `differential[i]` is d of generator i. Throws std::invalid_argument
    /// unless each d(g) is zero or homogeneous of degree deg(g)+1 and every
    /// constraint is a polynomial in degree-0 generators.
    DgPresentation(GeneratorSet gens, std::vector<Polynomial> differential, std::vector<Polynomial> constraints = {});

    const GeneratorSet& generators() const { return gens_; }
    const Polynomial& differential(GenIndex g) const { return diff_[g]; }
    /// Degree-0 polynomials that must be nonzero at every point.
    const std::vector<Polynomial>& constraints() const { return constraints_; }

    /// Extends d by the graded Leibniz rule d(ab) = d(a) b + (-1)^|a| a d(b).
    Polynomial apply_differential(const Polynomial& p) const;

    /// Generators with degrees and differentials in canonical order.
    std::string dump() const;

private:
    GeneratorSet gens_;
    std::vector<Polynomial> diff_;
    std::vector<Polynomial> constraints_;
};

struct DSquaredFailure {
    GenIndex generator = 0;
    std::string label;
    Polynomial residual;
};

std::optional<DSquaredFailure> check_d_squared(const DgPresentation& p);

// ---------------------------------------------------------------------------
// Points

class PointError : public std::domain_error {
public:
    enum class Kind { MissingValue, ConstraintViolated, OffPi0 };

    PointError(Kind kind, std::string subject, const std::string& what)
        : std::domain_error(what), kind_(kind), subject_(std::move(subject))
    {
    }
    Kind kind() const { return kind_; }
    /// Generator label (OffPi0, MissingValue) or constraint index (ConstraintViolated).
    const std::string& subject() const { return subject_; }

private:
    Kind kind_;
    std::string subject_;
};

/// Rational values on the degree-0 generators of a presentation, lying on
/// pi_0 and satisfying all invertibility constraints. Negative-degree
/// generators are 0.
class Point {
public:
    const RationalVector& values() const { return values_; }
    const Rational& operator[](GenIndex g) const { return values_[g]; }

private:
    friend Point make_point(const DgPresentation&, RationalVector);
    RationalVector values_;
};

/// `values` is indexed by generator; entries for negative-degree generators
/// must be 0. Throws PointError.
Point make_point(const DgPresentation& p, RationalVector values);
/// Values by label; every degree-0 generator must be present.
Point make_point(const DgPresentation& p, const std::map<std::string, Rational>& values);

Rational evaluate(const GeneratorSet& gens, const Polynomial& p, std::span<const Rational> values);

// ---------------------------------------------------------------------------
// Tangent complex and Taylor components

/// Element of T^degree: coordinates against the degree -`degree` generators
/// in canonical order.
struct TangentVector {
    int degree = 0;
    RationalVector coords;

    friend bool operator==(const TangentVector&, const TangentVector&) = default;
};

/// Expansion of p with every degree-0 generator g replaced by x_g + g;
/// entry k holds the part with k factors.
std::vector<Polynomial> taylor_parts(const GeneratorSet& gens, const Polynomial& p, const Point& x);

/// Tangent complex at x: degree k spanned by duals of the degree -k
/// generators; entry (v, w) of d_k is the coefficient of w in the linear
/// part of d(v) at x.
RationalComplex linearize_at_point(const DgPresentation& p, const Point& x);

/// Order-`arity` part of the differential at x, read as a multilinear map
/// on the tangent complex.
class TaylorComponent {
public:
    TaylorComponent(const DgPresentation& p, const Point& x, int arity);

    int arity() const { return arity_; }
    /// Order-`arity` part of d(target) at x.
    const Polynomial& part(GenIndex target) const { return parts_[target]; }
    bool is_zero() const;

    /// d_{xi_1} ... d_{xi_n} applied to each part (xi_n first), with d_xi the
    /// left graded derivation of degree deg(xi). Output lives in degree
    /// sum(deg xi_i) + 1.
    TangentVector apply(std::span<const TangentVector> args) const;

private:
    GeneratorSet gens_;
    int arity_;
    std::vector<Polynomial> parts_;
    std::vector<std::size_t> position_;  // generator -> index within its degree
};

/// Whitehead bracket [xi, eta] = (-1)^{deg eta} lambda_2(xi, eta), taken
/// from the quadratic Taylor component. With Lie degree deg+1 it is graded
/// antisymmetric and satisfies graded Jacobi when the differential is
/// quadratic.
TangentVector whitehead_bracket(const TaylorComponent& quadratic, const TangentVector& xi, const TangentVector& eta);

/// Contraction d_xi p by a homogeneous tangent vector.
Polynomial contract(const GeneratorSet& gens, const Polynomial& p, const TangentVector& xi);

// ---------------------------------------------------------------------------
// Algebra morphisms

/// Algebra map determined by the images of the source generators,
/// polynomials over the target generators.
struct AlgebraMorphism {
    std::vector<Polynomial> images;
};

Polynomial substitute(const GeneratorSet& target, const AlgebraMorphism& f, const Polynomial& p);
/// g after f, for f: A -> B and g: B -> C. `target` is C's generator set.
AlgebraMorphism compose(const GeneratorSet& target, const AlgebraMorphism& g, const AlgebraMorphism& f);
/// First source generator s with f(d s) != d f(s).
std::optional<GenIndex> differential_mismatch(const DgPresentation& source, const DgPresentation& target,
                                              const AlgebraMorphism& f);

}  // namespace dgloc

#endif  // DGLOC_DGALG_HPP
