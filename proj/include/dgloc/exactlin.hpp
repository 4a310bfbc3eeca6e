// Exact linear algebra over the rationals and finite cochain complexes.
//
// Everything here is exact: scalars are GMP rationals and elimination is
// fraction-free (Bareiss) over arbitrary-precision integers. There is no
// floating-point path.

#ifndef DGLOC_EXACTLIN_HPP
#define DGLOC_EXACTLIN_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dgloc {

/// Reduced fraction with positive denominator (GMP keeps it canonical).
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p/q" or "p" (optional sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
/// Inverse of parse_rational; integers print without "/1".
std::string format_rational(const Rational& value);

bool is_zero(std::span<const Rational> v);

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static RationalMatrix from_columns(std::size_t rows, const std::vector<RationalVector>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    RationalMatrix transpose() const;
    RationalVector apply(std::span<const Rational> v) const;
    RationalVector column(std::size_t j) const;

    RationalMatrix& operator+=(const RationalMatrix& other);
    RationalMatrix& operator-=(const RationalMatrix& other);
    RationalMatrix& operator*=(const Rational& s);

    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
    friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
    friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

    /// Row-major "p/q" entries, rows separated by ';'.
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Result of fraction-free forward elimination. `pivots[i]` is the pivot
/// column of row i of the echelon form; the echelon rows are integral.
struct EchelonForm {
    std::vector<std::vector<mpz_class>> rows;
    std::vector<std::size_t> pivots;
    std::size_t cols = 0;
};

EchelonForm echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);
/// Basis of {x : M x = 0}, one vector per free column, integral and primitive.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);
/// Basis of the column space: the original columns at the pivot positions.
std::vector<RationalVector> image_basis(const RationalMatrix& m);
/// Some x with M x = b, or nullopt when inconsistent. Free variables are 0.
std::optional<RationalVector> solve(const RationalMatrix& m, std::span<const Rational> b);
Rational determinant(const RationalMatrix& m);
/// Throws std::domain_error when singular.
RationalMatrix inverse(const RationalMatrix& m);

/// Finite cochain complex  V^lo --d--> V^{lo+1} --> ... --> V^hi.
class RationalComplex {
public:
    RationalComplex() = default;
    /// `differentials[k]` maps degree lo+k to lo+k+1; shapes must chain.
    /// Throws std::invalid_argument on a shape mismatch.
    RationalComplex(int lowest_degree, std::vector<std::size_t> dims, std::vector<RationalMatrix> differentials);

    int lowest_degree() const { return lowest_; }
    int highest_degree() const { return lowest_ + static_cast<int>(dims_.size()) - 1; }
    bool empty() const { return dims_.empty(); }
    /// 0 outside the degree range.
    std::size_t dim(int degree) const;
    /// Map degree -> degree+1. Degrees outside the range yield a correctly
    /// shaped zero matrix.
    RationalMatrix differential(int degree) const;

    /// First degree k with d_{k+1} d_k != 0.
    std::optional<int> d_squared_failure() const;
    long euler_characteristic() const;

private:
    int lowest_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<RationalMatrix> diffs_;
};

/// Per-degree cohomology with optional representative cocycles.
class Cohomology {
public:
    int lowest_degree() const { return lowest_; }
    int highest_degree() const { return lowest_ + static_cast<int>(dims_.size()) - 1; }
    std::size_t dim(int degree) const;
    const std::vector<std::size_t>& dims() const { return dims_; }
    bool has_bases() const { return with_bases_; }

    /// Cocycles whose classes form a basis of H^degree.
    const std::vector<RationalVector>& representatives(int degree) const;
    /// Basis of the coboundaries B^degree.
    const std::vector<RationalVector>& boundaries(int degree) const;

    bool is_cocycle(int degree, std::span<const Rational> v) const;
    bool is_coboundary(int degree, std::span<const Rational> v) const;
    /// Coordinates of the class of a cocycle in the representative basis.
    /// Throws std::invalid_argument if v is not a cocycle.
    RationalVector classify(int degree, std::span<const Rational> v) const;
    /// Cocycle sum_i coords[i] * representative_i.
    RationalVector lift(int degree, std::span<const Rational> coords) const;

private:
    friend Cohomology cohomology(const RationalComplex& complex, bool with_bases);

    struct Degree {
        std::vector<RationalVector> reps;
        std::vector<RationalVector> boundaries;
        RationalMatrix outgoing;
        RationalMatrix basis;  // [reps | boundaries] as columns
        std::size_t ambient = 0;
    };

    const Degree& at(int degree) const;

    int lowest_ = 0;
    bool with_bases_ = false;
    std::vector<std::size_t> dims_;
    std::vector<Degree> degrees_;
};

/// dim H^d = dim ker d_d - rank d_{d-1}. Throws std::domain_error when the
/// complex fails d^2 = 0.
Cohomology cohomology(const RationalComplex& complex, bool with_bases = false);

}  // namespace dgloc

#endif  // DGLOC_EXACTLIN_HPP
