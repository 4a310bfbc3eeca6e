#include "dgloc/exactlin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace dgloc {

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw std::invalid_argument("empty rational");
    auto valid_integer = [](std::string_view part) {
        std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (start == part.size())
            return false;
        return std::all_of(part.begin() + start, part.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    const auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational '" + s + "'");
    if (num[0] == '+')
        num.erase(0, 1);
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& value)
{
    return value.get_str(10);
}

bool is_zero(std::span<const Rational> v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// ---------------------------------------------------------------------------
// RationalMatrix

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0))
{
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows, const std::vector<RationalVector>& columns)
{
    RationalMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = columns[j][i];
    }
    return m;
}

bool RationalMatrix::is_zero() const
{
    return dgloc::is_zero(data_);
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

RationalVector RationalMatrix::apply(std::span<const Rational> v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("matrix-vector shape mismatch");
    RationalVector out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (v[j] != 0 && (*this)(i, j) != 0)
                out[i] += (*this)(i, j) * v[j];
    return out;
}

RationalVector RationalMatrix::column(std::size_t j) const
{
    RationalVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] += other.data_[k];
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] -= other.data_[k];
    return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s)
{
    for (auto& x : data_)
        x *= s;
    return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    RationalMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string RationalMatrix::to_string() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i > 0)
            out << " ;";
        for (std::size_t j = 0; j < cols_; ++j)
            out << (i == 0 && j == 0 ? "" : " ") << format_rational((*this)(i, j));
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

// Each row is scaled by the lcm of its denominators; row scaling changes
// neither the row space nor the kernel.
std::vector<std::vector<mpz_class>> integral_rows(const RationalMatrix& m)
{
    std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpz_class v = m(i, j).get_num() * (l / m(i, j).get_den());
            rows[i][j] = std::move(v);
        }
    }
    return rows;
}

EchelonForm bareiss(std::vector<std::vector<mpz_class>> a, std::size_t cols)
{
    EchelonForm out;
    out.cols = cols;
    const std::size_t n_rows = a.size();
    std::size_t r = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < cols && r < n_rows; ++col) {
        std::size_t pivot = r;
        while (pivot < n_rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == n_rows)
            continue;
        std::swap(a[r], a[pivot]);
        const mpz_class& p = a[r][col];
        for (std::size_t i = r + 1; i < n_rows; ++i) {
            const mpz_class f = a[i][col];
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class v = p * a[i][j] - f * a[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(v);
            }
            a[i][col] = 0;
        }
        prev = p;
        out.pivots.push_back(col);
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

// Solves the echelon system for the pivot variables given values of the
// free ones; rhs (if any) is the extra trailing column.
void back_substitute(const EchelonForm& e, RationalVector& x, bool with_rhs)
{
    for (std::size_t k = e.rows.size(); k-- > 0;) {
        const auto& row = e.rows[k];
        const std::size_t pc = e.pivots[k];
        Rational acc = with_rhs ? Rational(row[e.cols - 1]) : Rational(0);
        const std::size_t last = with_rhs ? e.cols - 1 : e.cols;
        for (std::size_t j = pc + 1; j < last; ++j)
            if (row[j] != 0 && x[j] != 0)
                acc -= Rational(row[j]) * x[j];
        x[pc] = acc / Rational(row[pc]);
    }
}

}  // namespace

EchelonForm echelon(const RationalMatrix& m)
{
    return bareiss(integral_rows(m), m.cols());
}

std::size_t rank(const RationalMatrix& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    return echelon(m).pivots.size();
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m)
{
    const EchelonForm e = echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;

    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        RationalVector x(m.cols(), Rational(0));
        x[f] = 1;
        back_substitute(e, x, false);
        mpz_class l = 1;
        for (const auto& v : x)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        mpz_class g = 0;
        for (auto& v : x) {
            v *= l;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
        }
        if (g > 1)
            for (auto& v : x)
                v /= g;
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<RationalVector> image_basis(const RationalMatrix& m)
{
    std::vector<RationalVector> basis;
    if (m.rows() == 0 || m.cols() == 0)
        return basis;
    for (auto p : echelon(m).pivots)
        basis.push_back(m.column(p));
    return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& m, std::span<const Rational> b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side length mismatch");
    auto rows = integral_rows(m);
    // Scale each row together with its rhs entry.
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        mpz_class lb = l;
        mpz_lcm(lb.get_mpz_t(), lb.get_mpz_t(), b[i].get_den_mpz_t());
        const mpz_class extra = lb / l;
        for (auto& v : rows[i])
            v *= extra;
        rows[i].push_back(b[i].get_num() * (lb / b[i].get_den()));
    }
    const EchelonForm e = bareiss(std::move(rows), m.cols() + 1);
    if (!e.pivots.empty() && e.pivots.back() == m.cols())
        return std::nullopt;
    RationalVector x(m.cols() + 1, Rational(0));
    back_substitute(e, x, true);
    x.pop_back();
    return x;
}

Rational determinant(const RationalMatrix& m)
{
    if (!m.is_square())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0)
                continue;
            const Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j)
                a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

RationalMatrix inverse(const RationalMatrix& m)
{
    if (!m.is_square())
        throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            throw std::domain_error("matrix is singular");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        const Rational pivot = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= pivot;
            inv(c, j) /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0)
                continue;
            const Rational f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

// ---------------------------------------------------------------------------
// RationalComplex

RationalComplex::RationalComplex(int lowest_degree, std::vector<std::size_t> dims,
                                 std::vector<RationalMatrix> differentials)
    : lowest_(lowest_degree), dims_(std::move(dims)), diffs_(std::move(differentials))
{
    const std::size_t expected = dims_.empty() ? 0 : dims_.size() - 1;
    if (diffs_.size() != expected)
        throw std::invalid_argument("complex needs one differential between consecutive degrees");
    for (std::size_t k = 0; k < diffs_.size(); ++k)
        if (diffs_[k].cols() != dims_[k] || diffs_[k].rows() != dims_[k + 1])
            throw std::invalid_argument("differential shape mismatch at degree " +
                                        std::to_string(lowest_ + static_cast<int>(k)));
}

std::size_t RationalComplex::dim(int degree) const
{
    if (degree < lowest_ || degree > highest_degree())
        return 0;
    return dims_[static_cast<std::size_t>(degree - lowest_)];
}

RationalMatrix RationalComplex::differential(int degree) const
{
    if (degree >= lowest_ && degree < highest_degree())
        return diffs_[static_cast<std::size_t>(degree - lowest_)];
    return RationalMatrix(dim(degree + 1), dim(degree));
}

std::optional<int> RationalComplex::d_squared_failure() const
{
    for (std::size_t k = 0; k + 1 < diffs_.size(); ++k)
        if (!(diffs_[k + 1] * diffs_[k]).is_zero())
            return lowest_ + static_cast<int>(k);
    return std::nullopt;
}

long RationalComplex::euler_characteristic() const
{
    long chi = 0;
    for (int d = lowest_; d <= highest_degree(); ++d)
        chi += (d % 2 == 0 ? 1L : -1L) * static_cast<long>(dim(d));
    return chi;
}

// ---------------------------------------------------------------------------
// Cohomology

std::size_t Cohomology::dim(int degree) const
{
    if (degree < lowest_ || degree > highest_degree())
        return 0;
    return dims_[static_cast<std::size_t>(degree - lowest_)];
}

const Cohomology::Degree& Cohomology::at(int degree) const
{
    if (!with_bases_)
        throw std::logic_error("cohomology computed without bases");
    if (degree < lowest_ || degree > highest_degree())
        throw std::out_of_range("degree outside the complex");
    return degrees_[static_cast<std::size_t>(degree - lowest_)];
}

const std::vector<RationalVector>& Cohomology::representatives(int degree) const
{
    return at(degree).reps;
}

const std::vector<RationalVector>& Cohomology::boundaries(int degree) const
{
    return at(degree).boundaries;
}

bool Cohomology::is_cocycle(int degree, std::span<const Rational> v) const
{
    const auto& d = at(degree);
    if (v.size() != d.ambient)
        throw std::invalid_argument("vector length does not match the degree");
    return d.outgoing.rows() == 0 || dgloc::is_zero(d.outgoing.apply(v));
}

bool Cohomology::is_coboundary(int degree, std::span<const Rational> v) const
{
    const auto& d = at(degree);
    if (v.size() != d.ambient)
        throw std::invalid_argument("vector length does not match the degree");
    if (dgloc::is_zero(v))
        return true;
    if (d.boundaries.empty())
        return false;
    return solve(RationalMatrix::from_columns(d.ambient, d.boundaries), v).has_value();
}

RationalVector Cohomology::classify(int degree, std::span<const Rational> v) const
{
    if (!is_cocycle(degree, v))
        throw std::invalid_argument("classify: vector is not a cocycle");
    const auto& d = at(degree);
    if (d.reps.empty())
        return {};
    auto x = solve(d.basis, v);
    if (!x)
        throw std::logic_error("classify: cocycle outside the span of representatives and boundaries");
    x->resize(d.reps.size());
    return *x;
}

RationalVector Cohomology::lift(int degree, std::span<const Rational> coords) const
{
    const auto& d = at(degree);
    if (coords.size() != d.reps.size())
        throw std::invalid_argument("lift: coordinate count mismatch");
    RationalVector v(d.ambient, Rational(0));
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0)
            for (std::size_t j = 0; j < d.ambient; ++j)
                v[j] += coords[i] * d.reps[i][j];
    return v;
}

Cohomology cohomology(const RationalComplex& complex, bool with_bases)
{
    if (auto bad = complex.d_squared_failure())
        throw std::domain_error("complex fails d^2 = 0 at degree " + std::to_string(*bad));

    Cohomology h;
    h.lowest_ = complex.lowest_degree();
    h.with_bases_ = with_bases;
    if (complex.empty())
        return h;
    for (int k = complex.lowest_degree(); k <= complex.highest_degree(); ++k) {
        const RationalMatrix out = complex.differential(k);
        const RationalMatrix in = complex.differential(k - 1);
        const std::size_t n = complex.dim(k);
        if (!with_bases) {
            h.dims_.push_back(n - rank(out) - rank(in));
            continue;
        }
        Cohomology::Degree deg;
        deg.ambient = n;
        deg.outgoing = out;
        deg.boundaries = image_basis(in);
        const auto cycles = kernel_basis(out);
        std::vector<RationalVector> spanning = deg.boundaries;
        std::size_t current = spanning.size();
        for (const auto& z : cycles) {
            if (current == cycles.size())
                break;
            spanning.push_back(z);
            const std::size_t next = rank(RationalMatrix::from_columns(n, spanning));
            if (next > current) {
                deg.reps.push_back(z);
                current = next;
            } else {
                spanning.pop_back();
            }
        }
        std::vector<RationalVector> cols = deg.reps;
        cols.insert(cols.end(), deg.boundaries.begin(), deg.boundaries.end());
        deg.basis = RationalMatrix::from_columns(n, cols);
        h.dims_.push_back(deg.reps.size());
        h.degrees_.push_back(std::move(deg));
    }
    return h;
}

}  // namespace dgloc
