#include "dgloc/dgalg.hpp"

#include <algorithm>
#include <sstream>

namespace dgloc {

// ---------------------------------------------------------------------------
// GeneratorSet

GeneratorSet::GeneratorSet(std::vector<Generator> generators) : gens_(std::move(generators))
{
    std::sort(gens_.begin(), gens_.end(), [](const Generator& a, const Generator& b) { return a.label < b.label; });
    for (GenIndex i = 0; i < gens_.size(); ++i) {
        const auto& g = gens_[i];
        if (g.degree > 0)
            throw std::invalid_argument("generator '" + g.label + "' has positive degree");
        if (!lookup_.emplace(g.label, i).second)
            throw std::invalid_argument("duplicate generator '" + g.label + "'");
        by_degree_[g.degree].push_back(i);
        lowest_ = std::min(lowest_, g.degree);
    }
}

std::optional<GenIndex> GeneratorSet::find(const std::string& label) const
{
    auto it = lookup_.find(label);
    if (it == lookup_.end())
        return std::nullopt;
    return it->second;
}

GenIndex GeneratorSet::index(const std::string& label) const
{
    auto it = lookup_.find(label);
    if (it == lookup_.end())
        throw std::out_of_range("unknown generator '" + label + "'");
    return it->second;
}

const std::vector<GenIndex>& GeneratorSet::of_degree(int degree) const
{
    static const std::vector<GenIndex> none;
    auto it = by_degree_.find(degree);
    return it == by_degree_.end() ? none : it->second;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(const Rational& c)
{
    Polynomial p;
    p.add_term({}, c);
    return p;
}

Polynomial Polynomial::generator(GenIndex g, const Rational& c)
{
    Polynomial p;
    p.add_term({g}, c);
    return p;
}

Rational Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t Polynomial::max_order() const
{
    std::size_t n = 0;
    for (const auto& [m, c] : terms_)
        n = std::max(n, m.size());
    return n;
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= s;
    return *this;
}

int normalize(const GeneratorSet& gens, Monomial& factors)
{
    int sign = 1;
    for (std::size_t i = 1; i < factors.size(); ++i) {
        const GenIndex g = factors[i];
        const bool g_odd = gens.odd(g);
        std::size_t j = i;
        while (j > 0 && factors[j - 1] > g) {
            if (g_odd && gens.odd(factors[j - 1]))
                sign = -sign;
            factors[j] = factors[j - 1];
            --j;
        }
        factors[j] = g;
    }
    for (std::size_t i = 1; i < factors.size(); ++i)
        if (factors[i] == factors[i - 1] && gens.odd(factors[i]))
            return 0;
    return sign;
}

Polynomial multiply(const GeneratorSet& gens, const Polynomial& p, const Polynomial& q)
{
    Polynomial out;
    Monomial buf;
    for (const auto& [m1, c1] : p.terms())
        for (const auto& [m2, c2] : q.terms()) {
            buf.assign(m1.begin(), m1.end());
            buf.insert(buf.end(), m2.begin(), m2.end());
            const int s = normalize(gens, buf);
            if (s != 0)
                out.add_term(buf, s > 0 ? Rational(c1 * c2) : Rational(-(c1 * c2)));
        }
    return out;
}

int monomial_degree(const GeneratorSet& gens, const Monomial& m)
{
    int d = 0;
    for (auto g : m)
        d += gens.degree(g);
    return d;
}

std::optional<int> homogeneous_degree(const GeneratorSet& gens, const Polynomial& p)
{
    std::optional<int> deg;
    for (const auto& [m, c] : p.terms()) {
        const int d = monomial_degree(gens, m);
        if (deg && *deg != d)
            return std::nullopt;
        deg = d;
    }
    return deg;
}

std::string to_string(const GeneratorSet& gens, const Polynomial& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational mag = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        const bool show_coeff = m.empty() || mag != 1;
        if (show_coeff)
            out << format_rational(mag);
        for (std::size_t i = 0; i < m.size(); ++i)
            out << ((i == 0 && !show_coeff) ? "" : "*") << gens[m[i]].label;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// DgPresentation

DgPresentation::DgPresentation(GeneratorSet gens, std::vector<Polynomial> differential,
                               std::vector<Polynomial> constraints)
    : gens_(std::move(gens)), diff_(std::move(differential)), constraints_(std::move(constraints))
{
    if (diff_.size() != gens_.size())
        throw std::invalid_argument("differential table size does not match the generators");
    for (GenIndex g = 0; g < gens_.size(); ++g) {
        if (diff_[g].is_zero())
            continue;
        const auto d = homogeneous_degree(gens_, diff_[g]);
        if (!d || *d != gens_.degree(g) + 1)
            throw std::invalid_argument("d(" + gens_[g].label + ") is not homogeneous of degree " +
                                        std::to_string(gens_.degree(g) + 1));
    }
    for (const auto& c : constraints_)
        for (const auto& [m, coeff] : c.terms())
            for (auto g : m)
                if (gens_.degree(g) != 0)
                    throw std::invalid_argument("constraint involves a non-degree-0 generator");
}

Polynomial DgPresentation::apply_differential(const Polynomial& p) const
{
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        bool odd_prefix = false;
        for (std::size_t i = 0; i < m.size(); ++i) {
            const Polynomial& dg = diff_[m[i]];
            if (!dg.is_zero()) {
                Polynomial left;
                left.add_term(Monomial(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(i)), odd_prefix ? -c : c);
                Polynomial right;
                right.add_term(Monomial(m.begin() + static_cast<std::ptrdiff_t>(i) + 1, m.end()), 1);
                out += multiply(gens_, multiply(gens_, left, dg), right);
            }
            if (gens_.odd(m[i]))
                odd_prefix = !odd_prefix;
        }
    }
    return out;
}

std::string DgPresentation::dump() const
{
    std::ostringstream out;
    for (GenIndex g = 0; g < gens_.size(); ++g)
        out << gens_[g].label << " [" << gens_.degree(g) << "] d = " << to_string(gens_, diff_[g]) << '\n';
    for (std::size_t k = 0; k < constraints_.size(); ++k)
        out << "constraint " << k << ": " << to_string(gens_, constraints_[k]) << " != 0\n";
    return out.str();
}

std::optional<DSquaredFailure> check_d_squared(const DgPresentation& p)
{
    for (GenIndex g = 0; g < p.generators().size(); ++g) {
        Polynomial r = p.apply_differential(p.differential(g));
        if (!r.is_zero())
            return DSquaredFailure{g, p.generators()[g].label, std::move(r)};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Points

Rational evaluate(const GeneratorSet& gens, const Polynomial& p, std::span<const Rational> values)
{
    if (values.size() != gens.size())
        throw std::invalid_argument("evaluate: value vector size mismatch");
    Rational total = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (auto g : m) {
            if (values[g] == 0) {
                t = 0;
                break;
            }
            t *= values[g];
        }
        total += t;
    }
    return total;
}

Point make_point(const DgPresentation& p, RationalVector values)
{
    const auto& gens = p.generators();
    if (values.size() != gens.size())
        throw std::invalid_argument("point has the wrong number of coordinates");
    for (GenIndex g = 0; g < gens.size(); ++g)
        if (gens.degree(g) != 0 && values[g] != 0)
            throw std::invalid_argument("point assigns a value to negative-degree generator " + gens[g].label);
    for (std::size_t k = 0; k < p.constraints().size(); ++k)
        if (evaluate(gens, p.constraints()[k], values) == 0)
            throw PointError(PointError::Kind::ConstraintViolated, std::to_string(k),
                             "invertibility constraint " + std::to_string(k) + " vanishes at the point");
    for (GenIndex g : gens.of_degree(-1)) {
        const Rational v = evaluate(gens, p.differential(g), values);
        if (v != 0)
            throw PointError(PointError::Kind::OffPi0, gens[g].label,
                             "point is off pi_0: d(" + gens[g].label + ") = " + format_rational(v));
    }
    Point x;
    x.values_ = std::move(values);
    return x;
}

Point make_point(const DgPresentation& p, const std::map<std::string, Rational>& values)
{
    const auto& gens = p.generators();
    RationalVector v(gens.size(), Rational(0));
    for (const auto& [label, value] : values) {
        const auto g = gens.find(label);
        if (!g)
            throw std::invalid_argument("point names unknown generator '" + label + "'");
        v[*g] = value;
    }
    for (GenIndex g : gens.of_degree(0))
        if (!values.contains(gens[g].label))
            throw PointError(PointError::Kind::MissingValue, gens[g].label, "no value for " + gens[g].label);
    return make_point(p, std::move(v));
}

// ---------------------------------------------------------------------------
// Taylor expansion

std::vector<Polynomial> taylor_parts(const GeneratorSet& gens, const Polynomial& p, const Point& x)
{
    Polynomial expanded;
    for (const auto& [m, c] : p.terms()) {
        Polynomial term = Polynomial::constant(c);
        for (auto g : m) {
            Polynomial factor = Polynomial::generator(g);
            if (gens.degree(g) == 0)
                factor.add_term({}, x[g]);
            term = multiply(gens, term, factor);
        }
        expanded += term;
    }
    std::vector<Polynomial> parts(expanded.max_order() + 1);
    for (const auto& [m, c] : expanded.terms())
        parts[m.size()].add_term(m, c);
    return parts;
}

namespace {

std::size_t position_in_degree(const GeneratorSet& gens, GenIndex g)
{
    const auto& list = gens.of_degree(gens.degree(g));
    return static_cast<std::size_t>(std::lower_bound(list.begin(), list.end(), g) - list.begin());
}

}  // namespace

RationalComplex linearize_at_point(const DgPresentation& p, const Point& x)
{
    const auto& gens = p.generators();
    const int top = -gens.lowest_degree();
    std::vector<std::size_t> dims;
    for (int k = 0; k <= top; ++k)
        dims.push_back(gens.of_degree(-k).size());
    std::vector<RationalMatrix> diffs;
    for (int k = 0; k < top; ++k) {
        const auto& rows = gens.of_degree(-(k + 1));
        RationalMatrix d(rows.size(), dims[static_cast<std::size_t>(k)]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto parts = taylor_parts(gens, p.differential(rows[i]), x);
            if (!parts[0].is_zero())
                throw std::logic_error("differential has a constant term at the point");
            if (parts.size() < 2)
                continue;
            for (const auto& [m, c] : parts[1].terms())
                d(i, position_in_degree(gens, m[0])) = c;
        }
        diffs.push_back(std::move(d));
    }
    return RationalComplex(0, std::move(dims), std::move(diffs));
}

Polynomial contract(const GeneratorSet& gens, const Polynomial& p, const TangentVector& xi)
{
    const auto& basis = gens.of_degree(-xi.degree);
    if (xi.coords.size() != basis.size())
        throw std::invalid_argument("tangent vector has the wrong number of coordinates");
    const bool xi_odd = xi.degree % 2 != 0;
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        bool odd_prefix = false;
        for (std::size_t i = 0; i < m.size(); ++i) {
            const GenIndex g = m[i];
            if (gens.degree(g) == -xi.degree) {
                const Rational& a = xi.coords[position_in_degree(gens, g)];
                if (a != 0) {
                    Monomial rest(m);
                    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
                    const bool negate = xi_odd && odd_prefix;
                    out.add_term(rest, negate ? Rational(-(c * a)) : Rational(c * a));
                }
            }
            if (gens.odd(g))
                odd_prefix = !odd_prefix;
        }
    }
    return out;
}

TaylorComponent::TaylorComponent(const DgPresentation& p, const Point& x, int arity)
    : gens_(p.generators()), arity_(arity)
{
    if (arity < 1)
        throw std::invalid_argument("Taylor component arity must be >= 1");
    parts_.resize(gens_.size());
    for (GenIndex g = 0; g < gens_.size(); ++g) {
        auto parts = taylor_parts(gens_, p.differential(g), x);
        if (static_cast<std::size_t>(arity) < parts.size())
            parts_[g] = std::move(parts[static_cast<std::size_t>(arity)]);
    }
}

bool TaylorComponent::is_zero() const
{
    return std::all_of(parts_.begin(), parts_.end(), [](const Polynomial& q) { return q.is_zero(); });
}

TangentVector TaylorComponent::apply(std::span<const TangentVector> args) const
{
    if (args.size() != static_cast<std::size_t>(arity_))
        throw std::invalid_argument("Taylor component applied to the wrong number of arguments");
    int out_degree = 1;
    for (const auto& a : args)
        out_degree += a.degree;
    const auto& targets = gens_.of_degree(-out_degree);
    TangentVector out{out_degree, RationalVector(targets.size(), Rational(0))};
    for (std::size_t t = 0; t < targets.size(); ++t) {
        Polynomial q = parts_[targets[t]];
        for (std::size_t i = args.size(); i-- > 0 && !q.is_zero();)
            q = contract(gens_, q, args[i]);
        out.coords[t] = q.coefficient({});
    }
    return out;
}

TangentVector whitehead_bracket(const TaylorComponent& quadratic, const TangentVector& xi, const TangentVector& eta)
{
    if (quadratic.arity() != 2)
        throw std::invalid_argument("bracket needs the quadratic Taylor component");
    const TangentVector args[2] = {xi, eta};
    TangentVector out = quadratic.apply(args);
    if (eta.degree % 2 != 0)
        for (auto& c : out.coords)
            c = -c;
    return out;
}

// ---------------------------------------------------------------------------
// Algebra morphisms

Polynomial substitute(const GeneratorSet& target, const AlgebraMorphism& f, const Polynomial& p)
{
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        Polynomial term = Polynomial::constant(c);
        for (auto g : m) {
            if (g >= f.images.size())
                throw std::out_of_range("morphism has no image for a generator");
            term = multiply(target, term, f.images[g]);
            if (term.is_zero())
                break;
        }
        out += term;
    }
    return out;
}

AlgebraMorphism compose(const GeneratorSet& target, const AlgebraMorphism& g, const AlgebraMorphism& f)
{
    AlgebraMorphism out;
    out.images.reserve(f.images.size());
    for (const auto& img : f.images)
        out.images.push_back(substitute(target, g, img));
    return out;
}

std::optional<GenIndex> differential_mismatch(const DgPresentation& source, const DgPresentation& target,
                                              const AlgebraMorphism& f)
{
    for (GenIndex s = 0; s < source.generators().size(); ++s) {
        const Polynomial lhs = substitute(target.generators(), f, source.differential(s));
        const Polynomial rhs = target.apply_differential(f.images[s]);
        if (lhs != rhs)
            return s;
    }
    return std::nullopt;
}

}  // namespace dgloc
