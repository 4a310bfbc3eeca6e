#include "dgloc/verify/oracles.hpp"

#include <stdexcept>
#include <utility>

namespace dgloc::oracle {

std::size_t rank(DenseRows rows)
{
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            const Rational f = rows[i][c] / rows[r][c];
            for (std::size_t k = c; k < cols; ++k)
                rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    return r;
}

namespace {

std::size_t face_of(const SemiSimplicialSet& space, int dim, std::size_t index, int i)
{
    const auto& faces = space.simplex({dim, index}).faces;
    const auto f = faces.at(static_cast<std::size_t>(i));
    if (f == Simplex::kUnresolved)
        throw std::invalid_argument("oracle needs a resolved face table");
    return f;
}

/// Edge from the second-to-last to the last vertex: d_0 applied dim-1 times.
std::size_t last_edge(const SemiSimplicialSet& space, int dim, std::size_t index)
{
    while (dim > 1) {
        index = face_of(space, dim, index, 0);
        --dim;
    }
    return index;
}

}  // namespace

std::vector<std::size_t> betti_numbers(const SemiSimplicialSet& space)
{
    const int top = space.dimension();
    // rank of the boundary C_p -> C_{p-1}, p = 1..top.
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
    for (int p = 1; p <= top; ++p) {
        DenseRows rows(space.count(p - 1), std::vector<Rational>(space.count(p)));
        for (std::size_t s = 0; s < space.count(p); ++s)
            for (int i = 0; i <= p; ++i)
                rows[face_of(space, p, s, i)][s] += (i % 2 == 0) ? 1 : -1;
        ranks[static_cast<std::size_t>(p)] = rank(std::move(rows));
    }
    std::vector<std::size_t> out;
    for (int p = 0; p <= top; ++p)
        out.push_back(space.count(p) - ranks[static_cast<std::size_t>(p)] - ranks[static_cast<std::size_t>(p + 1)]);
    return out;
}

TwistedDims twisted_restricted_dims(const SemiSimplicialSet& space, const std::vector<Rational>& t)
{
    const auto base = space.basepoint();
    if (!base)
        throw std::invalid_argument("oracle needs a basepoint");
    if (t.size() != space.count(1))
        throw std::invalid_argument("one monodromy per edge");
    const int top = space.dimension();

    // Column of each non-basepoint vertex.
    std::vector<long> column(space.count(0), -1);
    std::size_t res = 0;
    for (std::size_t v = 0; v < space.count(0); ++v)
        if (v != base->index)
            column[v] = static_cast<long>(res++);

    // dims of C^{-1}, C^0, C^1, ... (C^k = (k+1)-cochains for k >= 0)
    std::vector<std::size_t> dims{res};
    for (int p = 1; p <= std::max(top, 1); ++p)
        dims.push_back(p <= top ? space.count(p) : 0);

    // ranks of the maps C^{k} -> C^{k+1}, k = -1, 0, ...
    std::vector<std::size_t> ranks;
    {
        DenseRows rows(space.count(1), std::vector<Rational>(res));
        for (std::size_t e = 0; e < space.count(1); ++e) {
            const auto head = face_of(space, 1, e, 0);
            const auto tail = face_of(space, 1, e, 1);
            if (column[head] >= 0)
                rows[e][static_cast<std::size_t>(column[head])] += 1;
            if (column[tail] >= 0)
                rows[e][static_cast<std::size_t>(column[tail])] -= t[e];
        }
        ranks.push_back(rank(std::move(rows)));
    }
    for (int p = 1; p < top; ++p) {
        DenseRows rows(space.count(p + 1), std::vector<Rational>(space.count(p)));
        for (std::size_t s = 0; s < space.count(p + 1); ++s) {
            for (int i = 0; i <= p; ++i)
                rows[s][face_of(space, p + 1, s, i)] += (i % 2 == 0) ? 1 : -1;
            const Rational sign = ((p + 1) % 2 == 0) ? 1 : -1;
            rows[s][face_of(space, p + 1, s, p + 1)] += sign * t[last_edge(space, p + 1, s)];
        }
        ranks.push_back(rank(std::move(rows)));
    }
    ranks.resize(dims.size(), 0);

    TwistedDims out;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        const std::size_t incoming = k == 0 ? 0 : ranks[k - 1];
        const std::size_t h = dims[k] - ranks[k] - incoming;
        if (k == 0)
            out.kernel_minus1 = h;
        else
            out.tangent.push_back(h);
    }
    return out;
}

TwistedDims weight_block_dims(const SemiSimplicialSet& space, const Connection& e)
{
    for (const auto& m : e.edges)
        for (std::size_t a = 0; a < e.r; ++a)
            for (std::size_t b = 0; b < e.r; ++b)
                if (a != b && m(a, b) != 0)
                    throw std::invalid_argument("weight blocks need diagonal holonomies");
    TwistedDims total;
    for (std::size_t a = 0; a < e.r; ++a)
        for (std::size_t b = 0; b < e.r; ++b) {
            std::vector<Rational> t;
            for (const auto& m : e.edges)
                t.push_back(m(a, a) / m(b, b));
            const auto block = twisted_restricted_dims(space, t);
            total.kernel_minus1 += block.kernel_minus1;
            total.tangent.resize(block.tangent.size(), 0);
            for (std::size_t k = 0; k < block.tangent.size(); ++k)
                total.tangent[k] += block.tangent[k];
        }
    return total;
}

std::size_t simplex_coboundary_rank(int n, std::size_t r, const SimplexConnection& edges)
{
    // Rows: (edge (i,j), entry (x,y)); columns: (vertex v, entry (a,b)).
    const std::size_t rr = r * r;
    DenseRows rows;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const auto& g = edges.at({i, j});
            for (std::size_t x = 0; x < r; ++x)
                for (std::size_t y = 0; y < r; ++y) {
                    std::vector<Rational> row(static_cast<std::size_t>(n + 1) * rr);
                    // (xi_j g)[x,y] = sum_k xi_j[x,k] g[k,y]
                    for (std::size_t k = 0; k < r; ++k)
                        row[static_cast<std::size_t>(j) * rr + x * r + k] += g(k, y);
                    // (g xi_i)[x,y] = sum_k g[x,k] xi_i[k,y]
                    for (std::size_t k = 0; k < r; ++k)
                        row[static_cast<std::size_t>(i) * rr + k * r + y] -= g(x, k);
                    rows.push_back(std::move(row));
                }
        }
    return rank(std::move(rows));
}

}  // namespace dgloc::oracle
