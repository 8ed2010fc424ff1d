#pragma once

#include <stdexcept>
#include <vector>

#include "dlspectra/graph.hpp"
#include "dlspectra/numeric.hpp"
#include "dlspectra/poly.hpp"

namespace dlspectra {

// Dense symmetric integer matrix (row-major full storage; symmetry is a
// construction invariant, not an enforced view).
struct IntSymMatrix {
    int order = 0;
    std::vector<Int> a;

    IntSymMatrix() = default;
    explicit IntSymMatrix(int n) : order(n), a(static_cast<std::size_t>(n) * n) {}

    Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * order + j]; }
    const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * order + j]; }
};

inline IntSymMatrix distance_laplacian(const Graph& g, const DistanceData& d) {
    IntSymMatrix m(g.n);
    for (int i = 0; i < g.n; ++i) {
        m.at(i, i) = d.tr[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < g.n; ++j) {
            m.at(i, j) = -d.dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            m.at(j, i) = m.at(i, j);
        }
    }
    return m;
}

inline IntSymMatrix distance_laplacian(const Graph& g) {
    return distance_laplacian(g, apsp(g));
}

inline IntSymMatrix laplacian(const Graph& g) {
    IntSymMatrix m(g.n);
    for (int i = 0; i < g.n; ++i) {
        m.at(i, i) = g.degree(i);
        for (int j = i + 1; j < g.n; ++j) {
            if (g.has_edge(i, j)) {
                m.at(i, j) = -1;
                m.at(j, i) = -1;
            }
        }
    }
    return m;
}

inline IntSymMatrix principal_submatrix(const IntSymMatrix& m, const std::vector<int>& rows) {
    if (rows.empty()) throw std::invalid_argument("principal_submatrix: empty selection");
    for (int r : rows)
        if (r < 0 || r >= m.order)
            throw std::invalid_argument("principal_submatrix: index out of range");
    IntSymMatrix s(static_cast<int>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
            s.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rows[i], rows[j]);
    return s;
}

// Exact characteristic polynomial det(xI - M) + its squarefree structure.
// The squarefree factors carry Sturm chains, so interval counting against
// rational endpoints is a pure sign computation from here on.
struct CharPoly {
    IntPoly poly;                           // monic, ascending coefficients
    std::vector<SquarefreeFactor> factors;  // Yun decomposition of poly
};

// Berkowitz iteration: division-free, so coefficients stay exact integers.
// Processes leading principal blocks of growing size; each step multiplies
// the previous coefficient vector by a Toeplitz matrix built from the new
// row/column.
inline IntPoly berkowitz_char_poly(const IntSymMatrix& m) {
    const int n = m.order;
    if (n == 0) return IntPoly::constant(1);
    if (n > kMaxVertices) throw std::invalid_argument("char_poly: order exceeds 64");
    // coefficients highest power first during the iteration
    std::vector<Int> coeff{Int(1), -m.at(0, 0)};
    std::vector<Int> v, mv, q;
    for (int r = 2; r <= n; ++r) {
        q.assign(static_cast<std::size_t>(r), Int(0));
        q[0] = m.at(r - 1, r - 1);
        v.resize(static_cast<std::size_t>(r - 1));
        for (int i = 0; i < r - 1; ++i) v[static_cast<std::size_t>(i)] = m.at(i, r - 1);
        for (int t = 1; t < r; ++t) {
            Int dot = 0;
            for (int j = 0; j < r - 1; ++j) dot += m.at(r - 1, j) * v[static_cast<std::size_t>(j)];
            q[static_cast<std::size_t>(t)] = std::move(dot);
            if (t + 1 < r) {
                mv.assign(static_cast<std::size_t>(r - 1), Int(0));
                for (int i = 0; i < r - 1; ++i)
                    for (int j = 0; j < r - 1; ++j)
                        mv[static_cast<std::size_t>(i)] += m.at(i, j) * v[static_cast<std::size_t>(j)];
                v.swap(mv);
            }
        }
        std::vector<Int> next(static_cast<std::size_t>(r + 1));
        for (int i = 0; i <= r; ++i) {
            Int s = (i < r) ? coeff[static_cast<std::size_t>(i)] : Int(0);
            for (int j = (i > r - 1 ? i - r : 0); j < i && j < r; ++j)
                s -= q[static_cast<std::size_t>(i - j - 1)] * coeff[static_cast<std::size_t>(j)];
            next[static_cast<std::size_t>(i)] = std::move(s);
        }
        coeff.swap(next);
    }
    std::vector<Int> ascending(coeff.rbegin(), coeff.rend());
    return IntPoly{std::move(ascending)};
}

inline CharPoly char_poly(const IntSymMatrix& m) {
    CharPoly cp;
    cp.poly = berkowitz_char_poly(m);
    cp.factors = yun_squarefree(cp.poly);
    return cp;
}

// Gershgorin row bounds: every eigenvalue lies in [lo, hi].
inline std::pair<Int, Int> gershgorin_bounds(const IntSymMatrix& m) {
    Int lo = 0, hi = 0;
    bool first = true;
    for (int i = 0; i < m.order; ++i) {
        Int radius = 0;
        for (int j = 0; j < m.order; ++j)
            if (j != i) radius += boost::multiprecision::abs(m.at(i, j));
        Int l = m.at(i, i) - radius, h = m.at(i, i) + radius;
        if (first || l < lo) lo = l;
        if (first || h > hi) hi = h;
        first = false;
    }
    return {lo, hi};
}

}  // namespace dlspectra
