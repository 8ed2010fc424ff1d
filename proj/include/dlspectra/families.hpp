#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "dlspectra/graph.hpp"
#include "dlspectra/quadratic.hpp"

namespace dlspectra {

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
    Graph g;
    g.n = n;
    g.adj.resize(static_cast<std::size_t>(n));
    const std::uint64_t all = g.vertex_mask();
    for (int v = 0; v < n; ++v) g.adj[static_cast<std::size_t>(v)] = all & ~(std::uint64_t{1} << v);
    return g;
}

// Star with center at vertex 0.
inline Graph star_graph(int n) {
    if (n < 1) throw std::invalid_argument("star: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return from_edges(n, edges);
}

inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return from_edges(n, edges);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return from_edges(n, edges);
}

// Part sizes of a complete multipartite graph, kept sorted descending.
struct PartiteSpec {
    std::vector<int> parts;

    explicit PartiteSpec(std::vector<int> sizes) : parts(std::move(sizes)) {
        if (parts.empty()) throw std::invalid_argument("partite spec: no parts");
        for (int t : parts)
            if (t < 1) throw std::invalid_argument("partite spec: part sizes must be >= 1");
        std::sort(parts.begin(), parts.end(), std::greater<>());
    }

    int order() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int part_count() const { return static_cast<int>(parts.size()); }
};

inline Graph complete_multipartite(const PartiteSpec& spec) {
    if (spec.part_count() < 2)
        throw std::invalid_argument("complete multipartite: need at least two parts");
    const int n = spec.order();
    std::vector<int> part_of(static_cast<std::size_t>(n));
    int v = 0;
    for (int p = 0; p < spec.part_count(); ++p)
        for (int i = 0; i < spec.parts[static_cast<std::size_t>(p)]; ++i)
            part_of[static_cast<std::size_t>(v++)] = p;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(w)])
                edges.emplace_back(u, w);
    return from_edges(n, edges);
}

// Complete split graph: an independent set of size alpha joined completely
// to a clique on the remaining n - alpha vertices. Clique first, independent
// set last in the labeling.
inline Graph complete_split(int n, int alpha) {
    if (alpha < 1 || alpha > n - 1)
        throw std::invalid_argument("complete split: alpha must be within [1, n-1]");
    std::vector<std::pair<int, int>> edges;
    const int clique = n - alpha;
    for (int u = 0; u < clique; ++u) {
        for (int w = u + 1; w < clique; ++w) edges.emplace_back(u, w);
        for (int w = clique; w < n; ++w) edges.emplace_back(u, w);
    }
    return from_edges(n, edges);
}

// Corona g o h: one copy of g, with the i-th vertex of g joined to every
// vertex of an own copy of h. Copy i of h occupies vertices
// n1 + i*n2 ... n1 + (i+1)*n2 - 1.
inline Graph corona(const Graph& g, const Graph& h) {
    const int n1 = g.n, n2 = h.n;
    const int n = n1 * (1 + n2);
    if (n > kMaxVertices) throw std::invalid_argument("corona: resulting order exceeds 64");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n1; ++u)
        for (int w = u + 1; w < n1; ++w)
            if (g.has_edge(u, w)) edges.emplace_back(u, w);
    for (int i = 0; i < n1; ++i) {
        const int base = n1 + i * n2;
        for (int u = 0; u < n2; ++u) {
            edges.emplace_back(i, base + u);
            for (int w = u + 1; w < n2; ++w)
                if (h.has_edge(u, w)) edges.emplace_back(base + u, base + w);
        }
    }
    return from_edges(n, edges);
}

// Exact spectrum given in closed form: (eigenvalue, multiplicity) pairs,
// descending by eigenvalue, multiplicities summing to the graph order.
struct ClosedFormSpectrum {
    std::vector<std::pair<Rat, int>> pairs;

    int order() const {
        int n = 0;
        for (const auto& [v, m] : pairs) n += m;
        return n;
    }

    std::vector<double> expand_descending() const {
        std::vector<double> out;
        for (const auto& [v, m] : pairs)
            for (int i = 0; i < m; ++i) out.push_back(static_cast<double>(v));
        std::sort(out.begin(), out.end(), std::greater<>());
        return out;
    }
};

namespace detail {
inline void push_nonzero_mult(ClosedFormSpectrum& s, Rat value, int mult) {
    if (mult > 0) s.pairs.emplace_back(std::move(value), mult);
}
}  // namespace detail

// Distance Laplacian spectrum of a complete multipartite graph:
// n + t_i with multiplicity t_i - 1 for every part, n with multiplicity
// k - 1, and a single 0.
inline ClosedFormSpectrum multipartite_spectrum(const PartiteSpec& spec) {
    if (spec.part_count() < 2)
        throw std::invalid_argument("multipartite spectrum: need at least two parts");
    const int n = spec.order();
    ClosedFormSpectrum s;
    for (int t : spec.parts) detail::push_nonzero_mult(s, Rat(n + t), t - 1);
    detail::push_nonzero_mult(s, Rat(n), spec.part_count() - 1);
    s.pairs.emplace_back(Rat(0), 1);
    // merge duplicates (equal part sizes produce equal eigenvalues)
    std::sort(s.pairs.begin(), s.pairs.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    ClosedFormSpectrum merged;
    for (auto& pr : s.pairs) {
        if (!merged.pairs.empty() && merged.pairs.back().first == pr.first)
            merged.pairs.back().second += pr.second;
        else
            merged.pairs.push_back(pr);
    }
    return merged;
}

// Star: {0, n, (2n-1)^(n-2)}.
inline ClosedFormSpectrum star_spectrum(int n) {
    if (n < 2) throw std::invalid_argument("star spectrum: n must be >= 2");
    ClosedFormSpectrum s;
    detail::push_nonzero_mult(s, Rat(2 * n - 1), n - 2);
    s.pairs.emplace_back(Rat(n), 1);
    s.pairs.emplace_back(Rat(0), 1);
    return s;
}

// Complete split graph: {0, n^(n-alpha), (n+alpha)^(alpha-1)}.
inline ClosedFormSpectrum complete_split_spectrum(int n, int alpha) {
    if (alpha < 1 || alpha > n - 1)
        throw std::invalid_argument("complete split spectrum: alpha out of range");
    ClosedFormSpectrum s;
    detail::push_nonzero_mult(s, Rat(n + alpha), alpha - 1);
    detail::push_nonzero_mult(s, Rat(n), n - alpha);
    s.pairs.emplace_back(Rat(0), 1);
    return s;
}

// Balanced complete multipartite with chi parts of size n/chi:
// {0, n^(chi-1), (n + n/chi)^(n-chi)}.
inline ClosedFormSpectrum balanced_multipartite_spectrum(int n, int chi) {
    if (chi < 2 || n % chi != 0)
        throw std::invalid_argument("balanced multipartite spectrum: chi must divide n");
    ClosedFormSpectrum s;
    detail::push_nonzero_mult(s, Rat(n + n / chi), n - chi);
    detail::push_nonzero_mult(s, Rat(n), chi - 1);
    s.pairs.emplace_back(Rat(0), 1);
    return s;
}

// Laplacian spectrum of a corona g o h from the Laplacian spectra of the
// factors, as exact quadratic values:
//   - lambda_j + 1 with multiplicity n1 for each eigenvalue of h except one
//     zero (ascending list, first entry skipped);
//   - the two roots of x^2 - (mu + n2 + 1) x + mu for each eigenvalue mu
//     of g, i.e. (mu + n2 + 1 +- sqrt((mu + n2 + 1)^2 - 4 mu)) / 2.
// Inputs must be complete ascending spectra (g first entry 0).
inline std::vector<QuadValue> corona_laplacian_spectrum(const std::vector<Rat>& mu, int n2,
                                                        const std::vector<Rat>& lambda) {
    if (static_cast<int>(lambda.size()) != n2)
        throw std::invalid_argument("corona spectrum: lambda list must have n2 entries");
    if (mu.empty()) throw std::invalid_argument("corona spectrum: empty mu list");
    const int n1 = static_cast<int>(mu.size());
    std::vector<QuadValue> out;
    out.reserve(static_cast<std::size_t>(n1) * (1 + n2));
    for (std::size_t j = 1; j < lambda.size(); ++j)
        for (int copy = 0; copy < n1; ++copy)
            out.push_back(QuadValue::rational(lambda[j] + 1));
    for (const Rat& m : mu) {
        Rat s = m + n2 + 1;
        Rat disc = s * s - 4 * m;  // nonnegative for Laplacian eigenvalues
        // sqrt(p/q) = sqrt(p*q)/q
        Int p = rat_num(disc), q = rat_den(disc);
        QuadValue root(Rat(0), Rat(Int(1), Int(2) * q), p * q);
        QuadValue plus(s / 2 + root.a, root.b, root.d);
        QuadValue minus(s / 2 - root.a, -root.b, root.d);
        out.push_back(plus);
        out.push_back(minus);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Same map on floating inputs, for graphs whose factor spectra are not
// rational.
inline std::vector<double> corona_laplacian_numeric(const std::vector<double>& mu_asc, int n2,
                                                    const std::vector<double>& lambda_asc) {
    std::vector<double> out;
    const int n1 = static_cast<int>(mu_asc.size());
    for (std::size_t j = 1; j < lambda_asc.size(); ++j)
        for (int copy = 0; copy < n1; ++copy) out.push_back(lambda_asc[j] + 1.0);
    for (double m : mu_asc) {
        double s = m + n2 + 1.0;
        double r = std::sqrt(s * s - 4.0 * m);
        out.push_back((s + r) / 2.0);
        out.push_back((s - r) / 2.0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dlspectra
