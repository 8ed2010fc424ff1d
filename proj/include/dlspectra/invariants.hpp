#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlspectra/graph.hpp"

namespace dlspectra {

namespace detail {

// Max clique with greedy-coloring pruning (Tomita-style bound). Independence
// number is the clique number of the complement.
struct CliqueSolver {
    const Graph& g;
    int best = 0;

    explicit CliqueSolver(const Graph& graph) : g(graph) {}

    void expand(std::uint64_t cand, int size) {
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        // greedy coloring of candidates; color index is an upper bound on the
        // clique extension inside cand
        std::vector<int> order, color;
        std::uint64_t uncolored = cand;
        int col = 0;
        while (uncolored) {
            ++col;
            std::uint64_t avail = uncolored;
            while (avail) {
                int v = std::countr_zero(avail);
                avail &= avail - 1;
                uncolored &= ~(std::uint64_t{1} << v);
                avail &= ~g.adj[static_cast<std::size_t>(v)];
                order.push_back(v);
                color.push_back(col);
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (size + color[static_cast<std::size_t>(i)] <= best) return;
            int v = order[static_cast<std::size_t>(i)];
            expand(cand & g.adj[static_cast<std::size_t>(v)], size + 1);
            cand &= ~(std::uint64_t{1} << v);
        }
    }
};

}  // namespace detail

inline int clique_number(const Graph& g) {
    detail::CliqueSolver solver(g);
    solver.expand(g.vertex_mask(), 0);
    return solver.best;
}

inline int independence_number(const Graph& g) { return clique_number(complement(g)); }

namespace detail {

// Exact k-colorability by backtracking. Vertices in static order; a vertex
// may open color c only if colors 0..c-1 are already in use (symmetry break).
inline bool colorable_rec(const Graph& g, std::vector<int>& color, int v, int used, int k) {
    if (v == g.n) return true;
    std::uint64_t row = g.adj[static_cast<std::size_t>(v)];
    std::uint64_t forbidden = 0;
    for (int u = 0; u < v; ++u)
        if ((row >> u) & 1u) forbidden |= std::uint64_t{1} << color[static_cast<std::size_t>(u)];
    int limit = std::min(used + 1, k);
    for (int c = 0; c < limit; ++c) {
        if ((forbidden >> c) & 1u) continue;
        color[static_cast<std::size_t>(v)] = c;
        if (colorable_rec(g, color, v + 1, std::max(used, c + 1), k)) return true;
    }
    return false;
}

inline bool is_k_colorable(const Graph& g, int k) {
    std::vector<int> color(static_cast<std::size_t>(g.n), -1);
    return colorable_rec(g, color, 0, 0, k);
}

inline int greedy_coloring_bound(const Graph& g) {
    // descending-degree sequential coloring
    std::vector<int> verts(static_cast<std::size_t>(g.n));
    std::iota(verts.begin(), verts.end(), 0);
    std::sort(verts.begin(), verts.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(static_cast<std::size_t>(g.n), -1);
    int used = 0;
    for (int v : verts) {
        std::uint64_t forbidden = 0;
        for (int u = 0; u < g.n; ++u)
            if (g.has_edge(v, u) && color[static_cast<std::size_t>(u)] >= 0)
                forbidden |= std::uint64_t{1} << color[static_cast<std::size_t>(u)];
        int c = 0;
        while ((forbidden >> c) & 1u) ++c;
        color[static_cast<std::size_t>(v)] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

}  // namespace detail

inline int chromatic_number(const Graph& g) {
    if (g.edge_count() == 0) return 1;
    int lo = clique_number(g);
    int hi = detail::greedy_coloring_bound(g);
    for (int k = lo; k < hi; ++k)
        if (detail::is_k_colorable(g, k)) return k;
    return hi;
}

inline bool is_bipartite(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.n), -1);
    for (int s = 0; s < g.n; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < g.n; ++u) {
                if (!g.has_edge(v, u)) continue;
                if (color[static_cast<std::size_t>(u)] == -1) {
                    color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
                    stack.push_back(u);
                } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace detail {

inline bool dominating_set_of_size(const Graph& g, const std::vector<std::uint64_t>& closed,
                                   std::uint64_t covered, int k) {
    if (covered == g.vertex_mask()) return true;
    if (k == 0) return false;
    // the lowest uncovered vertex must be dominated, so branch over its
    // closed neighborhood only
    int target = std::countr_zero(g.vertex_mask() & ~covered);
    std::uint64_t choices = closed[static_cast<std::size_t>(target)];
    while (choices) {
        int v = std::countr_zero(choices);
        choices &= choices - 1;
        if (dominating_set_of_size(g, closed, covered | closed[static_cast<std::size_t>(v)], k - 1))
            return true;
    }
    return false;
}

}  // namespace detail

inline int domination_number(const Graph& g) {
    std::vector<std::uint64_t> closed(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v)
        closed[static_cast<std::size_t>(v)] = g.adj[static_cast<std::size_t>(v)] | (std::uint64_t{1} << v);
    for (int k = 1; k <= g.n; ++k)
        if (detail::dominating_set_of_size(g, closed, 0, k)) return k;
    return g.n;
}

// Is there a proper coloring with exactly k classes, all of size n/k?
// Backtracking with class-size caps; a vertex may open class c only when
// classes 0..c-1 are nonempty.
namespace detail {
inline bool balanced_rec(const Graph& g, std::vector<std::uint64_t>& classes,
                         std::vector<int>& sizes, int v, int opened, int k, int cap) {
    if (v == g.n) return true;
    std::uint64_t row = g.adj[static_cast<std::size_t>(v)];
    int limit = std::min(opened + 1, k);
    for (int c = 0; c < limit; ++c) {
        if (sizes[static_cast<std::size_t>(c)] >= cap) continue;
        if (classes[static_cast<std::size_t>(c)] & row) continue;
        classes[static_cast<std::size_t>(c)] |= std::uint64_t{1} << v;
        ++sizes[static_cast<std::size_t>(c)];
        if (balanced_rec(g, classes, sizes, v + 1, std::max(opened, c + 1), k, cap)) return true;
        classes[static_cast<std::size_t>(c)] &= ~(std::uint64_t{1} << v);
        --sizes[static_cast<std::size_t>(c)];
    }
    return false;
}
}  // namespace detail

inline bool has_balanced_coloring(const Graph& g, int k) {
    if (k <= 0 || g.n % k != 0) return false;
    std::vector<std::uint64_t> classes(static_cast<std::size_t>(k), 0);
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    return detail::balanced_rec(g, classes, sizes, 0, 0, k, g.n / k);
}

// Structural snapshot of one graph: all the exact invariants the eigenvalue
// location theorems quantify over.
struct GraphParams {
    int alpha = 0;
    int chi = 0;
    int gamma = 0;
    std::vector<int> pendants;
    int complement_component_count = 0;
    int diameter = 0;
    bool bipartite = false;
    int tr_max = 0;

    int pendant_count() const { return static_cast<int>(pendants.size()); }
};

inline GraphParams compute_params(const Graph& g, const DistanceData& d) {
    GraphParams p;
    p.alpha = independence_number(g);
    p.chi = chromatic_number(g);
    p.gamma = domination_number(g);
    p.pendants = pendant_vertices(g);
    p.complement_component_count = complement_components(g);
    p.diameter = d.diameter;
    p.bipartite = is_bipartite(g);
    p.tr_max = d.tr_max;
    return p;
}

// ---------------------------------------------------------------------------
// Canonical form. Vertices are first partitioned by an iterated neighborhood
// signature (degree, then sorted multiset of neighbor signatures), cells
// ordered by signature; the code is the lexicographically smallest adjacency
// encoding over all orderings that respect the cell structure. Equal codes
// iff isomorphic: the encoding reconstructs the graph, and the cell structure
// is an isomorphism invariant.

constexpr int kMaxCanonOrder = 10;

namespace detail {

inline std::string encode_with_order(const Graph& g, const std::vector<int>& order) {
    std::string out;
    out.push_back(static_cast<char>(g.n));
    int acc = 0, filled = 0;
    for (int i = 0; i < g.n; ++i) {
        for (int j = i + 1; j < g.n; ++j) {
            acc = (acc << 1) |
                  (g.has_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]) ? 1 : 0);
            if (++filled == 8) {
                out.push_back(static_cast<char>(acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>(acc << (8 - filled)));
    return out;
}

inline std::vector<std::vector<int>> refine_cells(const Graph& g) {
    std::vector<int> sig(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) sig[static_cast<std::size_t>(v)] = g.degree(v);
    for (int round = 0; round < g.n; ++round) {
        // signature := (old signature, sorted neighbor signatures)
        std::vector<std::vector<int>> key(static_cast<std::size_t>(g.n));
        for (int v = 0; v < g.n; ++v) {
            auto& kv = key[static_cast<std::size_t>(v)];
            kv.push_back(sig[static_cast<std::size_t>(v)]);
            for (int u = 0; u < g.n; ++u)
                if (g.has_edge(v, u)) kv.push_back(sig[static_cast<std::size_t>(u)]);
            std::sort(kv.begin() + 1, kv.end());
        }
        std::vector<std::vector<int>> uniq = key;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::vector<int> next(static_cast<std::size_t>(g.n));
        for (int v = 0; v < g.n; ++v)
            next[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(uniq.begin(), uniq.end(), key[static_cast<std::size_t>(v)]) -
                uniq.begin());
        if (next == sig) break;
        sig = std::move(next);
    }
    int cells = *std::max_element(sig.begin(), sig.end()) + 1;
    std::vector<std::vector<int>> out(static_cast<std::size_t>(cells));
    for (int v = 0; v < g.n; ++v) out[static_cast<std::size_t>(sig[static_cast<std::size_t>(v)])].push_back(v);
    return out;
}

inline void canon_search(const Graph& g, std::vector<std::vector<int>>& cells, std::size_t cell,
                         std::vector<int>& order, std::string& best) {
    if (cell == cells.size()) {
        std::string code = encode_with_order(g, order);
        if (best.empty() || code < best) best = std::move(code);
        return;
    }
    auto& members = cells[cell];
    std::sort(members.begin(), members.end());
    do {
        std::size_t base = order.size();
        order.insert(order.end(), members.begin(), members.end());
        canon_search(g, cells, cell + 1, order, best);
        order.resize(base);
    } while (std::next_permutation(members.begin(), members.end()));
}

}  // namespace detail

inline std::string canonical_code(const Graph& g) {
    if (g.n > kMaxCanonOrder)
        throw std::invalid_argument("canonical_code: order too large for exhaustive canonization");
    auto cells = detail::refine_cells(g);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(g.n));
    std::string best;
    detail::canon_search(g, cells, 0, order, best);
    return best;
}

// Identity-order encoding; a graph is the canonical representative of its
// isomorphism class iff this equals canonical_code.
inline std::string identity_code(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.n));
    std::iota(order.begin(), order.end(), 0);
    return detail::encode_with_order(g, order);
}

}  // namespace dlspectra
