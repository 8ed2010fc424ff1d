#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlspectra/checks.hpp"
#include "dlspectra/graph6.hpp"
#include "dlspectra/parallel.hpp"

namespace dlspectra {

constexpr int kMaxBuiltinEnumeration = 8;

namespace detail {

// Decode an upper-triangle edge mask (row-major pair order) into a graph.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g;
    g.n = n;
    g.adj.assign(static_cast<std::size_t>(n), 0);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1u) {
                g.adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                g.adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
            }
    return g;
}

inline bool degrees_ascending(const Graph& g) {
    for (int v = 0; v + 1 < g.n; ++v)
        if (g.degree(v) > g.degree(v + 1)) return false;
    return true;
}

}  // namespace detail

// Every connected graph of order n, one representative per isomorphism
// class, ordered by adjacency mask. A mask is emitted iff it is its own
// canonical form, so no cross-shard deduplication state is needed and the
// output is identical for any thread count.
inline std::vector<Graph> enumerate_connected(int n, int threads = 1) {
    if (n < 1) throw std::invalid_argument("enumerate: order must be positive");
    if (n > kMaxBuiltinEnumeration)
        throw std::invalid_argument(
            "enumerate: builtin enumeration is capped at order 8; pipe a graph6 stream instead");
    if (n == 1) return {detail::graph_from_mask(1, 0)};

    const int bits = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << bits;
    const int nthreads = resolve_thread_count(threads);
    const std::uint64_t shards = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(nthreads) * 16);
    const std::uint64_t chunk = (total + shards - 1) / shards;

    std::vector<std::vector<Graph>> found(static_cast<std::size_t>(shards));
    parallel_for(static_cast<std::size_t>(shards), nthreads, [&](std::size_t shard) {
        const std::uint64_t begin = shard * chunk;
        const std::uint64_t end = std::min(total, begin + chunk);
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            Graph g = detail::graph_from_mask(n, mask);
            if (!detail::degrees_ascending(g)) continue;
            if (!is_connected(g)) continue;
            if (identity_code(g) == canonical_code(g)) found[shard].push_back(std::move(g));
        }
    });
    std::vector<Graph> out;
    for (auto& part : found)
        out.insert(out.end(), part.begin(), part.end());
    return out;
}

// One graph attaining equality in one of the open problems, with enough
// data to re-verify from the graph6 string alone.
struct EqualityFinding {
    std::string problem;  // "P1" | "P2" | "P3"
    std::string graph6;
    int n = 0;
    int alpha = 0;
    int chi = 0;
    int gamma = 0;
    int count = 0;  // eigenvalues in the problem interval
    int bound = 0;  // the value equality is measured against
};

// P1: m[n, n+alpha) = n - alpha
// P2: m[n, n+2)     = chi - 1
// P3: m(2n-1, 2n)   = alpha - 1 = n/2 - 1, diameter >= min_diameter
inline std::optional<EqualityFinding> equality_case(const std::string& problem,
                                                    const GraphAnalysis& a,
                                                    int min_diameter = 0) {
    const int n = a.g.n;
    int count = 0, bound = 0;
    bool hit = false;
    if (problem == "P1") {
        bound = n - a.params.alpha;
        count = count_in_interval(a.dl, IntervalQuery::half_open(Rat(n), Rat(n + a.params.alpha)));
        hit = (count == bound);
    } else if (problem == "P2") {
        bound = a.params.chi - 1;
        count = count_in_interval(a.dl, IntervalQuery::half_open(Rat(n), Rat(n + 2)));
        hit = (count == bound);
    } else if (problem == "P3") {
        bound = a.params.alpha - 1;
        count = count_in_interval(a.dl, IntervalQuery::open(Rat(2 * n - 1), Rat(2 * n)));
        hit = (count == bound) && (2 * a.params.alpha == n);
    } else {
        throw std::invalid_argument("unknown problem id: " + problem);
    }
    if (a.params.diameter < min_diameter) hit = false;
    if (!hit) return std::nullopt;
    EqualityFinding f;
    f.problem = problem;
    f.graph6 = to_graph6(a.g);
    f.n = n;
    f.alpha = a.params.alpha;
    f.chi = a.params.chi;
    f.gamma = a.params.gamma;
    f.count = count;
    f.bound = bound;
    return f;
}

inline std::vector<EqualityFinding> find_equality_cases(const std::string& problem,
                                                        const std::vector<Graph>& graphs,
                                                        int min_diameter = 0, int threads = 1) {
    std::vector<std::optional<EqualityFinding>> slots(graphs.size());
    parallel_for(graphs.size(), resolve_thread_count(threads), [&](std::size_t i) {
        slots[i] = equality_case(problem, analyze(graphs[i]), min_diameter);
    });
    std::vector<EqualityFinding> out;
    for (auto& s : slots)
        if (s) out.push_back(std::move(*s));
    return out;
}

}  // namespace dlspectra
