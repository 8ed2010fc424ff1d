#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dlspectra {

constexpr int kMaxVertices = 64;

// Simple undirected graph on at most 64 vertices. One machine word per
// adjacency row, so neighborhood operations are single AND/popcount steps.
// Immutable by convention once built: every algorithm in this library takes
// a const reference and no member mutates after construction.
struct Graph {
    int n = 0;
    std::vector<std::uint64_t> adj;  // adj[i] bit j set iff {i,j} is an edge

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    int degree(int v) const { return std::popcount(adj[v]); }

    int edge_count() const {
        int total = 0;
        for (int i = 0; i < n; ++i) total += degree(i);
        return total / 2;
    }

    std::uint64_t vertex_mask() const {
        return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    }

    bool operator==(const Graph& other) const = default;
};

inline Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n <= 0) throw std::invalid_argument("graph order must be positive");
    if (n > kMaxVertices) throw std::invalid_argument("graph order exceeds 64");
    Graph g;
    g.n = n;
    g.adj.assign(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        g.adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        g.adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return g;
}

// BFS reachability over a vertex subset given as a bitmask. Used both for
// whole-graph connectivity and for induced-subgraph connectivity.
inline bool is_connected_subset(const Graph& g, std::uint64_t subset) {
    if (subset == 0) return false;
    std::uint64_t start = subset & (~subset + 1);  // lowest set bit
    std::uint64_t seen = start, frontier = start;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.adj[static_cast<std::size_t>(v)] & subset;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == subset;
}

inline bool is_connected(const Graph& g) {
    return is_connected_subset(g, g.vertex_mask());
}

inline Graph complement(const Graph& g) {
    Graph c;
    c.n = g.n;
    c.adj.resize(g.adj.size());
    const std::uint64_t all = g.vertex_mask();
    for (int v = 0; v < g.n; ++v)
        c.adj[static_cast<std::size_t>(v)] =
            (~g.adj[static_cast<std::size_t>(v)] & all) & ~(std::uint64_t{1} << v);
    return c;
}

// Number of connected components (of the graph itself, not its complement).
inline int component_count(const Graph& g) {
    std::uint64_t remaining = g.vertex_mask();
    int components = 0;
    while (remaining) {
        std::uint64_t start = remaining & (~remaining + 1);
        std::uint64_t seen = start, frontier = start;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.adj[static_cast<std::size_t>(v)];
            }
            frontier = next & ~seen;
            seen |= next;
        }
        remaining &= ~seen;
        ++components;
    }
    return components;
}

inline int complement_components(const Graph& g) {
    return component_count(complement(g));
}

// All-pairs shortest paths of a connected graph plus the derived transmission
// data every distance-Laplacian computation starts from.
struct DistanceData {
    std::vector<std::vector<int>> dist;
    std::vector<int> tr;  // tr[v] = sum of distances from v
    int diameter = 0;
    int tr_max = 0;
};

inline DistanceData apsp(const Graph& g) {
    DistanceData d;
    d.dist.assign(static_cast<std::size_t>(g.n), std::vector<int>(static_cast<std::size_t>(g.n), -1));
    d.tr.assign(static_cast<std::size_t>(g.n), 0);
    for (int s = 0; s < g.n; ++s) {
        auto& row = d.dist[static_cast<std::size_t>(s)];
        row[static_cast<std::size_t>(s)] = 0;
        std::uint64_t seen = std::uint64_t{1} << s;
        std::uint64_t frontier = seen;
        int level = 0;
        while (frontier) {
            ++level;
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.adj[static_cast<std::size_t>(v)];
            }
            next &= ~seen;
            std::uint64_t q = next;
            while (q) {
                int v = std::countr_zero(q);
                q &= q - 1;
                row[static_cast<std::size_t>(v)] = level;
            }
            seen |= next;
            frontier = next;
        }
        if (seen != g.vertex_mask())
            throw std::invalid_argument("apsp requires a connected graph");
        int sum = 0, mx = 0;
        for (int v = 0; v < g.n; ++v) {
            sum += row[static_cast<std::size_t>(v)];
            if (row[static_cast<std::size_t>(v)] > mx) mx = row[static_cast<std::size_t>(v)];
        }
        d.tr[static_cast<std::size_t>(s)] = sum;
        if (sum > d.tr_max) d.tr_max = sum;
        if (mx > d.diameter) d.diameter = mx;
    }
    return d;
}

inline std::vector<int> pendant_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

// A maximal set of vertices sharing one open neighborhood. Such vertices are
// pairwise non-adjacent and share one transmission value.
struct TwinClass {
    std::vector<int> vertices;
    int transmission = 0;
};

// Classes of size >= 2 only, ordered by smallest member.
inline std::vector<TwinClass> twin_pendant_classes(const Graph& g, const DistanceData& d) {
    std::vector<TwinClass> out;
    std::uint64_t assigned = 0;
    for (int v = 0; v < g.n; ++v) {
        if ((assigned >> v) & 1u) continue;
        TwinClass cls;
        cls.vertices.push_back(v);
        for (int u = v + 1; u < g.n; ++u)
            if (g.adj[static_cast<std::size_t>(u)] == g.adj[static_cast<std::size_t>(v)])
                cls.vertices.push_back(u);
        if (cls.vertices.size() >= 2) {
            for (int u : cls.vertices) assigned |= std::uint64_t{1} << u;
            cls.transmission = d.tr[static_cast<std::size_t>(v)];
            out.push_back(std::move(cls));
        }
    }
    return out;
}

}  // namespace dlspectra
