#pragma once

#include <stdexcept>
#include <string>

#include "dlspectra/graph.hpp"

namespace dlspectra {

// graph6 text codec, single-byte header form (n <= 62), bit-compatible with
// nauty/geng output. Upper-triangle bits run column-major: (0,1), (0,2),
// (1,2), (0,3), ... packed six per byte, each byte offset by 63.
struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Graph parse_graph6(const std::string& s) {
    if (s.empty()) throw Graph6Error("graph6: empty input");
    const unsigned char head = static_cast<unsigned char>(s[0]);
    if (head == 126) throw Graph6Error("graph6: orders above 62 are not supported");
    if (head < 63 || head > 125) throw Graph6Error("graph6: invalid header byte");
    const int n = head - 63;
    if (n == 0) throw Graph6Error("graph6: empty graph order");

    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (s.size() < 1 + nbytes) throw Graph6Error("graph6: truncated input");
    if (s.size() > 1 + nbytes) throw Graph6Error("graph6: trailing garbage");

    Graph g;
    g.n = n;
    g.adj.assign(static_cast<std::size_t>(n), 0);
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            const unsigned char c = static_cast<unsigned char>(s[1 + bit / 6]);
            if (c < 63 || c > 126) throw Graph6Error("graph6: invalid data byte");
            const int b = (c - 63) >> (5 - static_cast<int>(bit % 6)) & 1;
            if (b) {
                g.adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
                g.adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
            }
        }
    }
    return g;
}

inline std::string to_graph6(const Graph& g) {
    if (g.n < 1 || g.n > 62) throw Graph6Error("graph6: order must be in [1,62]");
    const std::size_t nbits = static_cast<std::size_t>(g.n) * (g.n - 1) / 2;
    std::string out;
    out.reserve(1 + (nbits + 5) / 6);
    out.push_back(static_cast<char>(g.n + 63));
    int acc = 0, filled = 0;
    for (int v = 1; v < g.n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

}  // namespace dlspectra
