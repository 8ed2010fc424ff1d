#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dlspectra/eigen.hpp"
#include "dlspectra/invariants.hpp"

namespace dlspectra {

// Result of one check on one graph. A check whose hypotheses fail reports
// applicable=false (and holds=true vacuously) so sharpness statistics only
// aggregate graphs the claim actually covers. An applicable check with
// holds=false is a falsification and should stop any sweep.
struct CheckReport {
    std::string id;
    bool applicable = false;
    bool holds = true;
    bool equality = false;
    Rat bound = 0;
    Rat attained = 0;
    std::string witness;
};

struct CheckInfo {
    std::string id;
    std::string hypothesis;
    std::string interval;
    std::string bound;
};

// Everything the checks need, computed once per graph.
struct GraphAnalysis {
    Graph g;
    DistanceData dist;
    GraphParams params;
    CharPoly dl;   // characteristic polynomial of the distance Laplacian
    CharPoly lap;  // characteristic polynomial of the Laplacian
};

inline GraphAnalysis analyze(const Graph& g) {
    GraphAnalysis a;
    a.g = g;
    a.dist = apsp(g);
    a.params = compute_params(g, a.dist);
    a.dl = char_poly(distance_laplacian(g, a.dist));
    a.lap = char_poly(laplacian(g));
    return a;
}

inline bool is_complete(const Graph& g) { return g.edge_count() == g.n * (g.n - 1) / 2; }

inline bool is_star(const Graph& g) {
    if (g.n < 2) return false;
    int centers = 0, leaves = 0;
    for (int v = 0; v < g.n; ++v) {
        int d = g.degree(v);
        if (d == g.n - 1) ++centers;
        else if (d == 1) ++leaves;
        else return false;
    }
    return centers >= 1 && centers + leaves == g.n;
}

// The common neighbor of all pendant vertices, provided every pendant
// attaches to the same non-pendant vertex.
inline std::optional<int> common_pendant_neighbor(const Graph& g) {
    auto pend = pendant_vertices(g);
    if (pend.empty()) return std::nullopt;
    int nb = -1;
    for (int v : pend) {
        int u = std::countr_zero(g.adj[static_cast<std::size_t>(v)]);
        if (nb == -1) nb = u;
        else if (nb != u) return std::nullopt;
    }
    if (g.degree(nb) == 1) return std::nullopt;  // neighbor inside the pendant set (K2)
    return nb;
}

namespace detail {

inline bool corona_match(const Graph& g, const std::vector<int>& pend, std::size_t idx,
                         std::uint64_t chosen, std::uint64_t matched, int need) {
    if (need == 0) {
        if ((chosen | matched) != g.vertex_mask()) return false;
        return is_connected_subset(g, g.vertex_mask() & ~chosen);
    }
    if (idx >= pend.size() || static_cast<int>(pend.size() - idx) < need) return false;
    const int v = pend[idx];
    const std::uint64_t vbit = std::uint64_t{1} << v;
    const int nb = std::countr_zero(g.adj[static_cast<std::size_t>(v)]);
    const std::uint64_t nbit = std::uint64_t{1} << nb;
    if (!(matched & vbit) && !(chosen & nbit) && !(matched & nbit))
        if (corona_match(g, pend, idx + 1, chosen | vbit, matched | nbit, need - 1)) return true;
    return corona_match(g, pend, idx + 1, chosen, matched, need);
}

}  // namespace detail

// Does g decompose as H o K1 for a connected H? Tries every matching of
// pendant vertices to their neighbors that covers the vertex set; the
// unmatched side must induce a connected graph.
inline bool is_corona_of_k1(const Graph& g) {
    if (g.n % 2 != 0) return false;
    auto pend = pendant_vertices(g);
    return detail::corona_match(g, pend, 0, 0, 0, g.n / 2);
}

// Is g a complete multipartite graph with `parts` classes of equal size?
// Equivalent test on the complement: disjoint cliques of that size.
inline bool is_balanced_multipartite(const Graph& g, int parts) {
    if (parts < 1 || g.n % parts != 0) return false;
    const int size = g.n / parts;
    Graph c = complement(g);
    std::uint64_t remaining = c.vertex_mask();
    int found = 0;
    while (remaining) {
        std::uint64_t start = remaining & (~remaining + 1);
        // component of the complement containing `start`
        std::uint64_t comp = start, frontier = start;
        while (frontier) {
            std::uint64_t next = 0, f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= c.adj[static_cast<std::size_t>(v)];
            }
            frontier = next & ~comp;
            comp |= next;
        }
        if (std::popcount(comp) != size) return false;
        std::uint64_t f = comp;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            if ((c.adj[static_cast<std::size_t>(v)] & comp) != (comp & ~(std::uint64_t{1} << v)))
                return false;  // component is not a clique
        }
        remaining &= ~comp;
        ++found;
    }
    return found == parts;
}

namespace detail {

// count_in_interval with an empty-interval guard for derived endpoints that
// can cross (e.g. [n+2, 2Tr_max] on very small graphs).
inline int safe_count(const CharPoly& p, const IntervalQuery& q) {
    if (q.lo && q.hi && *q.lo > *q.hi) return 0;
    return count_in_interval(p, q);
}

inline CheckReport not_applicable(const char* id) {
    CheckReport r;
    r.id = id;
    r.applicable = false;
    r.holds = true;
    return r;
}

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace detail

// --- individual checks -----------------------------------------------------

// Largest eigenvalue of the distance Laplacian is at most 2 Tr_max.
inline CheckReport check_c01(const GraphAnalysis& a) {
    CheckReport r;
    r.id = "C01_spectral_radius_bound";
    r.applicable = true;
    auto [bound, holds] = spectral_radius_bound(a.dist, a.dl);
    r.bound = Rat(bound);
    r.attained = Rat(count_in_interval(a.dl, IntervalQuery::open_above(Rat(bound))));
    r.holds = holds;
    r.equality = multiplicity_at(a.dl, Rat(bound)) > 0;
    return r;
}

// 0 is a simple eigenvalue and every other eigenvalue is at least n.
inline CheckReport check_c02(const GraphAnalysis& a) {
    CheckReport r;
    r.id = "C02_zero_and_floor";
    r.applicable = true;
    const int n = a.g.n;
    const int mult0 = multiplicity_at(a.dl, Rat(0));
    const int gap = count_in_interval(a.dl, IntervalQuery::open(Rat(0), Rat(n)));
    const int above = count_in_interval(a.dl, IntervalQuery::closed_above(Rat(n)));
    r.bound = 0;
    r.attained = Rat(gap);
    r.holds = (mult0 == 1) && (gap == 0) && (above == n - 1);
    return r;
}

// Multiplicity of n as an eigenvalue equals the number of components of the
// complement minus one.
inline CheckReport check_c03(const GraphAnalysis& a) {
    CheckReport r;
    r.id = "C03_complement_multiplicity";
    r.applicable = true;
    const int mult = multiplicity_at(a.dl, Rat(a.g.n));
    r.bound = Rat(a.params.complement_component_count - 1);
    r.attained = Rat(mult);
    r.holds = (r.attained == r.bound);
    r.equality = r.holds;
    return r;
}

// m[n, n+2) <= chi - 1.
inline CheckReport check_c06(const GraphAnalysis& a) {
    CheckReport r;
    r.id = "C06_chromatic_window";
    r.applicable = true;
    const int n = a.g.n;
    r.bound = Rat(a.params.chi - 1);
    r.attained = Rat(count_in_interval(a.dl, IntervalQuery::half_open(Rat(n), Rat(n + 2))));
    r.holds = r.attained <= r.bound;
    r.equality = r.attained == r.bound;
    return r;
}

// m[n+2, 2 Tr_max] >= n - chi.
inline CheckReport check_c07(const GraphAnalysis& a) {
    CheckReport r;
    r.id = "C07_chromatic_tail";
    r.applicable = true;
    const int n = a.g.n;
    r.bound = Rat(n - a.params.chi);
    r.attained = Rat(detail::safe_count(
        a.dl, IntervalQuery::closed(Rat(n + 2), Rat(2 * a.params.tr_max))));
    r.holds = r.attained >= r.bound;
    r.equality = r.attained == r.bound;
    return r;
}

// With a balanced optimal coloring: m[n, n + n/chi] <= n-1, equality exactly
// for the balanced complete multipartite graph.
inline CheckReport check_c08(const GraphAnalysis& a) {
    const int n = a.g.n, chi = a.params.chi;
    if (n % chi != 0 || !has_balanced_coloring(a.g, chi))
        return detail::not_applicable("C08_balanced_classes");
    CheckReport r;
    r.id = "C08_balanced_classes";
    r.applicable = true;
    const int s = n / chi;
    r.bound = Rat(n - 1);
    r.attained = Rat(count_in_interval(a.dl, IntervalQuery::closed(Rat(n), Rat(n + s))));
    r.equality = r.attained == r.bound;
    const bool balanced_mp = is_balanced_multipartite(a.g, chi);
    r.holds = (r.attained <= r.bound) && (r.equality == balanced_mp);
    if (balanced_mp) r.witness = "complete multipartite with equal parts";
    return r;
}

// m(n, n + ceil(n/chi)) <= n - ceil(n/chi) - C + 1, C the number of
// components of the complement.
inline CheckReport check_c09(const GraphAnalysis& a) {
    if (is_complete(a.g)) return detail::not_applicable("C09_ceil_window");
    CheckReport r;
    r.id = "C09_ceil_window";
    r.applicable = true;
    const int n = a.g.n;
    const int c = detail::ceil_div(n, a.params.chi);
    r.bound = Rat(n - c - a.params.complement_component_count + 1);
    r.attained = Rat(count_in_interval(a.dl, IntervalQuery::open(Rat(n), Rat(n + c))));
    r.holds = r.attained <= r.bound;
    r.equality = r.attained == r.bound;
    return r;
}

// m[n + ceil(n/chi), largest] >= ceil(n/chi) - 1.
inline CheckReport check_c10(const GraphAnalysis& a) {
    if (is_complete(a.g)) return detail::not_applicable("C10_ceil_tail");
    CheckReport r;
    r.id = "C10_ceil_tail";
    r.applicable = true;
    const int n = a.g.n;
    const int c = detail::ceil_div(n, a.params.chi);
    r.bound = Rat(c - 1);
    r.attained = Rat(count_in_interval(a.dl, IntervalQuery::closed_above(Rat(n + c))));
    r.holds = r.attained >= r.bound;
    r.equality = r.attained == r.bound;
    return r;
}

// Complement connected: m(n, n + ceil(n/chi)) <= n - ceil(n/chi).
inline CheckReport check_c11(const GraphAnalysis& a) {
    if (is_complete(a.g) || a.params.complement_component_count != 1)
        return detail::not_applicable("C11_ceil_connected_complement");
    CheckReport r;
    r.id = "C11_ceil_connected_complement";
    r.applicable = true;
    const int n = a.g.n;
    const int c = detail::ceil_div(n, a.params.chi);
    r.bound = Rat(n - c);
    r.attained = Rat(count_in_interval(a.dl, IntervalQuery::open(Rat(n), Rat(n + c))));
    r.holds = r.attained <= r.bound;
    r.equality = r.attained == r.bound;
    return r;
}

// p >= 1 pendant vertices: m[n, n+p) <= n-p; for p = n-1 equality exactly at
// the star.
inline CheckReport check_c12(const GraphAnalysis& a) {
    const int p = a.params.pendant_count();
    if (p < 1 || is_complete(a.g)) return detail::not_applicable("C12_pendant_window");
    CheckReport r;
    r.id = "C12_pendant_window";
    r.applicable = true;
    const int n = a.g.n;
    r.bound = Rat(n - p);
    r.attained = Rat(count_in_interval(a.dl, IntervalQuery::half_open(Rat(n), Rat(n + p))));
    r.holds = r.attained <= r.bound;
    r.equality = r.attained == r.bound;
    if (p == n - 1) r.holds = r.holds && (r.equality == is_star(a.g));
    return r;
}

// m[n+p, largest] >= p-1.
inline CheckReport check_c13(const GraphAnalysis& a) {
    const int p = a.params.pendant_count();
    if (p < 1 || is_complete(a.g)) return detail::not_applicable("C13_pendant_tail");
    CheckReport r;
    r.id = "C13_pendant_tail";
    r.applicable = true;
    const int n = a.g.n;
    r.bound = Rat(p - 1);
    r.attained = Rat(count_in_interval(a.dl, IntervalQuery::closed_above(Rat(n + p))));
    r.holds = r.attained >= r.bound;
    r.equality = r.attained == r.bound;
    if (p == n - 1) r.holds = r.holds && (r.equality == is_star(a.g));
    return r;
}

// Every class of >= 2 vertices sharing an open neighborhood contributes the
// eigenvalue Tr+2 with multiplicity at least class size - 1.
inline CheckReport check_c14(const GraphAnalysis& a) {
    auto classes = twin_pendant_classes(a.g, a.dist);
    if (classes.empty()) return detail::not_applicable("C14_twin_transmission");
    CheckReport r;
    r.id = "C14_twin_transmission";
    r.applicable = true;
    r.holds = true;
    std::size_t largest = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& cls = classes[i];
        const int need = static_cast<int>(cls.vertices.size()) - 1;
        const int mult = multiplicity_at(a.dl, Rat(cls.transmission + 2));
        if (mult < need) r.holds = false;
        if (cls.vertices.size() > classes[largest].vertices.size()) largest = i;
    }
    const auto& big = classes[largest];
    r.bound = Rat(static_cast<int>(big.vertices.size()) - 1);
    r.attained = Rat(multiplicity_at(a.dl, Rat(big.transmission + 2)));
    r.equality = r.attained == r.bound;
    r.witness = "twin classes: " + std::to_string(classes.size());
    return r;
}

namespace detail {

inline CheckReport shared_neighbor_window(const GraphAnalysis& a, const char* id, int hi_offset,
                                          bool strong_hypothesis) {
    const int n = a.g.n;
    const int p = a.params.pendant_count();
    auto nb = common_pendant_neighbor(a.g);
    bool applicable = p >= 1 && nb.has_value();
    if (strong_hypothesis) applicable = applicable && n >= 4 && 2 * p >= n;
    if (!applicable) return not_applicable(id);
    CheckReport r;
    r.id = id;
    r.applicable = true;
    r.bound = strong_hypothesis ? Rat(n - a.params.chi) : Rat(n - p);
    r.attained =
        Rat(safe_count(a.dl, IntervalQuery::half_open(Rat(n), Rat(2 * n - hi_offset))));
    r.holds = r.attained <= r.bound;
    r.equality = r.attained == r.bound;
    return r;
}

}  // namespace detail

// All pendants on one neighbor, p >= n/2, n >= 4: m[n, 2n-1) <= n - chi.
inline CheckReport check_c15(const GraphAnalysis& a) {
    return detail::shared_neighbor_window(a, "C15_shared_neighbor_pendants", 1, true);
}

// Companion variant on the narrower window [n, 2n-3); recorded alongside C15.
inline CheckReport check_c15s(const GraphAnalysis& a) {
    return detail::shared_neighbor_window(a, "C15s_shared_neighbor_pendants_strict", 3, true);
}

// All pendants on one neighbor (no size constraints): m[n, 2n-1) <= n - p.
inline CheckReport check_c16(const GraphAnalysis& a) {
    return detail::shared_neighbor_window(a, "C16_shared_neighbor_relaxed", 1, false);
}

// m[n, n+alpha) <= n - alpha; equality forced at alpha = 1 (complete) and
// alpha = n-1 (star).
inline CheckReport check_c17(const GraphAnalysis& a) {
    CheckReport r;
    r.id = "C17_independence_window";
    r.applicable = true;
    const int n = a.g.n, alpha = a.params.alpha;
    r.bound = Rat(n - alpha);
    r.attained = Rat(count_in_interval(a.dl, IntervalQuery::half_open(Rat(n), Rat(n + alpha))));
    r.holds = r.attained <= r.bound;
    r.equality = r.attained == r.bound;
    if (alpha == 1) r.holds = r.holds && r.equality && is_complete(a.g);
    if (alpha == n - 1 && n >= 2) r.holds = r.holds && r.equality && is_star(a.g);
    return r;
}

// alpha <= 1 + m[n+alpha, 2 Tr_max].
inline CheckReport check_c18(const GraphAnalysis& a) {
    CheckReport r;
    r.id = "C18_independence_tail";
    r.applicable = true;
    const int n = a.g.n, alpha = a.params.alpha;
    const int tail = detail::safe_count(
        a.dl, IntervalQuery::closed(Rat(n + alpha), Rat(2 * a.params.tr_max)));
    r.bound = Rat(1 + tail);
    r.attained = Rat(alpha);
    r.holds = r.attained <= r.bound;
    r.equality = r.attained == r.bound;
    return r;
}

// m(n, n+alpha) <= n - alpha + 1 - k, k components of the complement.
inline CheckReport check_c19(const GraphAnalysis& a) {
    CheckReport r;
    r.id = "C19_independence_open_window";
    r.applicable = true;
    const int n = a.g.n, alpha = a.params.alpha;
    r.bound = Rat(n - alpha + 1 - a.params.complement_component_count);
    r.attained = Rat(count_in_interval(a.dl, IntervalQuery::open(Rat(n), Rat(n + alpha))));
    r.holds = r.attained <= r.bound;
    r.equality = r.attained == r.bound;
    if (alpha == 1 || alpha == n - 1) r.holds = r.holds && r.equality;
    return r;
}

// Diameter <= 2: m(2n-1, 2n) <= alpha - 1.
inline CheckReport check_c20(const GraphAnalysis& a) {
    if (a.params.diameter > 2) return detail::not_applicable("C20_diam2_window");
    CheckReport r;
    r.id = "C20_diam2_window";
    r.applicable = true;
    const int n = a.g.n;
    r.bound = Rat(a.params.alpha - 1);
    r.attained = Rat(count_in_interval(a.dl, IntervalQuery::open(Rat(2 * n - 1), Rat(2 * n))));
    r.holds = r.attained <= r.bound;
    r.equality = r.attained == r.bound;
    return r;
}

// Diameter <= 2 and alpha > n/2: m(2n-1, 2n) <= alpha - 2.
inline CheckReport check_c21(const GraphAnalysis& a) {
    if (a.params.diameter > 2 || 2 * a.params.alpha <= a.g.n)
        return detail::not_applicable("C21_diam2_large_alpha");
    CheckReport r;
    r.id = "C21_diam2_large_alpha";
    r.applicable = true;
    const int n = a.g.n;
    r.bound = Rat(a.params.alpha - 2);
    r.attained = Rat(count_in_interval(a.dl, IntervalQuery::open(Rat(2 * n - 1), Rat(2 * n))));
    r.holds = r.attained <= r.bound;
    r.equality = r.attained == r.bound;
    return r;
}

// Laplacian eigenvalues below 1 are at most the domination number.
inline CheckReport check_c22(const GraphAnalysis& a) {
    CheckReport r;
    r.id = "C22_laplacian_domination";
    r.applicable = true;
    r.bound = Rat(a.params.gamma);
    r.attained = Rat(count_in_interval(a.lap, IntervalQuery::half_open(Rat(0), Rat(1))));
    r.holds = r.attained <= r.bound;
    r.equality = r.attained == r.bound;
    return r;
}

// Diameter <= 2 equivalences around m(2n-1, 2n) = alpha - 1:
//  - (count = alpha-1 and alpha = n/2)  iff  g = H o K1, H connected;
//  - bipartite: (count = alpha-1)       iff  g = H o K1;
//  - bipartite and either side of the iff forces alpha = n/2 with n even.
inline CheckReport check_c23(const GraphAnalysis& a) {
    if (a.params.diameter > 2) return detail::not_applicable("C23_corona_characterization");
    CheckReport r;
    r.id = "C23_corona_characterization";
    r.applicable = true;
    const int n = a.g.n, alpha = a.params.alpha;
    const int count = count_in_interval(a.dl, IntervalQuery::open(Rat(2 * n - 1), Rat(2 * n)));
    const bool corona = is_corona_of_k1(a.g);
    const bool count_matches = (count == alpha - 1);
    const bool half = (2 * alpha == n);
    r.bound = Rat(alpha - 1);
    r.attained = Rat(count);
    r.equality = count_matches;
    r.holds = ((count_matches && half) == corona);
    if (a.params.bipartite) {
        r.holds = r.holds && (count_matches == corona);
        if (corona || count_matches)
            r.holds = r.holds && half && (n % 2 == 0);
    }
    r.witness = corona ? "decomposes as H o K1" : "no corona decomposition";
    return r;
}

// m[0, d*n] >= d + 1.
inline CheckReport check_c26(const GraphAnalysis& a) {
    CheckReport r;
    r.id = "C26_diameter_floor";
    r.applicable = true;
    const int n = a.g.n, d = a.params.diameter;
    r.bound = Rat(d + 1);
    r.attained = Rat(count_in_interval(a.dl, IntervalQuery::closed(Rat(0), Rat(d * n))));
    r.holds = r.attained >= r.bound;
    r.equality = r.attained == r.bound;
    return r;
}

// When d*n < 2 Tr_max: m(d*n, 2 Tr_max] <= n - d - 1.
inline CheckReport check_c27(const GraphAnalysis& a) {
    const int n = a.g.n, d = a.params.diameter;
    const int top = 2 * a.params.tr_max;
    if (d * n >= top) return detail::not_applicable("C27_diameter_tail");
    CheckReport r;
    r.id = "C27_diameter_tail";
    r.applicable = true;
    r.bound = Rat(n - d - 1);
    r.attained = Rat(count_in_interval(a.dl, {Rat(d * n), Rat(top), false, true}));
    r.holds = r.attained <= r.bound;
    r.equality = r.attained == r.bound;
    return r;
}

// --- registry ---------------------------------------------------------------

using CheckFn = CheckReport (*)(const GraphAnalysis&);

struct CheckEntry {
    CheckInfo info;
    CheckFn fn;
};

inline const std::vector<CheckEntry>& check_registry() {
    static const std::vector<CheckEntry> registry = {
        {{"C01_spectral_radius_bound", "connected", "(2*Tr_max, +inf)", "0 eigenvalues above"},
         &check_c01},
        {{"C02_zero_and_floor", "connected", "(0, n)", "0 eigenvalues inside; 0 simple"},
         &check_c02},
        {{"C03_complement_multiplicity", "connected", "[n, n]",
          "multiplicity = components(complement) - 1"},
         &check_c03},
        {{"C06_chromatic_window", "connected", "[n, n+2)", "chi - 1"}, &check_c06},
        {{"C07_chromatic_tail", "connected", "[n+2, 2*Tr_max]", ">= n - chi"}, &check_c07},
        {{"C08_balanced_classes", "chi divides n; some chi-coloring has equal class sizes",
          "[n, n + n/chi]", "n - 1 (equality iff balanced complete multipartite)"},
         &check_c08},
        {{"C09_ceil_window", "not complete", "(n, n + ceil(n/chi))",
          "n - ceil(n/chi) - components(complement) + 1"},
         &check_c09},
        {{"C10_ceil_tail", "not complete", "[n + ceil(n/chi), largest]", ">= ceil(n/chi) - 1"},
         &check_c10},
        {{"C11_ceil_connected_complement", "not complete; complement connected",
          "(n, n + ceil(n/chi))", "n - ceil(n/chi)"},
         &check_c11},
        {{"C12_pendant_window", "p >= 1 pendant vertices; not complete", "[n, n+p)",
          "n - p (p = n-1: equality iff star)"},
         &check_c12},
        {{"C13_pendant_tail", "p >= 1 pendant vertices; not complete", "[n+p, largest]",
          ">= p - 1"},
         &check_c13},
        {{"C14_twin_transmission", "some class of vertices sharing an open neighborhood",
          "[Tr+2, Tr+2]", "multiplicity >= class size - 1"},
         &check_c14},
        {{"C15_shared_neighbor_pendants",
          "n >= 4; all pendants share one neighbor; p >= n/2", "[n, 2n-1)", "n - chi"},
         &check_c15},
        {{"C15s_shared_neighbor_pendants_strict",
          "n >= 4; all pendants share one neighbor; p >= n/2", "[n, 2n-3)", "n - chi"},
         &check_c15s},
        {{"C16_shared_neighbor_relaxed", "all pendants share one neighbor; p >= 1",
          "[n, 2n-1)", "n - p"},
         &check_c16},
        {{"C17_independence_window", "connected", "[n, n+alpha)",
          "n - alpha (alpha in {1, n-1}: equality iff complete/star)"},
         &check_c17},
        {{"C18_independence_tail", "connected", "[n+alpha, 2*Tr_max]",
          "alpha <= 1 + count"},
         &check_c18},
        {{"C19_independence_open_window", "connected", "(n, n+alpha)",
          "n - alpha + 1 - components(complement)"},
         &check_c19},
        {{"C20_diam2_window", "diameter <= 2", "(2n-1, 2n)", "alpha - 1"}, &check_c20},
        {{"C21_diam2_large_alpha", "diameter <= 2; alpha > n/2", "(2n-1, 2n)", "alpha - 2"},
         &check_c21},
        {{"C22_laplacian_domination", "any graph (Laplacian spectrum)", "[0, 1)", "gamma"},
         &check_c22},
        {{"C23_corona_characterization", "diameter <= 2", "(2n-1, 2n)",
          "count = alpha-1 = n/2-1 iff H o K1"},
         &check_c23},
        {{"C26_diameter_floor", "connected", "[0, d*n]", ">= d + 1"}, &check_c26},
        {{"C27_diameter_tail", "d*n < 2*Tr_max", "(d*n, 2*Tr_max]", "n - d - 1"}, &check_c27},
    };
    return registry;
}

inline std::vector<CheckInfo> check_catalog() {
    std::vector<CheckInfo> out;
    for (const auto& e : check_registry()) out.push_back(e.info);
    return out;
}

inline CheckReport run_check(const std::string& id, const GraphAnalysis& a) {
    for (const auto& e : check_registry())
        if (e.info.id == id) return e.fn(a);
    throw std::invalid_argument("unknown check id: " + id);
}

inline std::vector<CheckReport> run_all(const GraphAnalysis& a) {
    std::vector<CheckReport> out;
    out.reserve(check_registry().size());
    for (const auto& e : check_registry()) out.push_back(e.fn(a));
    return out;
}

}  // namespace dlspectra
