#include <catch2/catch_amalgamated.hpp>

#include "dlspectra/checks.hpp"
#include "dlspectra/eigen.hpp"
#include "dlspectra/families.hpp"
#include "dlspectra/search.hpp"

using namespace dlspectra;

namespace {

bool spectrum_matches_exactly(const ClosedFormSpectrum& s, const CharPoly& cp) {
    int total = 0;
    for (const auto& [value, mult] : s.pairs) {
        if (multiplicity_at(cp, value) != mult) return false;
        total += mult;
    }
    return total == cp.poly.degree();
}

bool spectrum_matches_numerically(const ClosedFormSpectrum& s, const IntSymMatrix& m,
                                  double tol = 1e-8) {
    auto expect = s.expand_descending();
    auto got = jacobi_eigenvalues(m);
    if (expect.size() != got.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (std::abs(expect[i] - got[i]) > tol) return false;
    return true;
}

void all_partitions_rec(int n, int max_part, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
    if (n == 0) {
        if (cur.size() >= 2) out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        all_partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions_with_two_parts(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    all_partitions_rec(n, n, cur, out);
    return out;
}

}  // namespace

TEST_CASE("family constructors") {
    CHECK(complete_graph(3).edge_count() == 3);
    CHECK(star_graph(4).edge_count() == 3);
    CHECK(star_graph(4).degree(0) == 3);
    Graph c5 = cycle_graph(5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(complete_graph(0), std::invalid_argument);
}

TEST_CASE("complete multipartite constructor") {
    CHECK(canonical_code(complete_multipartite(PartiteSpec({2, 2}))) ==
          canonical_code(cycle_graph(4)));
    Graph k211 = complete_multipartite(PartiteSpec({2, 1, 1}));
    CHECK(k211.edge_count() == 5);  // K4 minus one edge
    CHECK(complement_components(k211) == 3);
    CHECK(complete_multipartite(PartiteSpec({3, 2})).edge_count() == 6);
    CHECK_THROWS_AS(complete_multipartite(PartiteSpec({4})), std::invalid_argument);
}

TEST_CASE("complete split constructor") {
    Graph sk52 = complete_split(5, 2);
    CHECK(sk52.edge_count() == 3 + 6);  // clique K3 plus full join to 2 vertices
    CHECK(canonical_code(complete_split(5, 1)) == canonical_code(complete_graph(5)));
    CHECK(canonical_code(complete_split(5, 4)) == canonical_code(star_graph(5)));
    CHECK_THROWS_AS(complete_split(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(complete_split(5, 0), std::invalid_argument);
}

TEST_CASE("corona constructor") {
    Graph k1 = complete_graph(1);
    CHECK(canonical_code(corona(complete_graph(2), k1)) == canonical_code(path_graph(4)));
    CHECK(canonical_code(corona(k1, k1)) == canonical_code(complete_graph(2)));
    Graph net = corona(cycle_graph(3), k1);
    CHECK(net.n == 6);
    CHECK(pendant_vertices(net).size() == 3);
}

TEST_CASE("corona with a single-vertex attachment: pendants and independence") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_connected(n)) {
            Graph c = corona(g, complete_graph(1));
            // K1 o K1 = K2 has two pendants; otherwise exactly the copies
            CHECK(static_cast<int>(pendant_vertices(c).size()) == (n == 1 ? 2 : n));
            CHECK(independence_number(c) == n);
        }
}

TEST_CASE("multipartite closed form instances") {
    ClosedFormSpectrum s = multipartite_spectrum(PartiteSpec({2, 2}));
    REQUIRE(s.pairs.size() == 3);
    CHECK(s.pairs[0] == std::pair<Rat, int>{Rat(6), 2});
    CHECK(s.pairs[1] == std::pair<Rat, int>{Rat(4), 1});
    CHECK(s.pairs[2] == std::pair<Rat, int>{Rat(0), 1});

    // two nearly balanced parts on odd order: {0, n, (3n+1)/2, (3n-1)/2}
    for (int m : {2, 3, 4}) {
        const int n = 2 * m + 1;
        ClosedFormSpectrum t = multipartite_spectrum(PartiteSpec({m + 1, m}));
        REQUIRE(t.pairs.size() == 4);
        CHECK(t.pairs[0] == std::pair<Rat, int>{Rat(3 * n + 1) / 2, (n - 1) / 2});
        CHECK(t.pairs[1] == std::pair<Rat, int>{Rat(3 * n - 1) / 2, (n - 3) / 2});
        CHECK(t.pairs[2] == std::pair<Rat, int>{Rat(n), 1});
        CHECK(t.pairs[3] == std::pair<Rat, int>{Rat(0), 1});
    }

    // one doubled vertex on the complete graph: {0, n^(n-2), n+2}
    for (int n : {4, 6, 9}) {
        std::vector<int> parts{2};
        parts.insert(parts.end(), static_cast<std::size_t>(n - 2), 1);
        ClosedFormSpectrum t = multipartite_spectrum(PartiteSpec(parts));
        REQUIRE(t.pairs.size() == 3);
        CHECK(t.pairs[0] == std::pair<Rat, int>{Rat(n + 2), 1});
        CHECK(t.pairs[1] == std::pair<Rat, int>{Rat(n), n - 2});
        CHECK(t.pairs[2] == std::pair<Rat, int>{Rat(0), 1});
    }
}

TEST_CASE("star closed form") {
    ClosedFormSpectrum s = star_spectrum(4);
    REQUIRE(s.pairs.size() == 3);
    CHECK(s.pairs[0] == std::pair<Rat, int>{Rat(7), 2});
    CHECK(s.pairs[1] == std::pair<Rat, int>{Rat(4), 1});
    CHECK(s.pairs[2] == std::pair<Rat, int>{Rat(0), 1});

    s = star_spectrum(2);
    REQUIRE(s.pairs.size() == 2);  // the 2n-1 block is empty
    CHECK(s.pairs[0] == std::pair<Rat, int>{Rat(2), 1});

    s = star_spectrum(10);
    CHECK(s.pairs[0] == std::pair<Rat, int>{Rat(19), 8});
    CHECK(s.pairs[1] == std::pair<Rat, int>{Rat(10), 1});
}

TEST_CASE("complete split closed form") {
    ClosedFormSpectrum s = complete_split_spectrum(5, 2);
    REQUIRE(s.pairs.size() == 3);
    CHECK(s.pairs[0] == std::pair<Rat, int>{Rat(7), 1});
    CHECK(s.pairs[1] == std::pair<Rat, int>{Rat(5), 3});
    CHECK(s.pairs[2] == std::pair<Rat, int>{Rat(0), 1});

    // alpha = 1 degenerates to the complete graph spectrum
    s = complete_split_spectrum(7, 1);
    REQUIRE(s.pairs.size() == 2);
    CHECK(s.pairs[0] == std::pair<Rat, int>{Rat(7), 6});

    // alpha = n-1 degenerates to the star spectrum
    CHECK(complete_split_spectrum(6, 5).pairs == star_spectrum(6).pairs);
}

TEST_CASE("balanced multipartite closed form") {
    ClosedFormSpectrum s = balanced_multipartite_spectrum(6, 3);
    REQUIRE(s.pairs.size() == 3);
    CHECK(s.pairs[0] == std::pair<Rat, int>{Rat(8), 3});
    CHECK(s.pairs[1] == std::pair<Rat, int>{Rat(6), 2});
    CHECK(s.pairs[2] == std::pair<Rat, int>{Rat(0), 1});

    CHECK(balanced_multipartite_spectrum(4, 2).pairs ==
          multipartite_spectrum(PartiteSpec({2, 2})).pairs);
    // chi = n: parts of size one, the complete graph
    ClosedFormSpectrum kn = balanced_multipartite_spectrum(5, 5);
    REQUIRE(kn.pairs.size() == 2);
    CHECK(kn.pairs[0] == std::pair<Rat, int>{Rat(5), 4});
    CHECK_THROWS_AS(balanced_multipartite_spectrum(7, 3), std::invalid_argument);
}

TEST_CASE("closed form spectra shape invariants") {
    for (int n = 2; n <= 10; ++n) {
        for (const auto& parts : partitions_with_two_parts(n)) {
            ClosedFormSpectrum s = multipartite_spectrum(PartiteSpec(parts));
            CHECK(s.order() == n);
            bool has_zero = false;
            for (const auto& [v, m] : s.pairs) {
                if (v == 0) {
                    has_zero = true;
                    CHECK(m == 1);
                } else {
                    CHECK(v >= n);
                }
            }
            CHECK(has_zero);
        }
    }
}

TEST_CASE("closed forms match the exact engine and the numeric engine") {
    for (int n = 2; n <= 10; ++n) {
        for (const auto& parts : partitions_with_two_parts(n)) {
            Graph g = complete_multipartite(PartiteSpec(parts));
            IntSymMatrix m = distance_laplacian(g);
            CharPoly cp = char_poly(m);
            ClosedFormSpectrum s = multipartite_spectrum(PartiteSpec(parts));
            REQUIRE(spectrum_matches_exactly(s, cp));
            REQUIRE(spectrum_matches_numerically(s, m));
        }
        if (n >= 2) {
            Graph g = star_graph(n);
            REQUIRE(spectrum_matches_exactly(star_spectrum(n), char_poly(distance_laplacian(g))));
        }
        for (int alpha = 1; alpha <= n - 1; ++alpha) {
            Graph g = complete_split(n, alpha);
            IntSymMatrix m = distance_laplacian(g);
            REQUIRE(spectrum_matches_exactly(complete_split_spectrum(n, alpha), char_poly(m)));
            REQUIRE(spectrum_matches_numerically(complete_split_spectrum(n, alpha), m));
        }
        for (int chi = 2; chi <= n; ++chi) {
            if (n % chi != 0) continue;
            std::vector<int> parts(static_cast<std::size_t>(chi), n / chi);
            Graph g = complete_multipartite(PartiteSpec(parts));
            REQUIRE(spectrum_matches_exactly(balanced_multipartite_spectrum(n, chi),
                                             char_poly(distance_laplacian(g))));
        }
    }
}

TEST_CASE("corona laplacian spectrum: exact instances") {
    // K1 o K1 = K2: laplacian spectrum {0, 2}
    auto vals = corona_laplacian_spectrum({Rat(0)}, 1, {Rat(0)});
    REQUIRE(vals.size() == 2);
    CHECK(vals[0].is_rational());
    CHECK(vals[0].compare(Rat(0)) == 0);
    CHECK(vals[1].compare(Rat(2)) == 0);

    // K2 o K1 = P4: {0, 2, 2 +- sqrt(2)}
    vals = corona_laplacian_spectrum({Rat(0), Rat(2)}, 1, {Rat(0)});
    REQUIRE(vals.size() == 4);
    CHECK(vals[0].compare(Rat(0)) == 0);
    CHECK_THAT(vals[1].to_double(), Catch::Matchers::WithinAbs(2.0 - std::sqrt(2.0), 1e-12));
    CHECK(vals[2].compare(Rat(2)) == 0);
    CHECK_THAT(vals[3].to_double(), Catch::Matchers::WithinAbs(2.0 + std::sqrt(2.0), 1e-12));
    // exact classification against the rational endpoint 2
    CHECK(vals[1].compare(Rat(2)) < 0);
    CHECK(vals[3].compare(Rat(2)) > 0);

    auto numeric = jacobi_eigenvalues(laplacian(path_graph(4)));
    std::sort(numeric.begin(), numeric.end());
    for (std::size_t i = 0; i < numeric.size(); ++i)
        CHECK_THAT(vals[i].to_double(), Catch::Matchers::WithinAbs(numeric[i], 1e-8));
}

TEST_CASE("corona laplacian spectrum: triangle with pendants cross-check") {
    // C3 o K1; the formula output is cross-checked against a numeric
    // eigensolve of the constructed graph, never asserted by hand
    auto vals = corona_laplacian_spectrum({Rat(0), Rat(3), Rat(3)}, 1, {Rat(0)});
    REQUIRE(vals.size() == 6);
    Graph net = corona(cycle_graph(3), complete_graph(1));
    auto numeric = jacobi_eigenvalues(laplacian(net));
    std::sort(numeric.begin(), numeric.end());
    for (std::size_t i = 0; i < numeric.size(); ++i)
        CHECK_THAT(vals[i].to_double(), Catch::Matchers::WithinAbs(numeric[i], 1e-8));
}

TEST_CASE("corona of a connected base splits around 1") {
    // for H o K1 every factor eigenvalue pair straddles 1: exactly n1 - 1
    // corona eigenvalues in (0, 1), decided exactly
    for (int n : {2, 3, 4, 5}) {
        std::vector<Rat> mu{Rat(0)};
        for (int i = 0; i < n - 1; ++i) mu.push_back(Rat(n));  // complete graph laplacian
        auto vals = corona_laplacian_spectrum(mu, 1, {Rat(0)});
        int inside = 0;
        for (const auto& v : vals)
            if (v.compare(Rat(0)) > 0 && v.compare(Rat(1)) < 0) ++inside;
        CHECK(inside == n - 1);
    }
}

TEST_CASE("corona laplacian numeric agrees with assembled graphs") {
    std::vector<Graph> attachments = {complete_graph(1), complete_graph(2), path_graph(3)};
    for (int n = 1; n <= 4; ++n) {
        for (const Graph& base : enumerate_connected(n)) {
            for (const Graph& h : attachments) {
                auto mu = jacobi_eigenvalues(laplacian(base));
                auto lam = jacobi_eigenvalues(laplacian(h));
                std::sort(mu.begin(), mu.end());
                std::sort(lam.begin(), lam.end());
                auto predicted = corona_laplacian_numeric(mu, h.n, lam);
                auto actual = jacobi_eigenvalues(laplacian(corona(base, h)));
                std::sort(actual.begin(), actual.end());
                REQUIRE(predicted.size() == actual.size());
                for (std::size_t i = 0; i < actual.size(); ++i)
                    REQUIRE_THAT(predicted[i], Catch::Matchers::WithinAbs(actual[i], 1e-8));
            }
        }
    }
}
