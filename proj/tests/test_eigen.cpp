#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dlspectra/eigen.hpp"
#include "dlspectra/families.hpp"
#include "dlspectra/search.hpp"

using namespace dlspectra;

namespace {

std::vector<double> dl_eigenvalues(const Graph& g) {
    return jacobi_eigenvalues(distance_laplacian(g));
}

}  // namespace

TEST_CASE("jacobi on closed-form spectra") {
    auto k4 = dl_eigenvalues(complete_graph(4));
    REQUIRE(k4.size() == 4);
    CHECK_THAT(k4[0], Catch::Matchers::WithinAbs(4.0, 1e-10));
    CHECK_THAT(k4[2], Catch::Matchers::WithinAbs(4.0, 1e-10));
    CHECK_THAT(k4[3], Catch::Matchers::WithinAbs(0.0, 1e-10));

    auto s4 = dl_eigenvalues(star_graph(4));
    CHECK_THAT(s4[0], Catch::Matchers::WithinAbs(7.0, 1e-10));
    CHECK_THAT(s4[1], Catch::Matchers::WithinAbs(7.0, 1e-10));
    CHECK_THAT(s4[2], Catch::Matchers::WithinAbs(4.0, 1e-10));
    CHECK_THAT(s4[3], Catch::Matchers::WithinAbs(0.0, 1e-10));
}

TEST_CASE("jacobi matches the exact quartic roots on the path") {
    // distance Laplacian of the 4-path factors as x (x-6) (x^2 - 14x + 44),
    // so the eigenvalues are 7 +- sqrt(5), 6, 0
    auto p4 = dl_eigenvalues(path_graph(4));
    const double s5 = std::sqrt(5.0);
    CHECK_THAT(p4[0], Catch::Matchers::WithinAbs(7.0 + s5, 1e-10));
    CHECK_THAT(p4[1], Catch::Matchers::WithinAbs(6.0, 1e-10));
    CHECK_THAT(p4[2], Catch::Matchers::WithinAbs(7.0 - s5, 1e-10));
    CHECK_THAT(p4[3], Catch::Matchers::WithinAbs(0.0, 1e-10));

    CharPoly cp = char_poly(distance_laplacian(path_graph(4)));
    std::vector<Int> expect = {0, -264, 128, -20, 1};
    CHECK(cp.poly.c == expect);
}

TEST_CASE("interval counting on closed-form spectra") {
    CharPoly k22 = char_poly(distance_laplacian(complete_multipartite(PartiteSpec({2, 2}))));
    // spectrum {0, 4, 6, 6}
    CHECK(count_in_interval(k22, IntervalQuery::half_open(Rat(4), Rat(6))) == 1);
    CHECK(count_in_interval(k22, IntervalQuery::closed(Rat(4), Rat(6))) == 3);
    CHECK(count_in_interval(k22, IntervalQuery::open(Rat(4), Rat(6))) == 0);
    CHECK(count_in_interval(k22, {Rat(4), Rat(6), false, true}) == 2);
    CHECK(count_in_interval(k22, IntervalQuery::closed(Rat(4), Rat(4))) == 1);
    CHECK(count_in_interval(k22, IntervalQuery::open(Rat(6), Rat(6))) == 0);
    CHECK(count_in_interval(k22, IntervalQuery::all()) == 4);

    CharPoly s6 = char_poly(distance_laplacian(star_graph(6)));
    // spectrum {0, 6, 11, 11, 11, 11}
    CHECK(count_in_interval(s6, IntervalQuery::half_open(Rat(6), Rat(11))) == 1);
    CHECK(count_in_interval(s6, IntervalQuery::all()) == 6);

    CHECK_THROWS_AS(count_in_interval(s6, IntervalQuery::closed(Rat(3), Rat(2))),
                    std::invalid_argument);
}

TEST_CASE("multiplicity queries") {
    CharPoly k22 = char_poly(distance_laplacian(complete_multipartite(PartiteSpec({2, 2}))));
    CHECK(multiplicity_at(k22, Rat(4)) == 1);
    CHECK(multiplicity_at(k22, Rat(6)) == 2);
    CHECK(multiplicity_at(k22, Rat(5)) == 0);

    CharPoly k5 = char_poly(distance_laplacian(complete_graph(5)));
    CHECK(multiplicity_at(k5, Rat(5)) == 4);

    CharPoly p4 = char_poly(distance_laplacian(path_graph(4)));
    CHECK(multiplicity_at(p4, Rat(4)) == 0);
    CHECK(multiplicity_at(p4, Rat(6)) == 1);
}

TEST_CASE("integer roots from gershgorin scan") {
    Graph s6 = star_graph(6);
    IntSymMatrix m = distance_laplacian(s6);
    CharPoly cp = char_poly(m);
    auto [lo, hi] = gershgorin_bounds(m);
    auto roots = integer_roots_in(cp, lo, hi);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == std::pair<Int, int>{0, 1});
    CHECK(roots[1] == std::pair<Int, int>{6, 1});
    CHECK(roots[2] == std::pair<Int, int>{11, 4});
}

TEST_CASE("spectral radius bound") {
    for (int n : {2, 3, 5, 7}) {
        Graph g = complete_graph(n);
        auto d = apsp(g);
        auto [bound, holds] = spectral_radius_bound(d, char_poly(distance_laplacian(g, d)));
        CHECK(bound == 2 * (n - 1));
        CHECK(holds);
    }
    Graph s5 = star_graph(5);
    auto d = apsp(s5);
    auto [bound, holds] = spectral_radius_bound(d, char_poly(distance_laplacian(s5, d)));
    CHECK(bound == 14);
    CHECK(holds);
}

TEST_CASE("zero simple and spectral gap up to n") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_connected(n)) {
            CharPoly cp = char_poly(distance_laplacian(g));
            REQUIRE(multiplicity_at(cp, Rat(0)) == 1);
            REQUIRE(count_in_interval(cp, IntervalQuery::open(Rat(0), Rat(n))) == 0);
        }
}

TEST_CASE("numeric counts with snapping equal exact counts") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_connected(n)) {
            auto d = apsp(g);
            IntSymMatrix m = distance_laplacian(g, d);
            CharPoly cp = char_poly(m);
            auto values = jacobi_eigenvalues(m);
            std::vector<IntervalQuery> queries = {
                IntervalQuery::half_open(Rat(n), Rat(n + 2)),
                IntervalQuery::closed(Rat(n + 2), Rat(2 * d.tr_max)),
                IntervalQuery::open(Rat(2 * n - 1), Rat(2 * n)),
                IntervalQuery::closed(Rat(0), Rat(d.diameter * n)),
                IntervalQuery::closed_above(Rat(n)),
            };
            for (const auto& q : queries) {
                if (q.lo && q.hi && *q.lo > *q.hi) continue;
                REQUIRE(count_numeric(values, q) == count_in_interval(cp, q));
            }
        }
}

TEST_CASE("cauchy interlacing on random principal submatrices") {
    std::mt19937 rng(4242);
    auto pool6 = enumerate_connected(6);
    auto pool5 = enumerate_connected(5);
    for (int trial = 0; trial < 500; ++trial) {
        const auto& pool = (trial % 2 == 0) ? pool6 : pool5;
        const Graph& g = pool[rng() % pool.size()];
        IntSymMatrix m = distance_laplacian(g);
        int s = 1 + static_cast<int>(rng() % static_cast<unsigned>(g.n - 1));
        std::vector<int> all(static_cast<std::size_t>(g.n));
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<int> rows(all.begin(), all.begin() + s);
        std::sort(rows.begin(), rows.end());
        auto lam = jacobi_eigenvalues(m);                           // descending, size n
        auto sub = jacobi_eigenvalues(principal_submatrix(m, rows));  // descending, size s
        for (int i = 0; i < s; ++i) {
            REQUIRE(lam[static_cast<std::size_t>(i)] >= sub[static_cast<std::size_t>(i)] - 1e-8);
            REQUIRE(sub[static_cast<std::size_t>(i)] >=
                    lam[static_cast<std::size_t>(i + g.n - s)] - 1e-8);
        }
    }
}

TEST_CASE("edge deletion dominance") {
    for (int n = 3; n <= 5; ++n)
        for (const Graph& g : enumerate_connected(n)) {
            auto base = dl_eigenvalues(g);
            CharPoly base_cp = char_poly(distance_laplacian(g));
            int tr2 = 2 * apsp(g).tr_max;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (!g.has_edge(u, v)) continue;
                    Graph del = g;
                    del.adj[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
                    del.adj[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
                    if (!is_connected(del)) continue;
                    auto star = dl_eigenvalues(del);
                    for (int i = 0; i < n; ++i)
                        REQUIRE(star[static_cast<std::size_t>(i)] >=
                                base[static_cast<std::size_t>(i)] - 1e-8);
                    // exact dominance at every integer threshold
                    CharPoly del_cp = char_poly(distance_laplacian(del));
                    int del_tr2 = 2 * apsp(del).tr_max;
                    for (int t = 0; t <= std::max(tr2, del_tr2); ++t) {
                        REQUIRE(count_in_interval(del_cp, IntervalQuery::closed_above(Rat(t))) >=
                                count_in_interval(base_cp, IntervalQuery::closed_above(Rat(t))));
                    }
                }
        }
}

TEST_CASE("diameter-2 transform from the laplacian spectrum") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_connected(n)) {
            auto d = apsp(g);
            if (d.diameter > 2) continue;
            auto mu = jacobi_eigenvalues(laplacian(g));  // descending, mu[n-1] = 0
            std::vector<double> mapped;
            for (int i = 0; i < n - 1; ++i) mapped.push_back(2.0 * n - mu[static_cast<std::size_t>(i)]);
            mapped.push_back(0.0);
            std::sort(mapped.begin(), mapped.end(), std::greater<>());
            auto dl = dl_eigenvalues(g);
            for (int i = 0; i < n; ++i)
                REQUIRE_THAT(dl[static_cast<std::size_t>(i)],
                             Catch::Matchers::WithinAbs(mapped[static_cast<std::size_t>(i)], 1e-8));
        }
}
