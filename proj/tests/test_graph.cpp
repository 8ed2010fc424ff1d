#include <catch2/catch_amalgamated.hpp>

#include "dlspectra/families.hpp"
#include "dlspectra/graph.hpp"
#include "dlspectra/search.hpp"
#include "test_oracles.hpp"

using namespace dlspectra;

TEST_CASE("from_edges basics") {
    Graph k2 = from_edges(2, {{0, 1}});
    CHECK(k2.edge_count() == 1);
    CHECK(k2.has_edge(0, 1));

    Graph p4 = from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(p4.edge_count() == 3);

    Graph dup = from_edges(3, {{0, 1}, {0, 1}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(from_edges(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(from_edges(65, {}), std::invalid_argument);
    CHECK_THROWS_AS(from_edges(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(from_edges(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(path_graph(4)));
    CHECK_FALSE(is_connected(complement(complete_graph(4))));
    CHECK(is_connected(complement(cycle_graph(5))));
}

TEST_CASE("apsp on known graphs") {
    auto d = apsp(path_graph(4));
    CHECK(d.tr == std::vector<int>{6, 4, 4, 6});
    CHECK(d.diameter == 3);
    CHECK(d.tr_max == 6);

    d = apsp(complete_graph(5));
    CHECK(d.tr == std::vector<int>{4, 4, 4, 4, 4});
    CHECK(d.diameter == 1);

    d = apsp(star_graph(5));  // center is vertex 0
    CHECK(d.tr[0] == 4);
    CHECK(d.tr[1] == 7);
    CHECK(d.diameter == 2);

    CHECK_THROWS_AS(apsp(complement(complete_graph(3))), std::invalid_argument);
}

TEST_CASE("apsp agrees with Floyd-Warshall and satisfies metric axioms") {
    for (int n = 2; n <= 5; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            auto d = apsp(g);
            auto ref = oracle::naive_distances(g);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    CHECK(d.dist[i][j] == ref[i][j]);
                    CHECK(d.dist[i][j] == d.dist[j][i]);
                    if (i != j) CHECK(d.dist[i][j] >= 1);
                    for (int k = 0; k < n; ++k)
                        CHECK(d.dist[i][j] <= d.dist[i][k] + d.dist[k][j]);
                }
        }
    }
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(4)).edge_count() == 0);
    CHECK(canonical_code(complement(cycle_graph(5))) == canonical_code(cycle_graph(5)));
    // complete split graph: complement is a clique plus isolated vertices
    Graph c = complement(complete_split(6, 2));
    CHECK(component_count(c) == 5);
    CHECK(c.edge_count() == 1);
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : enumerate_connected(n)) CHECK(complement(complement(g)) == g);
}

TEST_CASE("complement components") {
    CHECK(complement_components(complete_multipartite(PartiteSpec({2, 2}))) == 2);
    CHECK(complement_components(complete_multipartite(PartiteSpec({2, 1, 1}))) == 3);
    CHECK(complement_components(path_graph(4)) == 1);
    CHECK(complement_components(complete_graph(6)) == 6);
}

TEST_CASE("pendant vertices") {
    CHECK(pendant_vertices(star_graph(6)) == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(pendant_vertices(cycle_graph(6)).empty());
    CHECK(pendant_vertices(path_graph(4)) == std::vector<int>{0, 3});
}

TEST_CASE("twin classes") {
    Graph s5 = star_graph(5);
    auto cls = twin_pendant_classes(s5, apsp(s5));
    REQUIRE(cls.size() == 1);
    CHECK(cls[0].vertices == std::vector<int>{1, 2, 3, 4});
    CHECK(cls[0].transmission == 7);

    Graph k22 = complete_multipartite(PartiteSpec({2, 2}));
    cls = twin_pendant_classes(k22, apsp(k22));
    REQUIRE(cls.size() == 2);
    CHECK(cls[0].vertices.size() == 2);
    CHECK(cls[1].vertices.size() == 2);
    CHECK(cls[0].transmission == 4);

    Graph p4 = path_graph(4);
    CHECK(twin_pendant_classes(p4, apsp(p4)).empty());
}

TEST_CASE("canonical code is a relabeling invariant") {
    Graph p4 = path_graph(4);
    Graph p4r = from_edges(4, {{3, 2}, {2, 1}, {1, 0}});
    CHECK(canonical_code(p4) == canonical_code(p4r));
    CHECK(canonical_code(star_graph(4)) != canonical_code(p4));

    std::mt19937 rng(12345);
    for (int n : {4, 5, 6, 7}) {
        auto classes = enumerate_connected(n);
        const Graph& g = classes[classes.size() / 2];
        const std::string code = canonical_code(g);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 100; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (g.has_edge(u, v)) edges.emplace_back(perm[u], perm[v]);
            CHECK(canonical_code(from_edges(n, edges)) == code);
        }
    }

    Graph big = path_graph(11);
    CHECK_THROWS_AS(canonical_code(big), std::invalid_argument);
}

TEST_CASE("canonical code separates non-isomorphic graphs exhaustively") {
    // all connected classes of order 5: pairwise distinct codes, and the code
    // ordering matches the independent full-permutation oracle partition
    auto classes = enumerate_connected(5);
    std::set<std::string> codes;
    std::set<std::vector<bool>> oracle_keys;
    for (const Graph& g : classes) {
        codes.insert(canonical_code(g));
        oracle_keys.insert(oracle::full_perm_canonical_bits(g));
    }
    CHECK(codes.size() == classes.size());
    CHECK(oracle_keys.size() == classes.size());
}
