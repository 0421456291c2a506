#include "doctest.h"

#include <random>
#include <string>

#include "sdt/enumerate.hpp"
#include "sdt/graph.hpp"
#include "sdt/graph6.hpp"

using namespace sdt;

TEST_CASE("hand-derived goldens") {
    CHECK(graph6_encode(Graph(2)) == "A?");
    CHECK(graph6_encode(Graph::from_edges(2, {{0, 1}})) == "A_");
    CHECK(graph6_encode(Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}})) == "Bw");
    CHECK(graph6_decode("A?") == Graph(2));
    CHECK(graph6_decode("A_") == Graph::from_edges(2, {{0, 1}}));
    CHECK(graph6_decode("Bw") == Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}));
}

TEST_CASE("single vertex and small shapes") {
    CHECK(graph6_encode(Graph(1)) == "@");
    CHECK(graph6_decode("@") == Graph(1));
    // P4 = 0-1-2-3: pairs (0,1),(0,2),(1,2),(0,3),(1,3),(2,3) -> 101001
    CHECK(graph6_encode(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}})) == "Ch");
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(graph6_decode(""), std::invalid_argument);
    CHECK_THROWS_AS(graph6_decode("A"), std::invalid_argument);     // truncated payload
    CHECK_THROWS_AS(graph6_decode("A??"), std::invalid_argument);   // trailing junk
    CHECK_THROWS_AS(graph6_decode("A\x1f"), std::invalid_argument); // char below 63
    CHECK_THROWS_AS(graph6_decode("A\x7f"), std::invalid_argument); // char above 126
    CHECK_THROWS_AS(graph6_decode("~??"), cap_error);               // multi-byte order
}

TEST_CASE("padding bits must be zero") {
    // "A_" has the single pair bit set in the top position; flipping padding
    // bits yields characters that decode to the same graph only if padding
    // is ignored -- it must not be.
    CHECK_THROWS_AS(graph6_decode("A`"), std::invalid_argument);
}

TEST_CASE("round-trip over every enumerated class at n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        EnumFilter f;
        f.order = n;
        f.connected_only = false;
        generate(f, ShardSpec{}, [&](const Graph& g) {
            std::string s = graph6_encode(g);
            CHECK(graph6_decode(s) == g);
        }, /*sorted=*/false);
    }
}

TEST_CASE("round-trip on random graphs up to the 62-vertex cap") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + int(rng() % 61);  // 2..62
        Graph g(n);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2)
                    edges.emplace_back(u, v);
        g = Graph::from_edges(n, edges);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
}

TEST_CASE("orders beyond 62 are out of scope") {
    CHECK_THROWS_AS(graph6_encode(Graph(63)), cap_error);
}
