#include "doctest.h"

#include <array>
#include <string>
#include <vector>

#include "sdt/canonical.hpp"
#include "sdt/families.hpp"
#include "sdt/graph.hpp"
#include "sdt/steiner.hpp"

using namespace sdt;

namespace {

ExtendedNat fin(int v) { return ExtendedNat::finite(std::uint32_t(v)); }

// Builds the spec and checks the built graph against its predicted
// properties, including the Steiner 3-diameter when one is promised.
void check_spec(const FamilySpec& spec) {
    CAPTURE(format_family(spec));
    Graph g = build_family(spec);
    FamilyProperties p = expected_properties(spec);
    CHECK(g.order() == p.order);
    CHECK(g.edge_count() == p.edge_count);
    CHECK(g.max_degree() == p.max_degree);
    if (g.order() >= 3) {
        ExtendedNat s = sdiam(g, 3);
        if (p.sdiam3_exact) CHECK(s == fin(*p.sdiam3_exact));
        if (p.sdiam3_upper) CHECK(s <= fin(*p.sdiam3_upper));
    }
}

}  // namespace

TEST_CASE("paths, cycles, stars, cliques") {
    for (int n = 1; n <= 10; ++n) check_spec(family::Path{n});
    for (int n = 3; n <= 30; ++n) check_spec(family::Cycle{n});
    for (int n = 2; n <= 10; ++n) check_spec(family::Star{n});
    for (int n = 1; n <= 10; ++n) check_spec(family::Complete{n});
}

TEST_CASE("multipartite and matching-deleted cliques") {
    check_spec(family::Multipartite{{1, 1, 1}});
    check_spec(family::Multipartite{{2, 3}});
    check_spec(family::Multipartite{{1, 2, 3}});
    check_spec(family::Multipartite{{3, 3, 3}});
    for (int m = 0; m <= 3; ++m) check_spec(family::CompleteMinusMatching{7, m});
    // parts are normalized: permuted part lists build isomorphic graphs
    Graph a = build_family(family::Multipartite{{3, 1, 2}});
    Graph b = build_family(family::Multipartite{{1, 2, 3}});
    CHECK(canonical_form(a) == canonical_form(b));
}

TEST_CASE("trees: brooms, spiders, double brooms, claw tails") {
    for (int l = 2; l <= 6; ++l) check_spec(family::Broom{8, l});
    check_spec(family::Spider{1, 1, 1});
    check_spec(family::Spider{1, 2, 3});
    check_spec(family::Spider{0, 2, 3});
    check_spec(family::Spider{2, 2, 2});
    check_spec(family::TriangleSpider{0, 0, 1});
    check_spec(family::TriangleSpider{1, 1, 1});
    check_spec(family::TriangleSpider{1, 2, 3});
    check_spec(family::DoubleBroom{2, 3, 2});
    check_spec(family::DoubleBroom{1, 4, 3});
    check_spec(family::DoubleBroom{1, 3, 1});
    check_spec(family::DoubleClawTail{2, 2});
    check_spec(family::DoubleClawTail{1, 3});
}

TEST_CASE("spider and triangle spider have full Steiner 3-diameter") {
    // T_{a,b,c} and the triangle variant are exactly the sdiam3 = n-1 graphs
    for (auto [a, b, c] : std::vector<std::array<int, 3>>{
             {1, 1, 1}, {1, 1, 3}, {1, 2, 2}, {2, 2, 3}}) {
        Graph t = build_family(family::Spider{a, b, c});
        CHECK(sdiam(t, 3) == fin(t.order() - 1));
        Graph u = build_family(family::TriangleSpider{a, b, c});
        CHECK(sdiam(u, 3) == fin(u.order() - 1));
    }
}

TEST_CASE("diameter-3 witnesses at orders 7 through 10") {
    for (int n = 7; n <= 10; ++n) {
        Graph k = build_family(family::K2mMinusEdge{n});
        CHECK(k.order() == n);
        CHECK(k.edge_count() == 2 * n - 5);
        CHECK(k.max_degree() == n - 2);
        CHECK(sdiam(k, 3) <= fin(3));
        for (int r = 1; r <= n - 4; ++r) {
            Graph t = build_family(family::TwoCenter{n, r});
            CHECK(t.order() == n);
            CHECK(t.edge_count() == 2 * n - 5);
            CHECK(t.max_degree() == n - 3);
            CHECK(sdiam(t, 3) <= fin(3));
        }
    }
}

TEST_CASE("chorded cycles and layered cliques") {
    check_spec(family::ChordedCycle{9, {{0, 4}}});
    check_spec(family::ChordedCycle{8, {{0, 4}, {2, 6}}});
    for (int d = 4; d <= 8; ++d)
        for (int q = 1; q <= 2; ++q)
            for (int p = q; p <= 3; ++p) check_spec(family::LayeredClique{p, q, d});
    // the d = n-4 refutation witness shape: theta graph via two chords is
    // different; layered cliques hit the general upper bound instead
    Graph h = build_family(family::LayeredClique{2, 1, 5});
    CHECK(h.order() == 2 + 1 + 5 - 1);
    CHECK(sdiam(h, 3) <= fin(5));
}

TEST_CASE("parse and format round-trip") {
    for (const char* text : {
             "path:7", "cycle:9", "star:5", "complete:6", "parts:1,2,3",
             "kmm:8,2", "broom:9,4", "tabc:1,2,3", "c3abc:1,1,2",
             "dbroom:2,3,2", "tstar:2,2", "twocenter:8,2", "k2m:6",
             "chorded:9:0-4,2-6", "layered:2,2,5"}) {
        CAPTURE(text);
        FamilySpec spec = parse_family(text);
        CHECK(format_family(spec) == text);
        CHECK(build_family(spec).order() >= 1);
    }
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(parse_family("bogus:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("path:x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("tabc:1,2"), std::invalid_argument);
    CHECK_THROWS_AS(build_family(family::Cycle{2}), std::invalid_argument);
    CHECK_THROWS_AS(build_family(family::Path{0}), std::invalid_argument);
    CHECK_THROWS_AS(build_family(family::Spider{3, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(build_family(family::TwoCenter{6, 3}), std::invalid_argument);
    CHECK_THROWS_AS(build_family(family::CompleteMinusMatching{5, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_family(family::ChordedCycle{6, {{0, 1}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_family(family::LayeredClique{1, 2, 5}), std::invalid_argument);
    CHECK_THROWS_AS(build_family(family::Path{65}), std::invalid_argument);
}
