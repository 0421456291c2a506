#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "sdt/canonical.hpp"
#include "sdt/extremal.hpp"
#include "sdt/families.hpp"
#include "sdt/graph6.hpp"
#include "sdt/steiner.hpp"

using namespace sdt;

namespace {

ExtendedNat e3(int n, int l, int d) {
    return compute_e({n, l, d, 3}).value;
}

std::vector<std::string> keys(const ExtremalResult& r) {
    std::vector<std::string> out;
    for (const Graph& g : r.witnesses) out.push_back(graph6_encode(g));
    return out;
}

}  // namespace

TEST_CASE("small known values") {
    CHECK(e3(6, 4, 3) == ExtendedNat::finite(7));
    CHECK(e3(4, 3, 2) == ExtendedNat::finite(5));  // K4 minus an edge
    CHECK(e3(5, 3, 2).is_infinite());
    CHECK(e3(6, 3, 2).is_infinite());
    CHECK(e3(7, 4, 6) == ExtendedNat::finite(6));  // a spanning tree suffices
    CHECK(e3(7, 3, 4) == ExtendedNat::finite(8));
    CHECK(e3(8, 3, 4) == ExtendedNat::finite(9));
}

TEST_CASE("max degree two leaves only paths and cycles") {
    CHECK(e3(6, 2, 5) == ExtendedNat::finite(5));  // P6
    CHECK(e3(6, 2, 4) == ExtendedNat::finite(6));  // C6
    CHECK(e3(6, 2, 3).is_infinite());
    CHECK(e3(9, 2, 5).is_infinite());

    ExtremalResult path = compute_e({6, 2, 5, 3});
    REQUIRE(path.witnesses.size() == 1);
    CHECK(path.witnesses[0] ==
          canonicalize(build_family(family::Path{6})).canonical_graph);
    ExtremalResult cycle = compute_e({6, 2, 4, 3});
    REQUIRE(cycle.witnesses.size() == 1);
    CHECK(cycle.witnesses[0] ==
          canonicalize(build_family(family::Cycle{6})).canonical_graph);
}

TEST_CASE("other set sizes") {
    CHECK(compute_e({5, 2, 4, 2}).value == ExtendedNat::finite(4));   // diameter of P5
    CHECK(compute_e({4, 3, 3, 4}).value == ExtendedNat::finite(3));   // star K_{1,3}
    CHECK(compute_e({9, 8, 8, 9}).value == ExtendedNat::finite(8));   // k = order > 8
    CHECK(compute_e({5, 2, 2, 4}).value.is_infinite());               // below k - 1
}

TEST_CASE("bounds below k-1 skip the search entirely") {
    ExtremalResult r = compute_e({6, 3, 1, 3});
    CHECK(r.value.is_infinite());
    CHECK(r.graphs_examined == 0);
    CHECK(r.last_stratum < r.first_stratum);
    CHECK(r.witnesses.empty());
}

TEST_CASE("witnesses are canonical, sorted, and meet the query") {
    ExtremalQuery q{6, 3, 4, 3};
    SearchOptions all;
    all.all_witnesses = true;
    ExtremalResult r = compute_e(q, all);
    REQUIRE(r.value.is_finite());
    REQUIRE(!r.witnesses.empty());
    CHECK(!r.witnesses_truncated);
    std::vector<std::string> ks = keys(r);
    CHECK(std::is_sorted(ks.begin(), ks.end()));
    CHECK(std::adjacent_find(ks.begin(), ks.end()) == ks.end());
    for (const Graph& g : r.witnesses) {
        CHECK(g.order() == q.order);
        CHECK(g.is_connected());
        CHECK(g.max_degree() == q.max_degree);
        CHECK(g.edge_count() == static_cast<int>(r.value.value()));
        CHECK(sdiam(g, q.k) <= ExtendedNat::finite(q.diameter_bound));
        CHECK(g == canonicalize(g).canonical_graph);
    }

    SearchOptions capped;
    capped.witness_cap = 1;
    ExtremalResult first = compute_e(q, capped);
    REQUIRE(first.witnesses.size() == 1);
    CHECK(graph6_encode(first.witnesses[0]) == ks.front());
    CHECK(first.witnesses_truncated == (ks.size() > 1));
    CHECK(first.value == r.value);
    CHECK(first.graphs_examined == r.graphs_examined);
}

TEST_CASE("threaded search returns the single-thread result") {
    ExtremalQuery q{7, 3, 4, 3};
    SearchOptions one, four;
    one.all_witnesses = four.all_witnesses = true;
    four.threads = 4;
    ExtremalResult a = compute_e(q, one);
    ExtremalResult b = compute_e(q, four);
    CHECK(a.value == b.value);
    CHECK(keys(a) == keys(b));
    CHECK(a.graphs_examined == b.graphs_examined);
    CHECK(a.first_stratum == b.first_stratum);
    CHECK(a.last_stratum == b.last_stratum);
}

TEST_CASE("sharded partial results merge to the exact answer") {
    ExtremalQuery q{7, 3, 4, 3};
    SearchOptions plain;
    plain.all_witnesses = true;
    ExtremalResult whole = compute_e(q, plain);

    const int shards = 3;
    std::vector<ExtremalResult> parts;
    for (int i = 0; i < shards; ++i) {
        SearchOptions opt;
        opt.all_witnesses = true;
        opt.shard = {i, shards};
        parts.push_back(compute_e(q, opt));
        CHECK(parts.back().shard.index == i);
        CHECK(parts.back().shard.count == shards);
    }
    ExtremalResult merged = merge_shards(parts);
    CHECK(merged.value == whole.value);
    CHECK(keys(merged) == keys(whole));
    // a slice cannot stop early for the others, so it may examine more
    std::uint64_t sliced = 0;
    for (const ExtremalResult& p : parts) sliced += p.graphs_examined;
    CHECK(sliced >= whole.graphs_examined);
    CHECK(merged.graphs_examined == sliced);
}

TEST_CASE("merging an infinite query stays infinite") {
    ExtremalQuery q{5, 3, 2, 3};
    std::vector<ExtremalResult> parts;
    for (int i = 0; i < 2; ++i) {
        SearchOptions opt;
        opt.shard = {i, 2};
        parts.push_back(compute_e(q, opt));
    }
    ExtremalResult merged = merge_shards(parts);
    CHECK(merged.value.is_infinite());
    CHECK(merged.witnesses.empty());
}

TEST_CASE("merge validation") {
    CHECK_THROWS_AS(merge_shards({}), std::invalid_argument);

    ExtremalQuery q{6, 4, 3, 3};
    std::vector<ExtremalResult> parts;
    for (int i = 0; i < 2; ++i) {
        SearchOptions opt;
        opt.shard = {i, 2};
        parts.push_back(compute_e(q, opt));
    }
    std::vector<ExtremalResult> bad = parts;
    bad[1].query.diameter_bound = 4;
    CHECK_THROWS_AS(merge_shards(bad), std::invalid_argument);
    bad = parts;
    bad.pop_back();
    CHECK_THROWS_AS(merge_shards(bad), std::invalid_argument);  // missing slice
    bad = parts;
    bad[1] = bad[0];
    CHECK_THROWS_AS(merge_shards(bad), std::invalid_argument);  // duplicate slice
    CHECK(merge_shards(parts).value == compute_e(q).value);
}

TEST_CASE("query validation") {
    CHECK_THROWS_AS(compute_e({1, 1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(compute_e({13, 3, 3, 3}), cap_error);
    CHECK_THROWS_AS(compute_e({6, 3, 3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(compute_e({6, 3, 3, 7}), std::invalid_argument);
    CHECK_THROWS_AS(compute_e({12, 3, 10, 9}), cap_error);  // 8 < k < order
    CHECK_THROWS_AS(compute_e({6, 0, 3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(compute_e({6, 6, 3, 3}), std::invalid_argument);
    SearchOptions opt;
    opt.threads = 0;
    CHECK_THROWS_AS(compute_e({6, 3, 3, 3}, opt), std::invalid_argument);
}
