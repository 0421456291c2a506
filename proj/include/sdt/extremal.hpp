#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sdt/enumerate.hpp"
#include "sdt/extended_nat.hpp"
#include "sdt/graph.hpp"

namespace sdt {

/// Minimum edge count over connected graphs of the given order whose maximum
/// degree is exactly `max_degree` and whose Steiner k-diameter is at most
/// `diameter_bound`; infinity when no such graph exists.
struct ExtremalQuery {
    int order = 0;
    int max_degree = 0;
    int diameter_bound = 0;
    int k = 3;

    bool operator==(const ExtremalQuery&) const = default;
};

struct ExtremalResult {
    ExtremalQuery query;
    ExtendedNat value = ExtendedNat::infinity();
    std::vector<Graph> witnesses;        // canonical forms at the minimum, sorted
    bool witnesses_truncated = false;
    std::uint64_t graphs_examined = 0;   // candidates tested across all strata
    int first_stratum = 0;               // lowest edge count searched
    int last_stratum = -1;               // highest edge count searched; -1 if none
    ShardSpec shard{};                   // slice of the search this result covers
};

struct SearchOptions {
    int threads = 1;                 // in-process shards per edge stratum
    std::size_t witness_cap = 10;    // kept witnesses unless all_witnesses
    bool all_witnesses = false;
    ShardSpec shard{};               // count > 1: search only this slice and
                                     // report a partial result for merging
};

/// Ascending search over edge strata; stops at the first stratum containing a
/// witness. A sharded call (options.shard.count > 1) cannot stop early on the
/// other slices' behalf, so it reports the minimum within its own slice;
/// merge_shards combines a full set of slices into the exact answer.
ExtremalResult compute_e(const ExtremalQuery& query, const SearchOptions& options = {});

/// Combines partial results from a complete, disjoint set of shards of the
/// same query. Witness lists from slices attaining the minimum are unioned.
ExtremalResult merge_shards(const std::vector<ExtremalResult>& parts);

}  // namespace sdt
