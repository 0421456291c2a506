#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "sdt/graph.hpp"

namespace sdt {

/// Selects the isomorphism classes to stream.
struct EnumFilter {
    int order = 1;
    bool connected_only = true;
    std::optional<int> max_degree_exact;  // maximum degree equals this value
    std::optional<int> edge_count;        // restrict to one edge stratum
};

/// Deterministic 1-of-count split of the stream; shards are disjoint and
/// cover it. The split is keyed on subtree indices at a fixed depth of the
/// construction tree, so every shard recomputes only the shallow levels.
struct ShardSpec {
    int index = 0;
    int count = 1;
};

/// Hard enumeration order cap (12), lowered by the STEINER_MAX_N
/// environment variable when set.
int enumeration_cap();

/// Streams exactly one representative per isomorphism class matching the
/// filter, built by edge augmentation with canonical-construction-path
/// acceptance. Representatives arrive canonically labeled, grouped by edge
/// count ascending; within a stratum in lexicographic canonical order when
/// `sorted` (the default), otherwise in construction order. Both orders are
/// deterministic across runs.
void generate(const EnumFilter& filter, ShardSpec shard,
              const std::function<void(const Graph&)>& emit, bool sorted = true);
void generate(const EnumFilter& filter, const std::function<void(const Graph&)>& emit);

/// Length of the generate stream without materializing graphs.
std::uint64_t count(const EnumFilter& filter, ShardSpec shard = {});

}  // namespace sdt
