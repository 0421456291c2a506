#include "sdt/extremal.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "sdt/graph6.hpp"
#include "sdt/steiner.hpp"

namespace sdt {

namespace {

struct SliceOutcome {
    std::uint64_t examined = 0;
    std::uint64_t matched = 0;
    std::vector<std::pair<std::string, Graph>> kept;  // sorted by key
    bool truncated = false;
    std::exception_ptr error;
};

void keep_witness(SliceOutcome& out, const Graph& g, const SearchOptions& options) {
    if (!options.all_witnesses && options.witness_cap == 0) return;
    auto key = graph6_encode(g);
    if (options.all_witnesses) {
        out.kept.emplace_back(std::move(key), g);
        return;
    }
    auto pos = std::lower_bound(out.kept.begin(), out.kept.end(), key,
                                [](const auto& a, const std::string& b) { return a.first < b; });
    out.kept.emplace(pos, std::move(key), g);
    if (out.kept.size() > options.witness_cap) {
        out.kept.pop_back();
        out.truncated = true;
    }
}

void validate(const ExtremalQuery& q) {
    if (q.order < 2) throw std::invalid_argument("extremal: order must be at least 2");
    if (q.order > enumeration_cap()) {
        throw cap_error("extremal: order " + std::to_string(q.order) + " exceeds cap " +
                        std::to_string(enumeration_cap()));
    }
    if (q.k < 2 || q.k > q.order) {
        throw std::invalid_argument("extremal: k must satisfy 2 <= k <= order");
    }
    if (q.k > 8 && q.k != q.order) {
        throw cap_error("extremal: Steiner sets larger than 8 are only supported for k = order");
    }
    if (q.max_degree < 1 || q.max_degree > q.order - 1) {
        throw std::invalid_argument("extremal: max degree must satisfy 1 <= L <= order - 1");
    }
}

}  // namespace

ExtremalResult compute_e(const ExtremalQuery& query, const SearchOptions& options) {
    validate(query);
    if (options.threads < 1) throw std::invalid_argument("extremal: thread count must be positive");

    ExtremalResult result;
    result.query = query;
    result.first_stratum = query.order - 1;
    result.last_stratum = result.first_stratum - 1;
    result.shard = options.shard.count > 1 ? options.shard : ShardSpec{};

    // A tree on k vertices has k - 1 edges, so no graph meets a lower bound.
    if (query.diameter_bound < query.k - 1) return result;
    // Any connected spanning subtree realizes every Steiner distance, so the
    // bound is vacuous beyond order - 1.
    int effective_bound = std::min(query.diameter_bound, query.order - 1);

    std::vector<ShardSpec> slices;
    if (options.shard.count > 1) {
        slices.push_back(options.shard);
    } else {
        for (int i = 0; i < options.threads; ++i) slices.push_back({i, options.threads});
    }

    int max_edges =
        std::min(query.order * (query.order - 1) / 2, query.order * query.max_degree / 2);
    for (int m = query.order - 1; m <= max_edges; ++m) {
        result.last_stratum = m;
        EnumFilter filter;
        filter.order = query.order;
        filter.connected_only = true;
        filter.max_degree_exact = query.max_degree;
        filter.edge_count = m;

        std::vector<SliceOutcome> outcomes(slices.size());
        auto work = [&](std::size_t idx) {
            SliceOutcome& out = outcomes[idx];
            try {
                generate(
                    filter, slices[idx],
                    [&](const Graph& g) {
                        ++out.examined;
                        if (sdiam_at_most(g, query.k, effective_bound)) {
                            ++out.matched;
                            keep_witness(out, g, options);
                        }
                    },
                    /*sorted=*/false);
            } catch (...) {
                out.error = std::current_exception();
            }
        };
        if (slices.size() == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(slices.size());
            for (std::size_t i = 0; i < slices.size(); ++i) pool.emplace_back(work, i);
            for (auto& t : pool) t.join();
        }

        std::uint64_t matched = 0;
        std::vector<std::pair<std::string, Graph>> merged;
        for (SliceOutcome& out : outcomes) {
            if (out.error) std::rethrow_exception(out.error);
            result.graphs_examined += out.examined;
            matched += out.matched;
            result.witnesses_truncated |= out.truncated;
            std::move(out.kept.begin(), out.kept.end(), std::back_inserter(merged));
        }
        if (matched == 0) continue;

        std::sort(merged.begin(), merged.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        if (!options.all_witnesses && merged.size() > options.witness_cap) {
            merged.resize(options.witness_cap);
            result.witnesses_truncated = true;
        }
        result.value = ExtendedNat::finite(static_cast<std::uint32_t>(m));
        result.witnesses.reserve(merged.size());
        for (auto& entry : merged) result.witnesses.push_back(std::move(entry.second));
        return result;
    }
    return result;
}

ExtremalResult merge_shards(const std::vector<ExtremalResult>& parts) {
    if (parts.empty()) throw std::invalid_argument("merge: no shard results");
    const ExtremalQuery& query = parts.front().query;
    int shard_count = parts.front().shard.count;
    std::vector<int> indices;
    for (const ExtremalResult& part : parts) {
        if (!(part.query == query)) throw std::invalid_argument("merge: mismatched queries");
        if (part.shard.count != shard_count) {
            throw std::invalid_argument("merge: mismatched shard counts");
        }
        indices.push_back(part.shard.index);
    }
    std::sort(indices.begin(), indices.end());
    for (int i = 0; i < shard_count; ++i) {
        if (static_cast<std::size_t>(i) >= indices.size() || indices[i] != i) {
            throw std::invalid_argument("merge: shard set is not a complete partition");
        }
    }
    if (indices.size() != static_cast<std::size_t>(shard_count)) {
        throw std::invalid_argument("merge: shard set is not a complete partition");
    }

    ExtremalResult merged;
    merged.query = query;
    merged.first_stratum = parts.front().first_stratum;
    merged.last_stratum = parts.front().last_stratum;
    for (const ExtremalResult& part : parts) {
        merged.value = std::min(merged.value, part.value);
        merged.graphs_examined += part.graphs_examined;
        merged.first_stratum = std::min(merged.first_stratum, part.first_stratum);
        merged.last_stratum = std::max(merged.last_stratum, part.last_stratum);
    }
    std::vector<std::pair<std::string, Graph>> pool;
    for (const ExtremalResult& part : parts) {
        if (part.value != merged.value || part.value.is_infinite()) continue;
        merged.witnesses_truncated |= part.witnesses_truncated;
        for (const Graph& g : part.witnesses) pool.emplace_back(graph6_encode(g), g);
    }
    std::sort(pool.begin(), pool.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    merged.witnesses.reserve(pool.size());
    for (auto& entry : pool) merged.witnesses.push_back(std::move(entry.second));
    return merged;
}

}  // namespace sdt
