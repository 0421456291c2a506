#include "sdt/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sdt/canonical.hpp"
#include "sdt/graph6.hpp"

namespace sdt {

namespace {

constexpr int kShardDepth = 6;

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Orders a pair the way the construction tree does everywhere: (min, max).
std::pair<int, int> norm(int a, int b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

struct Level {
    std::vector<Perm64> gens;              // Aut generators of the graph at this depth
    std::vector<std::pair<int, int>> reps; // non-edge orbit representatives
    std::vector<std::pair<int, int>> work; // orbit-closure stack
};

class Builder {
public:
    Builder(const EnumFilter& filter, ShardSpec shard,
            const std::function<void(const Graph&)>& emit, bool sorted)
        : filter_(filter), shard_(shard), emit_(emit), sorted_(sorted) {
        n_ = filter.order;
        all_ = n_ == 64 ? ~std::uint64_t{0} : bit(n_) - 1;
        degree_cap_ = filter.max_degree_exact ? *filter.max_degree_exact : n_ - 1;
        levels_.resize(1 + n_ * (n_ - 1) / 2);
        // The empty graph has the full symmetric group; a transposition and a
        // rotation generate it.
        if (n_ >= 2) {
            Perm64 swap01{};
            Perm64 rotate{};
            for (int v = 0; v < n_; ++v) {
                swap01[v] = static_cast<std::uint8_t>(v);
                rotate[v] = static_cast<std::uint8_t>((v + 1) % n_);
            }
            swap01[0] = 1;
            swap01[1] = 0;
            levels_[0].gens.push_back(swap01);
            if (n_ >= 3) levels_[0].gens.push_back(rotate);
        }
    }

    void run() {
        int max_edges = n_ * (n_ - 1) / 2;
        if (filter_.max_degree_exact) max_edges = std::min(max_edges, n_ * degree_cap_ / 2);
        int lo = 0;
        int hi = max_edges;
        if (filter_.connected_only) lo = std::max(lo, n_ - 1);
        if (filter_.max_degree_exact) lo = std::max(lo, degree_cap_);
        if (filter_.edge_count) {
            if (*filter_.edge_count < lo || *filter_.edge_count > hi) return;
            lo = hi = *filter_.edge_count;
        }
        for (int m = lo; m <= hi; ++m) walk(m);
    }

private:
    void walk(int m) {
        target_ = m;
        shard_depth_ = std::min(kShardDepth, m);
        // Emission shallower than the split depth happens once, in shard 0.
        if (shard_depth_ == 0 && shard_.index != 0) return;
        counter_ = 0;
        rows_.fill(0);
        visit(0);
        if (sorted_) {
            std::sort(stratum_.begin(), stratum_.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (auto& entry : stratum_) emit_(entry.second);
            stratum_.clear();
        }
    }

    int max_degree() const {
        int best = 0;
        for (int v = 0; v < n_; ++v) best = std::max(best, std::popcount(rows_[v]));
        return best;
    }

    void emit_leaf() {
        if (filter_.connected_only &&
            component_count_rows(n_, rows_.data(), all_) != 1) {
            return;
        }
        if (filter_.max_degree_exact && max_degree() != degree_cap_) return;
        Graph g = target_ == 0 ? Graph(n_) : engine_.canonical_graph();
        if (sorted_) {
            stratum_.emplace_back(graph6_encode(g), std::move(g));
        } else {
            emit_(g);
        }
    }

    // Fills levels_[depth].reps with one representative per orbit of
    // non-edges under the generators recorded for this depth.
    void nonedge_reps(int depth) {
        Level& level = levels_[depth];
        level.reps.clear();
        std::array<std::uint64_t, Graph::kMaxOrder> seen{};
        for (int u = 0; u < n_; ++u) {
            for (int v = u + 1; v < n_; ++v) {
                if ((rows_[u] >> v) & 1) continue;
                if ((seen[u] >> v) & 1) continue;
                level.reps.emplace_back(u, v);
                level.work.assign(1, {u, v});
                seen[u] |= bit(v);
                while (!level.work.empty()) {
                    auto [a, b] = level.work.back();
                    level.work.pop_back();
                    for (const Perm64& g : level.gens) {
                        auto [x, y] = norm(g[a], g[b]);
                        if ((seen[x] >> y) & 1) continue;
                        seen[x] |= bit(y);
                        level.work.emplace_back(x, y);
                    }
                }
            }
        }
    }

    void visit(int depth) {
        if (depth == target_) {
            emit_leaf();
            return;
        }
        int remaining = target_ - depth;
        if (filter_.connected_only &&
            component_count_rows(n_, rows_.data(), all_) - 1 > remaining) {
            return;
        }
        if (filter_.max_degree_exact && max_degree() + remaining < degree_cap_) return;
        nonedge_reps(depth);
        for (auto [u, v] : levels_[depth].reps) {
            if (std::popcount(rows_[u]) >= degree_cap_) continue;
            if (std::popcount(rows_[v]) >= degree_cap_) continue;
            rows_[u] |= bit(v);
            rows_[v] |= bit(u);
            engine_.run(n_, rows_.data());
            auto last = engine_.canonical_last_edge();
            if (same_pair_orbit(n_, engine_.generators(), {u, v}, last)) {
                bool descend = true;
                if (depth + 1 == shard_depth_) {
                    descend = counter_ % static_cast<std::uint64_t>(shard_.count) ==
                              static_cast<std::uint64_t>(shard_.index);
                    ++counter_;
                }
                if (descend) {
                    levels_[depth + 1].gens = engine_.generators();
                    visit(depth + 1);
                }
            }
            rows_[u] &= ~bit(v);
            rows_[v] &= ~bit(u);
        }
    }

    EnumFilter filter_;
    ShardSpec shard_;
    const std::function<void(const Graph&)>& emit_;
    bool sorted_;
    int n_ = 0;
    std::uint64_t all_ = 0;
    int degree_cap_ = 0;
    int target_ = 0;
    int shard_depth_ = 0;
    std::uint64_t counter_ = 0;
    std::array<std::uint64_t, Graph::kMaxOrder> rows_{};
    std::vector<Level> levels_;
    std::vector<std::pair<std::string, Graph>> stratum_;
    CanonEngine engine_;
};

void check_filter(const EnumFilter& filter, ShardSpec shard) {
    int cap = enumeration_cap();
    if (filter.order < 1) throw std::invalid_argument("enumerate: order must be positive");
    if (filter.order > cap) {
        throw cap_error("enumerate: order " + std::to_string(filter.order) +
                        " exceeds cap " + std::to_string(cap));
    }
    if (filter.max_degree_exact &&
        (*filter.max_degree_exact < 1 || *filter.max_degree_exact > filter.order - 1)) {
        throw std::invalid_argument("enumerate: max degree out of range");
    }
    if (filter.edge_count &&
        (*filter.edge_count < 0 ||
         *filter.edge_count > filter.order * (filter.order - 1) / 2)) {
        throw std::invalid_argument("enumerate: edge count out of range");
    }
    if (shard.count < 1 || shard.index < 0 || shard.index >= shard.count) {
        throw std::invalid_argument("enumerate: bad shard spec");
    }
}

}  // namespace

int enumeration_cap() {
    int cap = 12;
    if (const char* env = std::getenv("STEINER_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v < cap) cap = static_cast<int>(v);
    }
    return cap;
}

void generate(const EnumFilter& filter, ShardSpec shard,
              const std::function<void(const Graph&)>& emit, bool sorted) {
    check_filter(filter, shard);
    Builder(filter, shard, emit, sorted).run();
}

void generate(const EnumFilter& filter, const std::function<void(const Graph&)>& emit) {
    generate(filter, ShardSpec{}, emit);
}

std::uint64_t count(const EnumFilter& filter, ShardSpec shard) {
    std::uint64_t total = 0;
    generate(filter, shard, [&total](const Graph&) { ++total; }, /*sorted=*/false);
    return total;
}

}  // namespace sdt
