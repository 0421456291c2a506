#include "sdt/steiner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace sdt {

namespace {

constexpr std::uint16_t kInf16 = 0x3fff;
constexpr int kMaxDp = 8;  // largest terminal count handled by the subset DP

void check_k(const Graph& g, int k) {
    if (k < 2 || k > g.order())
        throw std::invalid_argument("terminal count must be in [2, n]");
    if (k > kMaxDp && k != g.order())
        throw cap_error("Steiner sets larger than 8 terminals are out of scope");
}

std::uint16_t dist16(const DistanceMatrix& d, int u, int v) {
    std::uint8_t r = d.raw(u, v);
    return r == DistanceMatrix::kUnreachable ? kInf16 : r;
}

bool same_component(const DistanceMatrix& d, std::span<const int> ts) {
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (d.raw(ts[0], ts[i]) == DistanceMatrix::kUnreachable)
            return false;
    return true;
}

/// Median identity: for |S| <= 3 the Steiner distance is the minimum over
/// vertices of the sum of distances to the terminals. Returns the best sum
/// and, optionally, the minimizing vertex.
std::uint16_t median_value(const DistanceMatrix& d, std::span<const int> ts, int* median) {
    int n = d.order();
    std::uint16_t best = kInf16;
    for (int v = 0; v < n; ++v) {
        std::uint16_t sum = 0;
        for (int t : ts)
            sum = std::uint16_t(std::min<int>(kInf16, sum + dist16(d, t, v)));
        if (sum < best) {
            best = sum;
            if (median)
                *median = v;
        }
    }
    return best;
}

/// Dreyfus-Wagner tables for the terminal set ts (k >= 2): dp[S][v] is the
/// minimum size of a tree containing v and the terminals indexed by the
/// subset S of ts[0..k-2]. The answer is dp[full][ts[k-1]].
struct DpTables {
    int n = 0;
    int groups = 0;
    std::vector<std::uint16_t> dp;  // groups x n

    std::uint16_t& at(int s, int v) { return dp[std::size_t(s) * n + v]; }
    std::uint16_t at(int s, int v) const { return dp[std::size_t(s) * n + v]; }

    void fill(const Graph& g, const DistanceMatrix& d, std::span<const int> ts) {
        n = g.order();
        int k1 = int(ts.size()) - 1;
        groups = 1 << k1;
        dp.assign(std::size_t(groups) * n, kInf16);
        for (int i = 0; i < k1; ++i)
            for (int v = 0; v < n; ++v)
                at(1 << i, v) = dist16(d, ts[i], v);
        std::vector<std::uint16_t> tmp(n);
        for (int s = 1; s < groups; ++s) {
            if (std::popcount(unsigned(s)) < 2)
                continue;
            for (int v = 0; v < n; ++v) {
                std::uint16_t best = kInf16;
                // each split {u, s^u} is seen once: keep the side holding
                // the lowest bit
                int low = s & -s;
                for (int u = (s - 1) & s; u; u = (u - 1) & s) {
                    if (!(u & low))
                        continue;
                    std::uint16_t c = std::uint16_t(
                        std::min<int>(kInf16, at(u, v) + at(s ^ u, v)));
                    best = std::min(best, c);
                }
                tmp[v] = best;
            }
            for (int v = 0; v < n; ++v) {
                std::uint16_t best = tmp[v];
                for (int u = 0; u < n; ++u) {
                    if (tmp[u] >= best)
                        continue;
                    std::uint16_t c = std::uint16_t(
                        std::min<int>(kInf16, tmp[u] + dist16(d, u, v)));
                    best = std::min(best, c);
                }
                at(s, v) = best;
            }
        }
    }
};

/// Deterministic shortest path from src to t; appends its edges.
void add_path_edges(const Graph& g, const DistanceMatrix& d, int src, int t,
                    std::set<std::pair<int, int>>& out) {
    int cur = t;
    while (cur != src) {
        int dc = d.raw(src, cur);
        int next = -1;
        std::uint64_t nb = g.neighbors(cur);
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (d.raw(src, u) == dc - 1) {
                next = u;
                break;  // neighbors scan ascending, so the smallest wins
            }
        }
        out.insert(std::minmax(cur, next));
        cur = next;
    }
}

void dp_rebuild(const Graph& g, const DistanceMatrix& d, const DpTables& t,
                std::span<const int> ts, int s, int v,
                std::set<std::pair<int, int>>& out) {
    if (std::popcount(unsigned(s)) == 1) {
        add_path_edges(g, d, ts[std::countr_zero(unsigned(s))], v, out);
        return;
    }
    int low = s & -s;
    for (int u = (s - 1) & s; u; u = (u - 1) & s) {
        if (!(u & low))
            continue;
        if (int(t.at(u, v)) + int(t.at(s ^ u, v)) == int(t.at(s, v))) {
            dp_rebuild(g, d, t, ts, u, v, out);
            dp_rebuild(g, d, t, ts, s ^ u, v, out);
            return;
        }
    }
    std::uint64_t nb = g.neighbors(v);
    while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (int(t.at(s, u)) + 1 == int(t.at(s, v))) {
            out.insert(std::minmax(u, v));
            dp_rebuild(g, d, t, ts, s, u, out);
            return;
        }
    }
    throw std::logic_error("Steiner DP reconstruction found no step");
}

/// Spanning tree (BFS forest restricted to one component) for the k = n case.
std::uint16_t spanning_value(const Graph& g, const DistanceMatrix& d,
                             std::set<std::pair<int, int>>* out) {
    if (component_count_rows(g.order(), g.rows(),
                             g.order() == 64 ? ~std::uint64_t(0)
                                             : (std::uint64_t(1) << g.order()) - 1) != 1)
        return kInf16;
    if (out)
        for (int v = 1; v < g.order(); ++v)
            add_path_edges(g, d, 0, v, *out);
    return std::uint16_t(g.order() - 1);
}

void validate_witness(const Graph& g, std::span<const int> ts, int value,
                      const std::set<std::pair<int, int>>& edges) {
    if (int(edges.size()) != value)
        throw std::logic_error("Steiner witness has wrong edge count");
    std::uint64_t vs = 0;
    for (auto [a, b] : edges) {
        if (!g.adjacent(a, b))
            throw std::logic_error("Steiner witness uses a non-edge");
        vs |= std::uint64_t(1) << a;
        vs |= std::uint64_t(1) << b;
    }
    for (int t : ts)
        vs |= std::uint64_t(1) << t;
    // a connected subgraph with |V|-1 edges is a tree
    if (std::popcount(vs) != value + 1)
        throw std::logic_error("Steiner witness vertex count mismatch");
    std::array<std::uint64_t, Graph::kMaxOrder> rows{};
    for (auto [a, b] : edges) {
        rows[a] |= std::uint64_t(1) << b;
        rows[b] |= std::uint64_t(1) << a;
    }
    if (component_count_rows(g.order(), rows.data(), vs) != 1)
        throw std::logic_error("Steiner witness not connected");
}

ExtendedNat distance_impl(const Graph& g, const TerminalSet& s, SteinerWitness* w) {
    const auto& ts = s.vertices();
    int k = int(ts.size());
    check_k(g, k);
    DistanceMatrix d = g.all_pairs_distances();
    if (!same_component(d, ts))
        return ExtendedNat::infinity();

    std::set<std::pair<int, int>> edges;
    std::uint16_t value;
    if (k <= 3) {
        int median = -1;
        value = median_value(d, ts, &median);
        if (w)
            for (int t : ts)
                add_path_edges(g, d, median, t, edges);
    } else if (k == g.order()) {
        value = spanning_value(g, d, w ? &edges : nullptr);
    } else {
        DpTables t;
        t.fill(g, d, ts);
        value = t.at(t.groups - 1, ts[k - 1]);
        if (w)
            dp_rebuild(g, d, t, ts, t.groups - 1, ts[k - 1], edges);
    }
    if (w) {
        validate_witness(g, ts, value, edges);
        w->edges.assign(edges.begin(), edges.end());
    }
    return ExtendedNat::finite(value);
}

}  // namespace

TerminalSet TerminalSet::of(const Graph& g, std::vector<int> vertices) {
    for (int v : vertices)
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("terminal out of range");
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw std::invalid_argument("duplicate terminal");
    if (int(vertices.size()) < 2)
        throw std::invalid_argument("terminal count must be in [2, n]");
    TerminalSet t;
    t.v_ = std::move(vertices);
    return t;
}

ExtendedNat steiner_distance(const Graph& g, const TerminalSet& s) {
    return distance_impl(g, s, nullptr);
}

ExtendedNat steiner_distance(const Graph& g, const TerminalSet& s, SteinerWitness& witness) {
    witness.edges.clear();
    SteinerWitness w;
    ExtendedNat r = distance_impl(g, s, &w);
    witness = std::move(w);
    return r;
}

ExtendedNat steiner_distance_dp(const Graph& g, const TerminalSet& s) {
    const auto& ts = s.vertices();
    int k = int(ts.size());
    if (k < 2 || k > g.order())
        throw std::invalid_argument("terminal count must be in [2, n]");
    if (k > kMaxDp)
        throw cap_error("subset DP handles at most 8 terminals");
    DistanceMatrix d = g.all_pairs_distances();
    if (!same_component(d, ts))
        return ExtendedNat::infinity();
    DpTables t;
    t.fill(g, d, ts);
    return ExtendedNat::finite(t.at(t.groups - 1, ts[k - 1]));
}

ExtendedNat steiner_distance_oracle(const Graph& g, const TerminalSet& s) {
    int n = g.order();
    if (n > 16)
        throw cap_error("definitional oracle requires order <= 16");
    std::uint64_t terminals = 0;
    for (int t : s.vertices())
        terminals |= std::uint64_t(1) << t;
    int best = -1;
    std::uint64_t all = (std::uint64_t(1) << n) - 1;
    for (std::uint64_t u = terminals;; u = (u + 1) | terminals) {
        if ((u & terminals) == terminals &&
            component_count_rows(n, g.rows(), u) == 1) {
            int size = std::popcount(u) - 1;
            if (best < 0 || size < best)
                best = size;
        }
        if (u == all)
            break;
    }
    return best < 0 ? ExtendedNat::infinity() : ExtendedNat::finite(best);
}

ExtendedNat steiner_eccentricity(const Graph& g, int v, int k) {
    check_k(g, k);
    if (v < 0 || v >= g.order())
        throw std::invalid_argument("vertex out of range");
    if (!g.is_connected())
        return ExtendedNat::infinity();
    DistanceMatrix d = g.all_pairs_distances();
    int n = g.order();
    std::vector<int> others;
    for (int u = 0; u < n; ++u)
        if (u != v)
            others.push_back(u);
    std::vector<int> pick(k - 1);
    std::vector<int> ts(k);
    std::uint16_t worst = 0;
    for (int i = 0; i < k - 1; ++i)
        pick[i] = i;
    DpTables t;
    for (;;) {
        for (int i = 0; i < k - 1; ++i)
            ts[i] = others[pick[i]];
        ts[k - 1] = v;
        std::sort(ts.begin(), ts.end());
        std::uint16_t val;
        if (k <= 3) {
            val = median_value(d, ts, nullptr);
        } else if (k == n) {
            val = std::uint16_t(n - 1);
        } else {
            t.fill(g, d, ts);
            val = t.at(t.groups - 1, ts[k - 1]);
        }
        worst = std::max(worst, val);
        int i = k - 2;
        while (i >= 0 && pick[i] == int(others.size()) - (k - 1) + i)
            --i;
        if (i < 0)
            break;
        ++pick[i];
        for (int j = i + 1; j < k - 1; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    return ExtendedNat::finite(worst);
}

namespace {

/// Runs fn over every k-subset with the subset's Steiner distance.
template <typename Fn>
void for_each_set_distance(const Graph& g, int k, Fn fn) {
    int n = g.order();
    DistanceMatrix d = g.all_pairs_distances();
    std::vector<int> ts(k);
    DpTables t;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i)
        pick[i] = i;
    for (;;) {
        for (int i = 0; i < k; ++i)
            ts[i] = pick[i];
        std::uint16_t val;
        if (k <= 3) {
            val = median_value(d, ts, nullptr);
        } else if (k == n) {
            val = std::uint16_t(n - 1);
        } else {
            t.fill(g, d, ts);
            val = t.at(t.groups - 1, ts[k - 1]);
        }
        if (!fn(std::span<const int>(ts), val))
            return;
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

ExtendedNat sdiam(const Graph& g, int k) {
    check_k(g, k);
    if (!g.is_connected())
        return ExtendedNat::infinity();
    std::uint16_t worst = 0;
    for_each_set_distance(g, k, [&](std::span<const int>, std::uint16_t val) {
        worst = std::max(worst, val);
        return true;
    });
    return ExtendedNat::finite(worst);
}

ExtendedNat srad(const Graph& g, int k) {
    check_k(g, k);
    if (!g.is_connected())
        return ExtendedNat::infinity();
    std::vector<std::uint16_t> ecc(g.order(), 0);
    for_each_set_distance(g, k, [&](std::span<const int> ts, std::uint16_t val) {
        for (int t : ts)
            ecc[t] = std::max(ecc[t], val);
        return true;
    });
    return ExtendedNat::finite(*std::min_element(ecc.begin(), ecc.end()));
}

bool sdiam_at_most(const Graph& g, int k, int d) {
    check_k(g, k);
    if (d < 0)
        return false;
    if (!g.is_connected())
        return false;
    if (k == 3) {
        // hot path of the extremal search: median identity with early exit
        DistanceMatrix dm = g.all_pairs_distances();
        int n = g.order();
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    const std::uint8_t* da = dm.row(a);
                    const std::uint8_t* db = dm.row(b);
                    const std::uint8_t* dc = dm.row(c);
                    int best = kInf16;
                    for (int v = 0; v < n && best > d; ++v)
                        best = std::min(best, int(da[v]) + int(db[v]) + int(dc[v]));
                    if (best > d)
                        return false;
                }
        return true;
    }
    bool ok = true;
    for_each_set_distance(g, k, [&](std::span<const int>, std::uint16_t val) {
        if (val > d) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

}  // namespace sdt
