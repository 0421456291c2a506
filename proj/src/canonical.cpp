#include "sdt/canonical.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstring>

namespace sdt {

namespace {

constexpr int kNoJump = INT_MAX;

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    v *= 0x9e3779b97f4a7c15ull;
    v ^= v >> 29;
    h ^= v;
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 32;
    return h;
}

}  // namespace

int CanonEngine::find(int v) {
    while (theta_[v] != v) {
        theta_[v] = theta_[theta_[v]];
        v = theta_[v];
    }
    return v;
}

void CanonEngine::unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b)
        return;
    if (a > b)
        std::swap(a, b);
    theta_[b] = std::uint8_t(a);  // keep the smallest vertex as representative
}

void CanonEngine::refine(Part& p) {
    for (;;) {
        int cell_cnt = 0;
        for (int s = 0; s < n_;) {
            int sz = p.cell_size[s];
            starts_[cell_cnt] = s;
            std::uint64_t m = 0;
            for (int i = 0; i < sz; ++i)
                m |= std::uint64_t(1) << p.pos_to_v[s + i];
            masks_[cell_cnt] = m;
            ++cell_cnt;
            s += sz;
        }
        bool split_done = false;
        for (int ci = 0; ci < cell_cnt && !split_done; ++ci) {
            int s = starts_[ci], sz = p.cell_size[s];
            if (sz == 1)
                continue;
            bool all_equal = true;
            for (int i = 0; i < sz; ++i) {
                int v = p.pos_to_v[s + i];
                for (int cj = 0; cj < cell_cnt; ++cj)
                    sig_[i][cj] = std::uint8_t(std::popcount(rows_[v] & masks_[cj]));
                if (i && all_equal &&
                    std::memcmp(sig_[i].data(), sig_[0].data(), std::size_t(cell_cnt)))
                    all_equal = false;
            }
            if (all_equal)
                continue;
            std::array<std::uint8_t, kMax> idx;
            for (int i = 0; i < sz; ++i)
                idx[i] = std::uint8_t(i);
            std::sort(idx.begin(), idx.begin() + sz, [&](std::uint8_t a, std::uint8_t b) {
                int c = std::memcmp(sig_[a].data(), sig_[b].data(), std::size_t(cell_cnt));
                return c ? c < 0 : a < b;
            });
            std::array<std::uint8_t, kMax> ordered;
            for (int i = 0; i < sz; ++i)
                ordered[i] = p.pos_to_v[s + idx[i]];
            for (int i = 0; i < sz; ++i)
                p.pos_to_v[s + i] = ordered[i];
            int gs = 0;
            for (int i = 1; i <= sz; ++i) {
                if (i == sz ||
                    std::memcmp(sig_[idx[i]].data(), sig_[idx[gs]].data(), std::size_t(cell_cnt))) {
                    for (int j = gs; j < i; ++j)
                        p.cell_start[s + j] = std::uint8_t(s + gs);
                    p.cell_size[s + gs] = std::uint8_t(i - gs);
                    gs = i;
                }
            }
            split_done = true;
        }
        if (!split_done)
            return;
    }
}

std::uint64_t CanonEngine::invariant(const Part& p) {
    int cell_cnt = 0;
    for (int s = 0; s < n_;) {
        int sz = p.cell_size[s];
        starts_[cell_cnt] = s;
        std::uint64_t m = 0;
        for (int i = 0; i < sz; ++i)
            m |= std::uint64_t(1) << p.pos_to_v[s + i];
        masks_[cell_cnt] = m;
        ++cell_cnt;
        s += sz;
    }
    std::uint64_t h = 0x2545f4914f6cdd1dull;
    for (int i = 0; i < cell_cnt; ++i) {
        h = mix(h, std::uint64_t(p.cell_size[starts_[i]]));
        // The partition is equitable here, so the first member represents
        // its cell in the quotient.
        int u = p.pos_to_v[starts_[i]];
        for (int j = 0; j < cell_cnt; ++j)
            h = mix(h, std::uint64_t(std::popcount(rows_[u] & masks_[j])));
    }
    // Low bit marks a discrete partition; key comparisons rely on it to
    // never run past a recorded leaf depth while still tied.
    return (h << 1) | std::uint64_t(cell_cnt == n_ ? 1 : 0);
}

void CanonEngine::build_string(const Part& p, std::uint64_t* str) const {
    std::memset(str, 0, std::size_t(words_) * 8);
    int bit = 0;
    for (int c = 1; c < n_; ++c) {
        std::uint64_t rowc = rows_[p.pos_to_v[c]];
        for (int r = 0; r < c; ++r, ++bit)
            if ((rowc >> p.pos_to_v[r]) & 1u)
                str[bit >> 6] |= std::uint64_t(1) << (63 - (bit & 63));
    }
}

int CanonEngine::cmp_words(const std::uint64_t* a, const std::uint64_t* b) const {
    for (int i = 0; i < words_; ++i)
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    return 0;
}

bool CanonEngine::prefix_eq_first(int depth) const {
    if (depth > first_depth_)
        return false;
    for (int i = 0; i <= depth; ++i)
        if (path_inv_[i] != first_inv_[i])
            return false;
    return true;
}

int CanonEngine::cmp_prefix_best(int depth) const {
    int lim = std::min(depth, best_depth_);
    for (int i = 0; i <= lim; ++i)
        if (path_inv_[i] != best_inv_[i])
            return path_inv_[i] < best_inv_[i] ? -1 : 1;
    return 0;
}

int CanonEngine::leaf(const Part& p, int depth, int div) {
    build_string(p, cur_str_.data());
    if (!have_first_) {
        have_first_ = true;
        first_depth_ = best_depth_ = depth;
        std::copy(path_inv_.begin(), path_inv_.begin() + depth + 1, first_inv_.begin());
        std::copy(path_inv_.begin(), path_inv_.begin() + depth + 1, best_inv_.begin());
        std::copy(cur_str_.begin(), cur_str_.begin() + words_, first_str_.begin());
        std::copy(cur_str_.begin(), cur_str_.begin() + words_, best_str_.begin());
        for (int i = 0; i < n_; ++i)
            first_pos_v_[i] = p.pos_to_v[i];
        for (int i = 0; i < n_; ++i)
            first_lab_[first_pos_v_[i]] = std::uint8_t(i);
        best_lab_ = first_lab_;
        best_pos_v_ = first_pos_v_;
        return kNoJump;
    }
    if (depth == first_depth_ && prefix_eq_first(depth) &&
        cmp_words(cur_str_.data(), first_str_.data()) == 0) {
        record_generator(p, first_lab_);
        // Backjump: the remainder of the subtree rooted where this path left
        // the first path is the automorphic image of an explored region.
        return div >= 0 ? div : kNoJump;
    }
    int c = cmp_prefix_best(depth);
    if (c == 0)
        c = cmp_words(cur_str_.data(), best_str_.data());
    if (c < 0) {
        best_depth_ = depth;
        std::copy(path_inv_.begin(), path_inv_.begin() + depth + 1, best_inv_.begin());
        std::copy(cur_str_.begin(), cur_str_.begin() + words_, best_str_.begin());
        for (int i = 0; i < n_; ++i)
            best_pos_v_[i] = p.pos_to_v[i];
        for (int i = 0; i < n_; ++i)
            best_lab_[best_pos_v_[i]] = std::uint8_t(i);
    } else if (c == 0) {
        record_generator(p, best_lab_);
    }
    return kNoJump;
}

void CanonEngine::record_generator(const Part& p, const Perm64& ref_lab) {
    Perm64 g;
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
        g[v] = p.pos_to_v[ref_lab[v]];
        if (g[v] != v)
            identity = false;
    }
    if (identity)
        return;
    gens_.push_back(g);
    for (int v = 0; v < n_; ++v)
        unite(v, g[v]);
}

int CanonEngine::dfs(const Part& p, int depth, int div) {
    int s = -1;
    for (int q = 0; q < n_;) {
        int sz = p.cell_size[q];
        if (sz > 1) {
            s = q;
            break;
        }
        q += sz;
    }
    if (s < 0)
        return leaf(p, depth, div);

    int sz = p.cell_size[s];
    std::array<std::uint8_t, kMax> cand;
    for (int i = 0; i < sz; ++i)
        cand[i] = p.pos_to_v[s + i];
    std::array<std::uint8_t, kMax> processed;
    int processed_cnt = 0;

    for (int i = 0; i < sz; ++i) {
        int v = cand[i];
        if (div < 0 && have_first_) {
            // On the first path every automorphism found so far has both of
            // its defining leaves inside this subtree, so the accumulated
            // orbit partition may prune equivalent branch candidates.
            bool skip = false;
            int rv = find(v);
            for (int t = 0; t < processed_cnt && !skip; ++t)
                if (find(processed[t]) == rv)
                    skip = true;
            if (skip)
                continue;
        }
        Part child = p;
        {
            int at = s;
            while (child.pos_to_v[at] != v)
                ++at;
            for (int q = at; q > s; --q)
                child.pos_to_v[q] = child.pos_to_v[q - 1];
            child.pos_to_v[s] = std::uint8_t(v);
            child.cell_start[s] = std::uint8_t(s);
            child.cell_size[s] = 1;
            for (int q = s + 1; q < s + sz; ++q)
                child.cell_start[q] = std::uint8_t(s + 1);
            child.cell_size[s + 1] = std::uint8_t(sz - 1);
        }
        refine(child);
        path_inv_[depth + 1] = invariant(child);

        int child_div;
        if (!have_first_) {
            first_branch_[depth] = std::uint8_t(v);
            child_div = -1;
        } else {
            bool on_first = prefix_eq_first(depth + 1);
            if (cmp_prefix_best(depth + 1) > 0 && !on_first)
                continue;  // cannot contain the canonical leaf nor a first collision
            child_div = div >= 0 ? div : (v == first_branch_[depth] ? -1 : depth);
        }
        int ret = dfs(child, depth + 1, child_div);
        if (ret != kNoJump && ret < depth)
            return ret;
        processed[processed_cnt++] = std::uint8_t(v);
    }
    return kNoJump;
}

void CanonEngine::run(int n, const std::uint64_t* rows) {
    n_ = n;
    rows_ = rows;
    words_ = word_count(n);
    have_first_ = false;
    first_depth_ = best_depth_ = 0;
    gens_.clear();
    if (words_ == 0)
        best_str_[0] = 0;
    for (int v = 0; v < n; ++v)
        theta_[v] = std::uint8_t(v);

    Part root;
    for (int i = 0; i < n; ++i)
        root.pos_to_v[i] = std::uint8_t(i);
    for (int i = 0; i < n; ++i)
        root.cell_start[i] = 0;
    root.cell_size[0] = std::uint8_t(n);
    refine(root);
    path_inv_[0] = invariant(root);
    dfs(root, 0, -1);

    for (int v = 0; v < n; ++v)
        theta_[v] = std::uint8_t(find(v));
    rows_ = nullptr;
}

Graph CanonEngine::canonical_graph() const {
    std::vector<std::pair<int, int>> es;
    int bit = 0;
    for (int c = 1; c < n_; ++c)
        for (int r = 0; r < c; ++r, ++bit)
            if ((best_str_[bit >> 6] >> (63 - (bit & 63))) & 1u)
                es.emplace_back(r, c);
    return Graph::from_edges(n_, es);
}

std::pair<int, int> CanonEngine::canonical_last_edge() const {
    for (int w = words_ - 1; w >= 0; --w) {
        if (!best_str_[w])
            continue;
        int p = w * 64 + (63 - std::countr_zero(best_str_[w]));
        int c = 1;
        while ((c + 1) * c / 2 <= p)
            ++c;
        int r = p - c * (c - 1) / 2;
        return {best_pos_v_[r], best_pos_v_[c]};
    }
    return {-1, -1};
}

CanonicalResult canonicalize(const Graph& g) {
    CanonEngine e;
    e.run(g.order(), g.rows());
    CanonicalResult r;
    r.canonical_graph = e.canonical_graph();
    r.labeling.resize(g.order());
    for (int v = 0; v < g.order(); ++v)
        r.labeling[v] = e.labeling()[v];
    for (const auto& gen : e.generators()) {
        std::vector<int> copy(g.order());
        for (int v = 0; v < g.order(); ++v)
            copy[v] = gen[v];
        r.generators.push_back(std::move(copy));
    }
    r.orbit.resize(g.order());
    for (int v = 0; v < g.order(); ++v)
        r.orbit[v] = e.orbit_of(v);
    return r;
}

std::string canonical_form(const Graph& g) {
    CanonEngine e;
    e.run(g.order(), g.rows());
    std::string s;
    s.push_back(char(g.order()));
    for (auto w : e.canon_bits())
        for (int b = 56; b >= 0; b -= 8)
            s.push_back(char((w >> b) & 0xff));
    return s;
}

bool same_pair_orbit(int n, std::span<const Perm64> gens, std::pair<int, int> a,
                     std::pair<int, int> b) {
    (void)n;
    auto norm = [](std::pair<int, int> p) {
        if (p.first > p.second)
            std::swap(p.first, p.second);
        return p;
    };
    a = norm(a);
    b = norm(b);
    if (a == b)
        return true;
    if (gens.empty())
        return false;
    std::array<std::uint64_t, Graph::kMaxOrder> seen{};
    std::vector<std::pair<int, int>> stack;
    seen[a.first] |= std::uint64_t(1) << a.second;
    stack.push_back(a);
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        for (const auto& g : gens) {
            auto q = norm({g[x], g[y]});
            if (q == b)
                return true;
            if (!((seen[q.first] >> q.second) & 1u)) {
                seen[q.first] |= std::uint64_t(1) << q.second;
                stack.push_back(q);
            }
        }
    }
    return false;
}

}  // namespace sdt
