#include "sdt/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace sdt {

std::string DegreeProfile::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i)
            os << ',';
        os << degrees[i];
    }
    os << ')';
    return os.str();
}

Graph::Graph(int n) : n_(n), adj_(std::size_t(n), 0) {
    if (n < 1 || n > kMaxOrder)
        throw std::invalid_argument("graph order must be in [1, 64]");
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self-loop not allowed");
        if (g.adjacent(u, v))
            throw std::invalid_argument("duplicate edge");
        g.adj_[u] |= std::uint64_t(1) << v;
        g.adj_[v] |= std::uint64_t(1) << u;
    }
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(int n, std::span<const std::uint64_t> rows) {
    Graph g(n);
    if (int(rows.size()) != n)
        throw std::invalid_argument("row count does not match order");
    std::uint64_t vertex_mask = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    for (int v = 0; v < n; ++v) {
        if (rows[v] & ~vertex_mask)
            throw std::invalid_argument("adjacency bits above order");
        if ((rows[v] >> v) & 1u)
            throw std::invalid_argument("self-loop not allowed");
        g.adj_[v] = rows[v];
    }
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u)
            if (((g.adj_[v] >> u) & 1u) != ((g.adj_[u] >> v) & 1u))
                throw std::invalid_argument("adjacency rows not symmetric");
    return g;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v)
        total += std::popcount(adj_[v]);
    return total / 2;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

int Graph::min_degree() const {
    int best = n_;
    for (int v = 0; v < n_; ++v)
        best = std::min(best, degree(v));
    return best;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < n_; ++v) {
        std::uint64_t higher = adj_[v] >> (v + 1) << (v + 1);
        while (higher) {
            int u = std::countr_zero(higher);
            higher &= higher - 1;
            out.emplace_back(v, u);
        }
    }
    return out;
}

int component_count_rows(int /*n*/, const std::uint64_t* rows, std::uint64_t mask) {
    int comps = 0;
    std::uint64_t unseen = mask;
    while (unseen) {
        ++comps;
        std::uint64_t comp = unseen & -unseen;  // lowest unseen vertex
        for (;;) {
            std::uint64_t frontier = comp;
            std::uint64_t grown = comp;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                grown |= rows[v] & mask;
            }
            if (grown == comp)
                break;
            comp = grown;
        }
        unseen &= ~comp;
    }
    return comps;
}

bool Graph::is_connected() const {
    return component_count() == 1;
}

int Graph::component_count() const {
    std::uint64_t all = n_ == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n_) - 1;
    return component_count_rows(n_, adj_.data(), all);
}

Graph Graph::complement() const {
    Graph g(n_);
    std::uint64_t all = n_ == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n_) - 1;
    for (int v = 0; v < n_; ++v)
        g.adj_[v] = (~adj_[v] & all) & ~(std::uint64_t(1) << v);
    return g;
}

Graph Graph::permuted(std::span<const int> perm) const {
    if (int(perm.size()) != n_)
        throw std::invalid_argument("permutation length does not match order");
    std::vector<bool> seen(n_, false);
    for (int v = 0; v < n_; ++v) {
        if (perm[v] < 0 || perm[v] >= n_ || seen[perm[v]])
            throw std::invalid_argument("not a permutation");
        seen[perm[v]] = true;
    }
    Graph g(n_);
    for (int v = 0; v < n_; ++v) {
        std::uint64_t row = adj_[v];
        while (row) {
            int u = std::countr_zero(row);
            row &= row - 1;
            g.adj_[perm[v]] |= std::uint64_t(1) << perm[u];
        }
    }
    return g;
}

DegreeProfile Graph::degree_profile() const {
    DegreeProfile p;
    p.degrees.reserve(n_);
    for (int v = 0; v < n_; ++v)
        p.degrees.push_back(degree(v));
    std::sort(p.degrees.begin(), p.degrees.end());
    return p;
}

void bfs_distances(int n, const std::uint64_t* rows, int source, std::uint8_t* out) {
    std::memset(out, DistanceMatrix::kUnreachable, std::size_t(n));
    std::uint64_t visited = std::uint64_t(1) << source;
    std::uint64_t frontier = visited;
    out[source] = 0;
    std::uint8_t depth = 0;
    while (frontier) {
        ++depth;
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= rows[v];
        }
        next &= ~visited;
        std::uint64_t w = next;
        while (w) {
            int v = std::countr_zero(w);
            w &= w - 1;
            out[v] = depth;
        }
        visited |= next;
        frontier = next;
    }
}

DistanceMatrix Graph::all_pairs_distances() const {
    std::vector<std::uint8_t> d(std::size_t(n_) * n_);
    for (int v = 0; v < n_; ++v)
        bfs_distances(n_, adj_.data(), v, d.data() + std::size_t(v) * n_);
    return DistanceMatrix(n_, std::move(d));
}

}  // namespace sdt
