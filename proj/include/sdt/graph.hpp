#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sdt/extended_nat.hpp"

namespace sdt {

/// Raised when an input exceeds a documented size cap (as opposed to being
/// malformed). The CLI maps this to its own exit code.
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sorted degree multiset of a graph, ascending.
struct DegreeProfile {
    std::vector<int> degrees;

    int max_degree() const { return degrees.empty() ? 0 : degrees.back(); }
    int min_degree() const { return degrees.empty() ? 0 : degrees.front(); }
    bool operator==(const DegreeProfile&) const = default;
    std::string to_string() const;
};

/// All-pairs distance table. Entries are BFS distances; unreachable pairs are
/// reported as ExtendedNat::infinity().
class DistanceMatrix {
public:
    static constexpr std::uint8_t kUnreachable = 0xff;

    DistanceMatrix() : n_(0) {}
    DistanceMatrix(int n, std::vector<std::uint8_t> d) : n_(n), d_(std::move(d)) {}

    int order() const { return n_; }

    ExtendedNat at(int u, int v) const {
        std::uint8_t r = raw(u, v);
        return r == kUnreachable ? ExtendedNat::infinity()
                                 : ExtendedNat::finite(r);
    }

    /// Raw distance byte; kUnreachable for disconnected pairs.
    std::uint8_t raw(int u, int v) const { return d_[std::size_t(u) * n_ + v]; }

    const std::uint8_t* row(int u) const { return d_.data() + std::size_t(u) * n_; }

private:
    int n_;
    std::vector<std::uint8_t> d_;
};

/// Simple undirected graph on at most 64 vertices. One adjacency row per
/// vertex, packed into a machine word; a value type, never mutated after
/// construction.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    Graph() = default;
    explicit Graph(int n);

    /// Builds a graph from an edge list. Rejects out-of-range endpoints and
    /// self-loops; duplicate edges are rejected as well.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    /// Rebuilds a graph directly from adjacency rows (must be symmetric,
    /// loop-free and zero above bit n). Used by internal generators.
    static Graph from_rows(int n, std::span<const std::uint64_t> rows);

    int order() const { return n_; }
    int edge_count() const;
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
    std::uint64_t neighbors(int v) const { return adj_[v]; }
    int degree(int v) const;
    int max_degree() const;
    int min_degree() const;

    std::vector<std::pair<int, int>> edges() const;

    bool is_connected() const;
    int component_count() const;

    Graph complement() const;

    /// Relabels vertices: vertex v becomes perm[v].
    Graph permuted(std::span<const int> perm) const;

    DegreeProfile degree_profile() const;
    DistanceMatrix all_pairs_distances() const;

    const std::uint64_t* rows() const { return adj_.data(); }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

/// BFS distances from one source, on raw adjacency rows.
void bfs_distances(int n, const std::uint64_t* rows, int source, std::uint8_t* out);

/// Connected-component count on raw adjacency rows over the vertex set
/// `mask`.
int component_count_rows(int n, const std::uint64_t* rows, std::uint64_t mask);

}  // namespace sdt
