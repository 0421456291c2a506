#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sdt/graph.hpp"

namespace sdt {

/// Permutation on at most 64 points; entry v is the image of v.
using Perm64 = std::array<std::uint8_t, Graph::kMaxOrder>;

struct CanonicalResult {
    Graph canonical_graph;
    std::vector<int> labeling;                 // labeling[v] = canonical position of v
    std::vector<std::vector<int>> generators;  // automorphism generators
    std::vector<int> orbit;                    // orbit[v] = smallest vertex in v's orbit
};

/// Canonical labeling by individualization-refinement.
///
/// The search tree branches on the vertices of the first non-singleton cell
/// of the refined ordered partition. Each leaf is a discrete partition; its
/// key is the sequence of node invariants along the path followed by the
/// packed adjacency string, and the canonical labeling is the leaf with the
/// minimal key. Automorphisms are read off leaves whose key matches the
/// first or the best leaf; they drive two standard prunings: orbit pruning
/// of branch candidates at nodes on the first path, and backjumping to the
/// deepest common ancestor with the first path when an automorphism is
/// found. All buffers are reused, so one engine instance can canonicalize
/// millions of graphs without allocating.
class CanonEngine {
public:
    static constexpr int kMax = Graph::kMaxOrder;
    static constexpr int kMaxWords = (kMax * (kMax - 1) / 2 + 63) / 64;

    static constexpr int pair_count(int n) { return n * (n - 1) / 2; }
    static constexpr int word_count(int n) { return (pair_count(n) + 63) / 64; }

    /// Canonicalizes the graph given by adjacency rows. `rows` must stay
    /// valid for the duration of the call only.
    void run(int n, const std::uint64_t* rows);

    int order() const { return n_; }

    /// Upper triangle of the canonical adjacency matrix in column order,
    /// packed big-endian within each word so that ascending word comparison
    /// equals graph6 string comparison.
    std::span<const std::uint64_t> canon_bits() const {
        return {best_str_.data(), std::size_t(words_)};
    }

    const Perm64& labeling() const { return best_lab_; }           // vertex -> position
    const Perm64& inverse_labeling() const { return best_pos_v_; } // position -> vertex
    const std::vector<Perm64>& generators() const { return gens_; }

    /// Smallest vertex in the automorphism orbit of v.
    int orbit_of(int v) const { return theta_[v]; }

    Graph canonical_graph() const;

    /// The edge of the canonical form with the largest packed-bit index,
    /// mapped back to the input labels. {-1, -1} for an edgeless graph.
    std::pair<int, int> canonical_last_edge() const;

private:
    struct Part {
        std::array<std::uint8_t, kMax> pos_to_v;
        std::array<std::uint8_t, kMax> cell_start;  // per position
        std::array<std::uint8_t, kMax> cell_size;   // valid at cell start positions
    };

    void refine(Part& p);
    std::uint64_t invariant(const Part& p);
    void build_string(const Part& p, std::uint64_t* str) const;
    int cmp_words(const std::uint64_t* a, const std::uint64_t* b) const;
    bool prefix_eq_first(int depth) const;
    int cmp_prefix_best(int depth) const;
    int dfs(const Part& p, int depth, int div);
    int leaf(const Part& p, int depth, int div);
    void record_generator(const Part& p, const Perm64& ref_lab);
    int find(int v);
    void unite(int a, int b);

    int n_ = 0;
    int words_ = 0;
    const std::uint64_t* rows_ = nullptr;

    bool have_first_ = false;
    int first_depth_ = 0;
    int best_depth_ = 0;
    std::array<std::uint64_t, kMax + 2> path_inv_{};
    std::array<std::uint64_t, kMax + 2> first_inv_{};
    std::array<std::uint64_t, kMax + 2> best_inv_{};
    std::array<std::uint8_t, kMax + 2> first_branch_{};
    std::array<std::uint64_t, kMaxWords> cur_str_{};
    std::array<std::uint64_t, kMaxWords> first_str_{};
    std::array<std::uint64_t, kMaxWords> best_str_{};
    Perm64 first_lab_{}, first_pos_v_{}, best_lab_{}, best_pos_v_{};
    std::vector<Perm64> gens_;
    std::array<std::uint8_t, kMax> theta_{};  // union-find over vertices

    // refinement scratch
    std::array<int, kMax> starts_{};
    std::array<std::uint64_t, kMax> masks_{};
    std::array<std::array<std::uint8_t, kMax>, kMax> sig_{};
};

/// Full canonicalization of a graph value.
CanonicalResult canonicalize(const Graph& g);

/// Opaque byte string; two graphs get the same string iff isomorphic.
std::string canonical_form(const Graph& g);

/// Whether unordered pairs a and b lie in one orbit of the group generated
/// by `gens`.
bool same_pair_orbit(int n, std::span<const Perm64> gens, std::pair<int, int> a,
                     std::pair<int, int> b);

}  // namespace sdt
