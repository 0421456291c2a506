#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sdt/extended_nat.hpp"
#include "sdt/graph.hpp"

namespace sdt {

/// Validated set of terminal vertices: sorted, duplicate-free, within range.
class TerminalSet {
public:
    static TerminalSet of(const Graph& g, std::vector<int> vertices);

    const std::vector<int>& vertices() const { return v_; }
    int size() const { return int(v_.size()); }

private:
    std::vector<int> v_;
};

/// Edge list of one minimum Steiner tree, pairs normalized and sorted.
struct SteinerWitness {
    std::vector<std::pair<int, int>> edges;
};

/// Minimum number of edges of a subtree containing all terminals;
/// infinity when the terminals span several components. Uses the median
/// identity for k <= 3, a spanning tree for k = n, and the subset DP for
/// 4 <= k <= 8; other k are out of scope (cap_error).
ExtendedNat steiner_distance(const Graph& g, const TerminalSet& s);
ExtendedNat steiner_distance(const Graph& g, const TerminalSet& s, SteinerWitness& witness);

/// Subset dynamic program (Dreyfus-Wagner), usable for 2 <= k <= 8.
/// Independent of the median fast path; kept public for cross-checks.
ExtendedNat steiner_distance_dp(const Graph& g, const TerminalSet& s);

/// Definitional oracle: minimum |U| - 1 over vertex sets U containing the
/// terminals whose induced subgraph is connected. Requires n <= 16.
ExtendedNat steiner_distance_oracle(const Graph& g, const TerminalSet& s);

/// Largest Steiner distance over k-sets containing v.
ExtendedNat steiner_eccentricity(const Graph& g, int v, int k);

/// Steiner k-diameter: max Steiner distance over all k-sets.
ExtendedNat sdiam(const Graph& g, int k);

/// Steiner k-radius: min over v of the Steiner k-eccentricity.
ExtendedNat srad(const Graph& g, int k);

/// Early-exit test for sdiam(g, k) <= d; the main predicate of the
/// extremal search.
bool sdiam_at_most(const Graph& g, int k, int d);

}  // namespace sdt
