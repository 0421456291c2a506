#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sdt/graph.hpp"

namespace sdt {

/// Parameterized graph constructions used as witnesses and search seeds.
/// Each alternative documents its vertex numbering in build_family().
namespace family {

struct Path {
    int n;
};
struct Cycle {
    int n;
};
struct Star {
    int n;
};
struct Complete {
    int n;
};
/// Complete multipartite; parts are normalized ascending.
struct Multipartite {
    std::vector<int> parts;
};
/// K_n minus a matching of the given size.
struct CompleteMinusMatching {
    int n;
    int matching;
};
/// Star of order max_degree whose center also starts a path; the unique
/// tree with this degree and n - max_degree + 1 leaves... concretely a
/// "broom": center with max_degree - 1 pendant leaves plus a tail path.
struct Broom {
    int n;
    int max_degree;
};
/// Three paths of lengths a <= b <= c glued at one center vertex.
struct Spider {
    int a, b, c;
};
/// Triangle with three pendant paths of lengths a <= b <= c.
struct TriangleSpider {
    int a, b, c;
};
/// Two pendant-leaf bundles (a and c leaves) at the ends of a path on b
/// vertices.
struct DoubleBroom {
    int a, b, c;
};
/// Path on x vertices with two 3-star centers attached at the first vertex
/// and y pendant leaves at the last; order x + y + 6.
struct DoubleClawTail {
    int x, y;
};
/// Hub u adjacent to all of x_1..x_{n-3}; v adjacent to x_1..x_r, w to the
/// rest, plus the edge vw. 2n - 5 edges, Steiner 3-diameter 3.
struct TwoCenter {
    int n;
    int r;
};
/// Complete bipartite K_{2, n-2} minus one edge at the second hub.
struct K2mMinusEdge {
    int n;
};
/// Cycle plus explicit chords.
struct ChordedCycle {
    int n;
    std::vector<std::pair<int, int>> chords;
};
/// Clique on p + q vertices (two named halves U, W) with a tail path; v_1
/// joins all of U, v_2 all of W, and v_2..v_{d-1} form a path. Realizes
/// small size for Steiner 3-diameter at most d with maximum degree p + q.
struct LayeredClique {
    int p, q, d;
};

}  // namespace family

using FamilySpec =
    std::variant<family::Path, family::Cycle, family::Star, family::Complete,
                 family::Multipartite, family::CompleteMinusMatching, family::Broom,
                 family::Spider, family::TriangleSpider, family::DoubleBroom,
                 family::DoubleClawTail, family::TwoCenter, family::K2mMinusEdge,
                 family::ChordedCycle, family::LayeredClique>;

/// Closed-form properties of a family member; sdiam3 may be exact or only
/// an upper bound depending on the family.
struct FamilyProperties {
    int order = 0;
    int edge_count = 0;
    int max_degree = 0;
    std::optional<int> sdiam3_exact;
    std::optional<int> sdiam3_upper;
};

/// Validates parameters and constructs the graph.
Graph build_family(const FamilySpec& spec);

FamilyProperties expected_properties(const FamilySpec& spec);

/// Text form, e.g. "cycle:9", "tabc:1,2,3", "kmm:7,3", "layered:3,3,5",
/// "chorded:9:0-4,2-6". parse_family round-trips format_family.
FamilySpec parse_family(std::string_view text);
std::string format_family(const FamilySpec& spec);

}  // namespace sdt
