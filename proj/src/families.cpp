#include "sdt/families.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sdt {

namespace {

using Edges = std::vector<std::pair<int, int>>;

void require(bool ok, const char* msg) {
    if (!ok)
        throw std::invalid_argument(msg);
}

void check_order(long long n) {
    require(n >= 1 && n <= Graph::kMaxOrder, "family order out of range [1, 64]");
}

/// Appends a path v0-v1-...-v_{len} hanging off `from`, using fresh vertex
/// ids starting at `next`; returns the id after the last one used.
int attach_path(Edges& e, int from, int len, int next) {
    int prev = from;
    for (int i = 0; i < len; ++i) {
        e.emplace_back(prev, next);
        prev = next++;
    }
    return next;
}

int spider_legs(const family::Spider& s) {
    return (s.a >= 1) + (s.b >= 1) + (s.c >= 1);
}

}  // namespace

Graph build_family(const FamilySpec& spec) {
    return std::visit(
        [](const auto& f) -> Graph {
            using T = std::decay_t<decltype(f)>;
            Edges e;
            if constexpr (std::is_same_v<T, family::Path>) {
                check_order(f.n);
                for (int i = 0; i + 1 < f.n; ++i)
                    e.emplace_back(i, i + 1);
                return Graph::from_edges(f.n, e);
            } else if constexpr (std::is_same_v<T, family::Cycle>) {
                require(f.n >= 3, "cycle needs order >= 3");
                check_order(f.n);
                for (int i = 0; i < f.n; ++i)
                    e.emplace_back(i, (i + 1) % f.n);
                return Graph::from_edges(f.n, e);
            } else if constexpr (std::is_same_v<T, family::Star>) {
                check_order(f.n);
                for (int i = 1; i < f.n; ++i)
                    e.emplace_back(0, i);
                return Graph::from_edges(f.n, e);
            } else if constexpr (std::is_same_v<T, family::Complete>) {
                check_order(f.n);
                for (int i = 0; i < f.n; ++i)
                    for (int j = i + 1; j < f.n; ++j)
                        e.emplace_back(i, j);
                return Graph::from_edges(f.n, e);
            } else if constexpr (std::is_same_v<T, family::Multipartite>) {
                require(f.parts.size() >= 2, "multipartite needs >= 2 parts");
                auto parts = f.parts;
                std::sort(parts.begin(), parts.end());
                require(parts.front() >= 1, "multipartite part sizes must be >= 1");
                long long n = std::accumulate(parts.begin(), parts.end(), 0ll);
                check_order(n);
                std::vector<int> part_of;
                for (std::size_t p = 0; p < parts.size(); ++p)
                    part_of.insert(part_of.end(), std::size_t(parts[p]), int(p));
                for (int i = 0; i < int(n); ++i)
                    for (int j = i + 1; j < int(n); ++j)
                        if (part_of[i] != part_of[j])
                            e.emplace_back(i, j);
                return Graph::from_edges(int(n), e);
            } else if constexpr (std::is_same_v<T, family::CompleteMinusMatching>) {
                check_order(f.n);
                require(f.matching >= 0 && 2 * f.matching <= f.n,
                        "matching size above floor(n/2)");
                for (int i = 0; i < f.n; ++i)
                    for (int j = i + 1; j < f.n; ++j)
                        if (!(j == i + 1 && i % 2 == 0 && j < 2 * f.matching))
                            e.emplace_back(i, j);
                return Graph::from_edges(f.n, e);
            } else if constexpr (std::is_same_v<T, family::Broom>) {
                check_order(f.n);
                require(f.max_degree >= 2 && f.max_degree <= f.n - 1,
                        "broom degree must be in [2, n-1]");
                for (int i = 1; i < f.max_degree; ++i)
                    e.emplace_back(0, i);
                attach_path(e, 0, f.n - f.max_degree, f.max_degree);
                return Graph::from_edges(f.n, e);
            } else if constexpr (std::is_same_v<T, family::Spider>) {
                require(f.a >= 0 && f.a <= f.b && f.b <= f.c && f.c >= 1,
                        "spider legs need 0 <= a <= b <= c, c >= 1");
                long long n = 1ll + f.a + f.b + f.c;
                check_order(n);
                int next = 1;
                next = attach_path(e, 0, f.a, next);
                next = attach_path(e, 0, f.b, next);
                attach_path(e, 0, f.c, next);
                return Graph::from_edges(int(n), e);
            } else if constexpr (std::is_same_v<T, family::TriangleSpider>) {
                require(f.a >= 0 && f.a <= f.b && f.b <= f.c,
                        "triangle legs need 0 <= a <= b <= c");
                long long n = 3ll + f.a + f.b + f.c;
                check_order(n);
                e = {{0, 1}, {1, 2}, {0, 2}};
                int next = 3;
                next = attach_path(e, 0, f.a, next);
                next = attach_path(e, 1, f.b, next);
                attach_path(e, 2, f.c, next);
                return Graph::from_edges(int(n), e);
            } else if constexpr (std::is_same_v<T, family::DoubleBroom>) {
                require(f.a >= 1 && f.b >= 2 && f.c >= 1,
                        "double broom needs a >= 1, b >= 2, c >= 1");
                long long n = 0ll + f.a + f.b + f.c;
                check_order(n);
                for (int i = 0; i + 1 < f.b; ++i)
                    e.emplace_back(i, i + 1);
                for (int i = 0; i < f.a; ++i)
                    e.emplace_back(0, f.b + i);
                for (int i = 0; i < f.c; ++i)
                    e.emplace_back(f.b - 1, f.b + f.a + i);
                return Graph::from_edges(int(n), e);
            } else if constexpr (std::is_same_v<T, family::DoubleClawTail>) {
                require(f.x >= 1 && f.y >= 1, "claw tail needs x >= 1, y >= 1");
                long long n = 6ll + f.x + f.y;
                check_order(n);
                for (int i = 0; i + 1 < f.x; ++i)
                    e.emplace_back(i, i + 1);
                int c1 = f.x, c2 = f.x + 1;
                e.emplace_back(0, c1);
                e.emplace_back(0, c2);
                e.emplace_back(c1, f.x + 2);
                e.emplace_back(c1, f.x + 3);
                e.emplace_back(c2, f.x + 4);
                e.emplace_back(c2, f.x + 5);
                for (int i = 0; i < f.y; ++i)
                    e.emplace_back(f.x - 1, f.x + 6 + i);
                return Graph::from_edges(int(n), e);
            } else if constexpr (std::is_same_v<T, family::TwoCenter>) {
                require(f.n >= 5, "two-center graph needs order >= 5");
                check_order(f.n);
                require(f.r >= 1 && f.r <= f.n - 4, "two-center split must be in [1, n-4]");
                for (int x = 3; x < f.n; ++x)
                    e.emplace_back(0, x);
                for (int x = 3; x < 3 + f.r; ++x)
                    e.emplace_back(1, x);
                for (int x = 3 + f.r; x < f.n; ++x)
                    e.emplace_back(2, x);
                e.emplace_back(1, 2);
                return Graph::from_edges(f.n, e);
            } else if constexpr (std::is_same_v<T, family::K2mMinusEdge>) {
                require(f.n >= 4, "bipartite-minus-edge graph needs order >= 4");
                check_order(f.n);
                for (int x = 2; x < f.n; ++x)
                    e.emplace_back(0, x);
                for (int x = 2; x < f.n - 1; ++x)
                    e.emplace_back(1, x);
                return Graph::from_edges(f.n, e);
            } else if constexpr (std::is_same_v<T, family::ChordedCycle>) {
                require(f.n >= 3, "chorded cycle needs order >= 3");
                check_order(f.n);
                for (int i = 0; i < f.n; ++i)
                    e.emplace_back(i, (i + 1) % f.n);
                for (auto [a, b] : f.chords) {
                    require(a >= 0 && a < f.n && b >= 0 && b < f.n && a != b,
                            "chord endpoint out of range");
                    int gap = std::abs(a - b);
                    require(gap != 1 && gap != f.n - 1, "chord duplicates a cycle edge");
                    e.emplace_back(a, b);
                }
                return Graph::from_edges(f.n, e);  // from_edges rejects duplicate chords
            } else if constexpr (std::is_same_v<T, family::LayeredClique>) {
                require(f.p >= f.q && f.q >= 1, "layered clique needs p >= q >= 1");
                require(f.d >= 4, "layered clique needs d >= 4");
                long long n = 0ll + f.p + f.q + f.d - 1;
                check_order(n);
                int pq = f.p + f.q;
                for (int i = 0; i < pq; ++i)
                    for (int j = i + 1; j < pq; ++j)
                        e.emplace_back(i, j);
                int v1 = pq, v2 = pq + 1;
                for (int i = 0; i < f.p; ++i)
                    e.emplace_back(v1, i);
                for (int i = 0; i < f.q; ++i)
                    e.emplace_back(v2, f.p + i);
                for (int j = v2; j + 1 < int(n); ++j)
                    e.emplace_back(j, j + 1);
                return Graph::from_edges(int(n), e);
            }
        },
        spec);
}

FamilyProperties expected_properties(const FamilySpec& spec) {
    return std::visit(
        [](const auto& f) -> FamilyProperties {
            using T = std::decay_t<decltype(f)>;
            FamilyProperties p;
            if constexpr (std::is_same_v<T, family::Path>) {
                p.order = f.n;
                p.edge_count = f.n - 1;
                p.max_degree = f.n >= 3 ? 2 : f.n - 1;
                if (f.n >= 3)
                    p.sdiam3_exact = f.n - 1;
            } else if constexpr (std::is_same_v<T, family::Cycle>) {
                p.order = f.n;
                p.edge_count = f.n;
                p.max_degree = 2;
                p.sdiam3_exact = 2 * f.n / 3;
            } else if constexpr (std::is_same_v<T, family::Star>) {
                p.order = f.n;
                p.edge_count = f.n - 1;
                p.max_degree = f.n - 1;
                if (f.n >= 4)
                    p.sdiam3_exact = 3;
                else if (f.n == 3)
                    p.sdiam3_exact = 2;
            } else if constexpr (std::is_same_v<T, family::Complete>) {
                p.order = f.n;
                p.edge_count = f.n * (f.n - 1) / 2;
                p.max_degree = f.n - 1;
                if (f.n >= 3)
                    p.sdiam3_exact = 2;
            } else if constexpr (std::is_same_v<T, family::Multipartite>) {
                auto parts = f.parts;
                std::sort(parts.begin(), parts.end());
                int n = std::accumulate(parts.begin(), parts.end(), 0);
                int sq = 0;
                for (int s : parts)
                    sq += s * s;
                p.order = n;
                p.edge_count = (n * n - sq) / 2;
                p.max_degree = n - parts.front();
                if (n >= 3)
                    p.sdiam3_exact = parts.back() >= 3 ? 3 : 2;
            } else if constexpr (std::is_same_v<T, family::CompleteMinusMatching>) {
                p.order = f.n;
                p.edge_count = f.n * (f.n - 1) / 2 - f.matching;
                p.max_degree = f.n == 1 ? 0 : (2 * f.matching < f.n ? f.n - 1 : f.n - 2);
                if (f.n >= 3)
                    p.sdiam3_exact = 2;
            } else if constexpr (std::is_same_v<T, family::Broom>) {
                p.order = f.n;
                p.edge_count = f.n - 1;
                p.max_degree = f.max_degree;
                p.sdiam3_exact = f.max_degree >= 3 ? f.n - f.max_degree + 2 : f.n - 1;
            } else if constexpr (std::is_same_v<T, family::Spider>) {
                int n = 1 + f.a + f.b + f.c;
                p.order = n;
                p.edge_count = n - 1;
                p.max_degree = std::max(spider_legs(f), std::min(f.c, 2));
                if (n >= 3)
                    p.sdiam3_exact = n - 1;
            } else if constexpr (std::is_same_v<T, family::TriangleSpider>) {
                int n = 3 + f.a + f.b + f.c;
                p.order = n;
                p.edge_count = n;
                p.max_degree = f.c >= 1 ? 3 : 2;
                p.sdiam3_exact = n - 1;
            } else if constexpr (std::is_same_v<T, family::DoubleBroom>) {
                p.order = f.a + f.b + f.c;
                p.edge_count = p.order - 1;
                p.max_degree = std::max(f.a, f.c) + 1;
                p.sdiam3_exact = std::max(f.a, f.c) >= 2 ? f.b + 2 : f.b + 1;
                p.sdiam3_upper = f.b + 2;
            } else if constexpr (std::is_same_v<T, family::DoubleClawTail>) {
                p.order = f.x + f.y + 6;
                p.edge_count = p.order - 1;
                p.max_degree = f.x >= 2 ? std::max(3, f.y + 1) : std::max(3, f.y + 2);
                p.sdiam3_exact = f.x + 4;
                p.sdiam3_upper = f.x + 4;
            } else if constexpr (std::is_same_v<T, family::TwoCenter>) {
                p.order = f.n;
                p.edge_count = 2 * f.n - 5;
                p.max_degree = f.n - 3;
                p.sdiam3_exact = 3;
            } else if constexpr (std::is_same_v<T, family::K2mMinusEdge>) {
                p.order = f.n;
                p.edge_count = 2 * f.n - 5;
                p.max_degree = f.n - 2;
                p.sdiam3_exact = 3;
            } else if constexpr (std::is_same_v<T, family::ChordedCycle>) {
                p.order = f.n;
                p.edge_count = f.n + int(f.chords.size());
                std::vector<int> extra(std::size_t(f.n), 0);
                for (auto [a, b] : f.chords) {
                    ++extra[a];
                    ++extra[b];
                }
                p.max_degree = 2 + *std::max_element(extra.begin(), extra.end());
            } else if constexpr (std::is_same_v<T, family::LayeredClique>) {
                int pq = f.p + f.q;
                p.order = pq + f.d - 1;
                p.edge_count = pq * (pq + 1) / 2 + f.d - 3;
                p.max_degree = pq;
                p.sdiam3_upper = f.d;
            }
            return p;
        },
        spec);
}

namespace {

std::vector<int> parse_ints(std::string_view s, std::size_t expect, const char* what) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string_view tok = s.substr(pos, comma == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument(std::string("bad integer in ") + what);
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    if (expect && out.size() != expect)
        throw std::invalid_argument(std::string(what) + ": wrong parameter count");
    return out;
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
    std::size_t colon = text.find(':');
    std::string_view name = text.substr(0, colon);
    std::string_view rest =
        colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    if (name == "path")
        return family::Path{parse_ints(rest, 1, "path")[0]};
    if (name == "cycle")
        return family::Cycle{parse_ints(rest, 1, "cycle")[0]};
    if (name == "star")
        return family::Star{parse_ints(rest, 1, "star")[0]};
    if (name == "complete")
        return family::Complete{parse_ints(rest, 1, "complete")[0]};
    if (name == "parts")
        return family::Multipartite{parse_ints(rest, 0, "parts")};
    if (name == "kmm") {
        auto v = parse_ints(rest, 2, "kmm");
        return family::CompleteMinusMatching{v[0], v[1]};
    }
    if (name == "broom") {
        auto v = parse_ints(rest, 2, "broom");
        return family::Broom{v[0], v[1]};
    }
    if (name == "tabc") {
        auto v = parse_ints(rest, 3, "tabc");
        return family::Spider{v[0], v[1], v[2]};
    }
    if (name == "c3abc") {
        auto v = parse_ints(rest, 3, "c3abc");
        return family::TriangleSpider{v[0], v[1], v[2]};
    }
    if (name == "dbroom") {
        auto v = parse_ints(rest, 3, "dbroom");
        return family::DoubleBroom{v[0], v[1], v[2]};
    }
    if (name == "tstar") {
        auto v = parse_ints(rest, 2, "tstar");
        return family::DoubleClawTail{v[0], v[1]};
    }
    if (name == "twocenter") {
        auto v = parse_ints(rest, 2, "twocenter");
        return family::TwoCenter{v[0], v[1]};
    }
    if (name == "k2m")
        return family::K2mMinusEdge{parse_ints(rest, 1, "k2m")[0]};
    if (name == "chorded") {
        std::size_t colon2 = rest.find(':');
        family::ChordedCycle c;
        c.n = parse_ints(rest.substr(0, colon2), 1, "chorded")[0];
        if (colon2 != std::string_view::npos) {
            std::string_view list = rest.substr(colon2 + 1);
            std::size_t pos = 0;
            while (pos <= list.size()) {
                std::size_t comma = list.find(',', pos);
                std::string_view tok =
                    list.substr(pos, comma == std::string_view::npos
                                         ? std::string_view::npos
                                         : comma - pos);
                std::size_t dash = tok.find('-');
                if (dash == std::string_view::npos)
                    throw std::invalid_argument("chord must look like a-b");
                auto a = parse_ints(tok.substr(0, dash), 1, "chord")[0];
                auto b = parse_ints(tok.substr(dash + 1), 1, "chord")[0];
                c.chords.emplace_back(a, b);
                if (comma == std::string_view::npos)
                    break;
                pos = comma + 1;
            }
        }
        return c;
    }
    if (name == "layered") {
        auto v = parse_ints(rest, 3, "layered");
        return family::LayeredClique{v[0], v[1], v[2]};
    }
    throw std::invalid_argument("unknown family: " + std::string(name));
}

std::string format_family(const FamilySpec& spec) {
    std::ostringstream os;
    std::visit(
        [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, family::Path>)
                os << "path:" << f.n;
            else if constexpr (std::is_same_v<T, family::Cycle>)
                os << "cycle:" << f.n;
            else if constexpr (std::is_same_v<T, family::Star>)
                os << "star:" << f.n;
            else if constexpr (std::is_same_v<T, family::Complete>)
                os << "complete:" << f.n;
            else if constexpr (std::is_same_v<T, family::Multipartite>) {
                os << "parts:";
                for (std::size_t i = 0; i < f.parts.size(); ++i)
                    os << (i ? "," : "") << f.parts[i];
            } else if constexpr (std::is_same_v<T, family::CompleteMinusMatching>)
                os << "kmm:" << f.n << ',' << f.matching;
            else if constexpr (std::is_same_v<T, family::Broom>)
                os << "broom:" << f.n << ',' << f.max_degree;
            else if constexpr (std::is_same_v<T, family::Spider>)
                os << "tabc:" << f.a << ',' << f.b << ',' << f.c;
            else if constexpr (std::is_same_v<T, family::TriangleSpider>)
                os << "c3abc:" << f.a << ',' << f.b << ',' << f.c;
            else if constexpr (std::is_same_v<T, family::DoubleBroom>)
                os << "dbroom:" << f.a << ',' << f.b << ',' << f.c;
            else if constexpr (std::is_same_v<T, family::DoubleClawTail>)
                os << "tstar:" << f.x << ',' << f.y;
            else if constexpr (std::is_same_v<T, family::TwoCenter>)
                os << "twocenter:" << f.n << ',' << f.r;
            else if constexpr (std::is_same_v<T, family::K2mMinusEdge>)
                os << "k2m:" << f.n;
            else if constexpr (std::is_same_v<T, family::ChordedCycle>) {
                os << "chorded:" << f.n;
                for (std::size_t i = 0; i < f.chords.size(); ++i)
                    os << (i ? "," : ":") << f.chords[i].first << '-' << f.chords[i].second;
            } else if constexpr (std::is_same_v<T, family::LayeredClique>)
                os << "layered:" << f.p << ',' << f.q << ',' << f.d;
        },
        spec);
    return os.str();
}

}  // namespace sdt
