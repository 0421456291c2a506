// Acceptance gate: re-derives the headline guarantees end to end and prints
// one pass/fail line per criterion. Exits nonzero iff any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <sys/wait.h>

#include "sdt/canonical.hpp"
#include "sdt/enumerate.hpp"
#include "sdt/extremal.hpp"
#include "sdt/families.hpp"
#include "sdt/graph.hpp"
#include "sdt/graph6.hpp"
#include "sdt/steiner.hpp"
#include "sdt/verify.hpp"

using namespace sdt;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

/// Criterion runner: fn fills `detail` and returns pass/fail; `budget_s` is
/// the stated time limit (0 = none). Budget violations fail the criterion.
template <typename Fn>
void criterion(int num, const std::string& label, double budget_s, Fn&& fn) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = seconds_since(start);
    if (ok && budget_s > 0 && secs > budget_s) {
        ok = false;
        detail = "exceeded " + std::to_string(int(budget_s)) + "s budget";
    }
    if (!ok) ++g_failures;
    std::printf("%2d %s  %-58s %7.2fs%s%s\n", num, ok ? "PASS" : "FAIL", label.c_str(),
                secs, detail.empty() ? "" : "  -- ", detail.c_str());
    for (const std::string& note : g_notes) std::printf("        %s\n", note.c_str());
    g_notes.clear();
    std::fflush(stdout);
}

/// Claim reports are shared between criteria; keyed by (claim, n_max).
const ClaimReport& report(ClaimId id, int n_max) {
    static std::map<std::pair<int, int>, ClaimReport> cache;
    auto key = std::make_pair(static_cast<int>(id), n_max);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, run_claim(id, SuiteOptions{n_max, 1})).first;
    return it->second;
}

bool claim_ok(ClaimId id, int n_max, std::string& detail) {
    const ClaimReport& rep = report(id, n_max);
    if (rep.status == ClaimStatus::fail) {
        detail += std::string(claim_name(id)) + " failed; ";
        for (const ClaimCell& cell : rep.cells) {
            if (!cell.ok) {
                detail += cell.params + " expected " + cell.expected + " got " +
                          cell.computed + "; ";
                break;
            }
        }
        return false;
    }
    return true;
}

const ClaimCell* find_cell(const ClaimReport& rep, const std::string& params) {
    for (const ClaimCell& cell : rep.cells)
        if (cell.params == params) return &cell;
    return nullptr;
}

ExtendedNat e3(int n, int l, int d) { return compute_e({n, l, d, 3}).value; }

// ---------------------------------------------------------------- criteria

bool family_formulas(std::string& detail) {
    bool ok = claim_ok(ClaimId::OBS_2_1_CYCLE, 30, detail) &&
              claim_ok(ClaimId::OBS_2_1_COMPLETE, 9, detail);
    if (ok)
        detail = "cycles n<=30 k in {2,3,4} and all k to n<=9; cliques all k to n<=9";
    return ok;
}

bool multipartite_formula(std::string& detail) {
    bool ok = claim_ok(ClaimId::PROP_3_1, 9, detail);
    if (ok) detail = "all partitions of n<=9 with >=2 parts, every supported k";
    return ok;
}

bool oracle_chain(std::string& detail) {
    std::uint64_t graphs = 0, sets = 0;
    for (int n = 3; n <= 7; ++n) {
        EnumFilter f;
        f.order = n;
        bool ok = true;
        std::string bad;
        generate(f, ShardSpec{}, [&](const Graph& g) {
            if (!ok) return;
            ++graphs;
            for (int a = 0; a < n && ok; ++a)
                for (int b = a + 1; b < n && ok; ++b)
                    for (int c = b + 1; c < n && ok; ++c) {
                        ++sets;
                        TerminalSet s = TerminalSet::of(g, {a, b, c});
                        ExtendedNat med = steiner_distance(g, s);
                        ExtendedNat dp = steiner_distance_dp(g, s);
                        ExtendedNat def = steiner_distance_oracle(g, s);
                        if (med != dp || dp != def) {
                            ok = false;
                            bad = graph6_encode(g) + " {" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + "}: " +
                                  med.to_string() + "/" + dp.to_string() + "/" +
                                  def.to_string();
                        }
                    }
        }, false);
        if (!ok) {
            detail = "median/DP/definitional disagree at " + bad;
            return false;
        }
    }
    detail = std::to_string(graphs) + " connected graphs, " + std::to_string(sets) +
             " terminal sets, three engines agree";
    return true;
}

bool characterizations(std::string& detail) {
    bool ok = claim_ok(ClaimId::LEM_2_3, 8, detail) &&
              claim_ok(ClaimId::LEM_2_4, 8, detail) &&
              claim_ok(ClaimId::LEM_3_1, 8, detail) &&
              claim_ok(ClaimId::COR_2_1, 8, detail);
    if (ok) detail = "four equivalences, both directions, all connected graphs n<=8";
    return ok;
}

bool extremal_tables(std::string& detail) {
    for (ClaimId id : {ClaimId::THM_2_1, ClaimId::THM_3_1, ClaimId::THM_3_2,
                       ClaimId::THM_4_1, ClaimId::THM_4_2, ClaimId::THM_4_3}) {
        if (!claim_ok(id, 9, detail)) return false;
    }
    // Named infinity entries, re-queried directly.
    if (!e3(5, 3, 2).is_infinite() || !e3(6, 3, 2).is_infinite()) {
        detail = "a diameter-2 infinity entry came back finite";
        return false;
    }
    for (int n = 5; n <= 9; ++n) {
        if (!e3(n, 2, n - 4).is_infinite()) {
            detail = "e3(" + std::to_string(n) + ",2," + std::to_string(n - 4) +
                     ") expected inf";
            return false;
        }
    }
    // The corrected table entry and its documentation.
    ExtendedNat fixed = e3(8, 3, 4);
    if (fixed != ExtendedNat::finite(9)) {
        detail = "e3(8,3,4) = " + fixed.to_string() + ", corrected value is 9";
        return false;
    }
    const ClaimCell* cell = find_cell(report(ClaimId::THM_4_3, 9), "n=8 l=3 d=4");
    if (!cell || cell->note.empty() || cell->witness.empty()) {
        detail = "corrected entry lacks a documented note or witness";
        return false;
    }
    g_notes.push_back("erratum: stated e3(8,3,4) = 10 is refuted, computed 9; witness " +
                      cell->witness);
    g_notes.push_back("         " + cell->note);
    detail = "six tables exact for n<=9 including every infinity entry";
    return true;
}

bool band_claims(std::string& detail) {
    if (!claim_ok(ClaimId::THM_3_2, 9, detail) || !claim_ok(ClaimId::LEM_2_2, 9, detail))
        return false;
    // Direct re-query of the band cells: ceil(n/2) <= l <= n-4 at d = 3.
    int cells = 0;
    for (int n = 5; n <= 9; ++n) {
        for (int l = (n + 1) / 2; l <= n - 4; ++l) {
            ++cells;
            ExtendedNat v = e3(n, l, 3);
            if (!v.is_finite() || v < ExtendedNat::finite(n) ||
                v > ExtendedNat::finite(l * (n - l))) {
                detail = "e3(" + std::to_string(n) + "," + std::to_string(l) +
                         ",3) = " + v.to_string() + " outside [n, l(n-l)]";
                return false;
            }
        }
    }
    detail = "equality strip d>=2 and " + std::to_string(cells) +
             " band cells at d=3, all within [n, l(n-l)]";
    return true;
}

bool layered_constructions(std::string& detail) {
    int built = 0;
    for (int n = 8; n <= 12; ++n) {
        for (int d = 4; d <= n - 1; ++d) {
            int top = n - d + 1;  // p + q, the maximum degree
            for (int q = 1; 2 * q <= top; ++q) {
                int p = top - q;
                Graph g = build_family(family::LayeredClique{p, q, d});
                ++built;
                int want_edges = top * (top + 1) / 2 + d - 3;
                if (g.order() != n || g.max_degree() != top ||
                    g.edge_count() != want_edges ||
                    !sdiam_at_most(g, 3, d)) {
                    detail = "layered:" + std::to_string(p) + "," + std::to_string(q) +
                             "," + std::to_string(d) + " violates its closed form";
                    return false;
                }
            }
        }
    }
    detail = std::to_string(built) + " constructions for 8<=n<=12, 4<=d<=n-1";
    return true;
}

bool discrepancy_protocol(std::string& detail) {
    ExtendedNat v = e3(7, 3, 4);
    if (v != ExtendedNat::finite(7) && v != ExtendedNat::finite(8)) {
        detail = "e3(7,3,4) = " + v.to_string() + ", outside {7, 8}";
        return false;
    }
    const ClaimReport& rep = report(ClaimId::THM_4_2, 9);
    if (rep.status == ClaimStatus::fail) {
        detail = "THM_4_2 reported failure instead of a documented conflict";
        return false;
    }
    const ClaimCell* cell = find_cell(rep, "n=7 l=3 d=4");
    if (!cell || !cell->ok || cell->note.empty() || cell->witness.empty()) {
        detail = "conflict cell lacks the confirmed side, note, or witness";
        return false;
    }
    g_notes.push_back("DISCREPANCY THM_4_2 n=7 l=3 d=4: computed " + cell->computed +
                      ", witness " + cell->witness);
    g_notes.push_back("         " + cell->note);

    // End-to-end: the CLI must exit 0 and print a discrepancy marker.
    if (std::filesystem::exists("./sdt")) {
        int rc = std::system(
            "./sdt verify THM_4_2 --n-max 7 --stable -o acceptance_thm_4_2.json "
            "2> acceptance_thm_4_2.err");
        bool exit_zero = WIFEXITED(rc) && WEXITSTATUS(rc) == 0;
        std::ifstream err("acceptance_thm_4_2.err");
        std::stringstream buf;
        buf << err.rdbuf();
        bool marked = buf.str().find("DISCREPANCY") != std::string::npos;
        std::filesystem::remove("acceptance_thm_4_2.json");
        std::filesystem::remove("acceptance_thm_4_2.err");
        if (!exit_zero || !marked) {
            detail = "cli run: exit zero=";
            detail += exit_zero ? "yes" : "no";
            detail += ", marker=";
            detail += marked ? "yes" : "no";
            return false;
        }
        detail = "value in {7, 8}, documented with witness; cli exits 0 with marker";
    } else {
        detail = "value in {7, 8}, documented with witness (cli binary not found here)";
    }
    return true;
}

Graph random_connected(std::mt19937& rng) {
    int n = 2 + static_cast<int>(rng() % 9);  // 2..10
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(static_cast<int>(rng() % v), v);  // random spanning tree
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double p = unit(rng);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit(rng) < p) edges.emplace_back(u, v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph::from_edges(n, edges);
}

bool property_suites(std::string& detail) {
    if (!claim_ok(ClaimId::OBS_1_1, 7, detail) ||
        !claim_ok(ClaimId::OBS_1_2, 7, detail) ||
        !claim_ok(ClaimId::THM_1_1, 7, detail)) {
        return false;
    }

    std::mt19937 rng(20260814);
    std::uint64_t checks = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        Graph g = random_connected(rng);
        int n = g.order();
        std::set<int> ks{2, n};
        for (int k : {3, 4, 5})
            if (k <= n) ks.insert(k);
        std::vector<int> ids(n);
        for (int v = 0; v < n; ++v) ids[v] = v;

        for (int k : ks) {
            if (k > 8 && k != n) continue;
            ExtendedNat diam = sdiam(g, k);
            ++checks;
            if (diam < ExtendedNat::finite(k - 1) || diam > ExtendedNat::finite(n - 1)) {
                detail = "sdiam bound violated on " + graph6_encode(g) +
                         " k=" + std::to_string(k);
                return false;
            }
            for (int rep_i = 0; rep_i < 5; ++rep_i) {
                std::shuffle(ids.begin(), ids.end(), rng);
                TerminalSet s = TerminalSet::of(g, {ids.begin(), ids.begin() + k});
                ExtendedNat dist = steiner_distance(g, s);
                ++checks;
                if (dist < ExtendedNat::finite(k - 1)) {
                    detail = "set below k-1 on " + graph6_encode(g);
                    return false;
                }
                // growing the terminal set cannot shrink the distance
                if ((k + 1 <= 8 || k + 1 == n) && k < n) {
                    TerminalSet bigger = TerminalSet::of(g, {ids.begin(), ids.begin() + k + 1});
                    ++checks;
                    if (steiner_distance(g, bigger) < dist) {
                        detail = "monotonicity in k violated on " + graph6_encode(g);
                        return false;
                    }
                }
                // deleting an edge (spanning subgraph) cannot shrink it either
                auto edges = g.edges();
                std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
                edges.erase(edges.begin() + static_cast<long>(pick(rng)));
                Graph h = Graph::from_edges(n, edges);
                ++checks;
                if (steiner_distance(h, TerminalSet::of(h, {ids.begin(), ids.begin() + k})) <
                    dist) {
                    detail = "spanning-subgraph monotonicity violated on " + graph6_encode(g);
                    return false;
                }
            }
        }
    }
    detail = "exhaustive n<=7 plus 1000 seeded random graphs, " +
             std::to_string(checks) + " invariant checks, zero violations";
    return true;
}

bool graph6_roundtrip(std::string& detail) {
    const std::pair<const char*, int> goldens[] = {{"A?", 0}, {"A_", 1}, {"Bw", 3}};
    for (auto [text, edges] : goldens) {
        Graph g = graph6_decode(text);
        if (g.edge_count() != edges || graph6_encode(g) != text) {
            detail = std::string("golden ") + text + " failed";
            return false;
        }
    }
    std::uint64_t classes = 0;
    for (int n = 1; n <= 8; ++n) {
        EnumFilter f;
        f.order = n;
        f.connected_only = false;
        bool ok = true;
        generate(f, ShardSpec{}, [&](const Graph& g) {
            if (!ok) return;
            ++classes;
            std::string s = graph6_encode(g);
            Graph back = graph6_decode(s);
            ok = back == g && graph6_encode(back) == s;
        }, false);
        if (!ok) {
            detail = "round-trip broke at order " + std::to_string(n);
            return false;
        }
    }
    detail = std::to_string(classes) + " isomorphism classes n<=8 plus goldens, byte-exact";
    return true;
}

}  // namespace

int main() {
    std::printf("acceptance gate: 10 criteria\n");
    auto start = std::chrono::steady_clock::now();

    criterion(1, "cycle and clique Steiner diameter formulas", 10, family_formulas);
    criterion(2, "complete multipartite Steiner diameter formula", 60, multipartite_formula);
    criterion(3, "median = subset-DP = definitional oracle, n<=7", 300, oracle_chain);
    criterion(4, "four exact characterizations, n<=8", 600, characterizations);
    criterion(5, "extremal size tables for n<=9, with erratum", 1800, extremal_tables);
    criterion(6, "equality strip and degree band bounds, n<=9", 0, band_claims);
    criterion(7, "layered-clique constructions, 8<=n<=12", 60, layered_constructions);
    criterion(8, "conflicting-cell discrepancy protocol", 0, discrepancy_protocol);
    criterion(9, "distance axioms on random and exhaustive graphs", 0, property_suites);
    criterion(10, "graph6 round-trip, n<=8 plus goldens", 0, graph6_roundtrip);

    std::printf("acceptance: %d/10 criteria passed in %.1fs\n", 10 - g_failures,
                seconds_since(start));
    return g_failures == 0 ? 0 : 1;
}
