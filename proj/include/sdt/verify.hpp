#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sdt {

/// One identifier per closed-form statement the suite re-derives.
enum class ClaimId {
    OBS_1_1,           // Steiner distance of a k-set is at least k-1
    OBS_1_2,           // monotone under spanning subgraphs and under growing k
    THM_1_1,           // k-1 <= sdiam_k <= n-1, both ends attained
    OBS_2_1_CYCLE,     // sdiam_k(C_n) = floor(n(k-1)/k)
    OBS_2_1_COMPLETE,  // sdiam_k(K_n) = k-1
    THM_2_1,           // e_k(n,l,n-1) = n-1
    LEM_2_1,           // trees with r >= 4 leaves: sdiam_3 <= n-r+2
    LEM_2_2,           // e_3(n,l,d) = n-1 for n-d+2 <= l <= n-2
    LEM_2_3,           // sdiam_3 = n-1 iff 3-leg spider or triangle spider
    COR_2_1,           // max degree 2 and sdiam_3 <= n-2 forces the cycle
    LEM_2_4,           // sdiam_3 = 2 iff min degree >= n-2
    THM_3_1,           // exact sizes at diameter bound 2
    PROP_3_1,          // complete multipartite: k-1 or k by largest part
    LEM_3_1,           // trees of order >= 5: sdiam_3 = 3 iff star
    THM_3_2,           // exact sizes and band at diameter bound 3
    THM_4_1,           // exact sizes at diameter bound n-2
    THM_4_2,           // exact sizes at diameter bound n-3 (conflicting cell at n=7, l=3)
    THM_4_3,           // exact sizes at diameter bound n-4 (refuted cell at n=8, l=3)
    PROP_5_2,          // layered-clique bound (n-d+1)(n-d+2)/2 + d-3
};

inline constexpr int kClaimCount = 19;

std::span<const ClaimId> all_claims();
std::string_view claim_name(ClaimId id);
std::string_view claim_title(ClaimId id);
std::optional<ClaimId> parse_claim(std::string_view token);

enum class ClaimStatus { pass, fail, discrepancy_documented };
std::string_view to_string(ClaimStatus status);

/// One evaluated tuple of a claim's parameter grid.
struct ClaimCell {
    std::string params;    // e.g. "n=7 l=3 d=4"
    std::string expected;  // formula value: "8", "inf", "one of {7,8}", "[9,20]"
    std::string computed;  // oracle value or sweep summary
    bool ok = false;
    std::string note;      // context, e.g. which side of a conflict the oracle confirms
    std::string witness;   // graph6 evidence: attaining graph or counterexample
};

struct ClaimReport {
    ClaimId claim{};
    ClaimStatus status = ClaimStatus::pass;
    std::string verified_range;  // e.g. "4 <= n <= 8"
    std::vector<ClaimCell> cells;
    std::uint64_t graphs_examined = 0;
};

struct SuiteOptions {
    int n_max = 8;    // order cap applied to every parameter grid
    int threads = 1;  // shards per edge stratum inside extremal searches
};

struct SuiteReport {
    int n_max = 0;
    std::vector<ClaimReport> claims;  // in ClaimId declaration order
    bool all_ok = false;              // no claim failed (discrepancies allowed)
    int failed = 0;
    int discrepancies = 0;
};

/// Evaluates one claim over its grid truncated to options.n_max.
ClaimReport run_claim(ClaimId id, const SuiteOptions& options);

/// Evaluates every claim in declaration order.
SuiteReport run_all(const SuiteOptions& options);

}  // namespace sdt
