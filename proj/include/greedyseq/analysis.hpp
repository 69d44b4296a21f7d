#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "greedyseq/canonicality.hpp"
#include "greedyseq/recurrences.hpp"

namespace greedyseq {

// Which open interval the consecutive-term ratios must enter: (p, p+1) for
// the +q families, (p-1, p) for the -q families. The refinement check on the
// worst-case onset applies only to genuine (homogeneous) type-2 sequences.
enum class ratio_family { type1, type2, nonhomog_plus, nonhomog_minus };

const char* ratio_family_name(ratio_family f);

struct ratio_analysis {
    std::size_t k0;  // smallest index with all ratios inside from there on
    std::int64_t interval_low;
    std::int64_t interval_high;
    std::int64_t ceil_ratio_after_onset;  // common ceiling of all onset ratios
    // Ratios seq[n+1]/seq[n] for 2 <= n < k0 as exact (numerator, denominator)
    // pairs, keyed by 1-based n.
    std::vector<std::pair<std::size_t, std::pair<bigint, bigint>>> pre_onset_ratios;
};

// Scans ratios seq[n+1]/seq[n] for n in [2, horizon] by exact
// cross-multiplication. Throws horizon_too_small unless horizon >= 5 and the
// sequence has at least horizon+1 terms, and no_onset if even the final
// ratio lies outside the interval. For family == type2 with onset at 4, the
// pre-onset ratio J_4/J_3 is certified to lie in (p-2, p-1] exactly
// (verification_failed otherwise).
ratio_analysis compute_k0(const std::vector<bigint>& seq, ratio_family family,
                          std::int64_t p, std::size_t horizon);

// Checks that the consecutive-ratio subsequences approach the dominant root
// from the side predicted by the sign of (lambda - a): for +q families the
// even- and odd-position ratio subsequences are each strictly monotone in
// opposite directions; for -q families the whole ratio sequence is strictly
// monotone. The side of a versus lambda is decided by exact comparison of
// (2a - p)^2 against the discriminant. Requires at least 8 terms.
bool check_monotonicity(const std::vector<bigint>& seq, std::int64_t a,
                        std::int64_t p, std::int64_t q, root_family family);

enum class theorem_id {
    t2_type1,
    t3_type2,
    p3_nonhomog,
    c4_odd,
    c5_even1,
    c6_even2,
};

const char* theorem_id_name(theorem_id id);

struct failure_point {
    std::size_t prefix_length;
    // Absent when the smallest-counterexample bound exceeds the DP limit.
    std::optional<bigint> witness_amount;
};

struct theorem_verdict {
    theorem_id id;
    recurrence_params params;
    std::size_t prefix_depth_checked;
    bool holds;
    std::optional<failure_point> first_failure;
    std::string note;  // e.g. relaxed-eligibility remarks
};

// Total greediness of the type-1 family for 2 <= a <= p + q, verified by the
// one-point chain to the given depth. Throws ineligible_params when a > p+q
// or q > p (refuses rather than predicts).
theorem_verdict verify_theorem2(const type1_params& params, std::size_t depth);

// Total greediness of the type-2 family (q <= p - 2, any a >= 2).
theorem_verdict verify_theorem3(const type2_params& params, std::size_t depth);

// Non-homogeneous +q family with q <= p: if the ratios reach (p, p+1) at
// onset K0 and the prefix {1, ..., T_K0} is greedy, the whole sequence is
// totally greedy. The stated hypothesis asks K0 >= 3; an onset of 2 with a
// greedy prefix is admitted too and flagged in the note. Throws
// ineligible_params when the hypothesis fails.
theorem_verdict verify_proposition3(const nonhomog_params& params, std::size_t depth);

// Runs the one-point chain over the prefixes of seq; on failure, re-runs the
// witness scan on the failing prefix when the bound is within dp_limit, and
// otherwise flags the report as witness_search_skipped.
greediness_report find_counterexample(const std::vector<bigint>& seq,
                                      std::size_t dp_limit = default_dp_limit);

// Odd subsequences of eligible sources are totally greedy and satisfy the
// transformed recurrence exactly (both are checked).
theorem_verdict verify_corollary4(const type1_params& source, std::size_t depth);
theorem_verdict verify_corollary4(const type2_params& source, std::size_t depth);

// Modified even subsequence of a type-1 source. Eligibility is the computed
// base equality itself (empirically a = p + q), never a hard-coded family.
theorem_verdict verify_corollary5(const type1_params& source, std::size_t depth);

// Modified even subsequence of a type-2 source with a = p - q.
theorem_verdict verify_corollary6(const type2_params& source, std::size_t depth);

// Every applicable subsequence verdict for the source: c4 always, c5/c6 when
// the base equality holds for the even-modified subsequence.
std::vector<theorem_verdict> verify_subsequence_corollaries(
    const recurrence_params& source, std::size_t depth);

// Grid search for the type-1 parameter sets whose modified even subsequence
// satisfies the base equality p''*a - q'' = G_4. The stated closed-form
// families are evaluated against the same grid instead of being trusted.
struct corollary5_report {
    std::int64_t max_p, max_q, max_a;
    std::vector<std::array<std::int64_t, 3>> satisfying;  // (p, q, a), q <= p
    // True iff the satisfying set is exactly { (p, q, p+q) : p+q <= max_a }.
    bool family_is_a_equals_p_plus_q;
    // Family "p = q+1, a = q": valid grid points (a >= 2) and how many pass.
    std::size_t stated_family_points;
    std::size_t stated_family_satisfying;
    // Family "a = (pq+q^2)/(2q-1) integer": grid points and how many pass.
    std::size_t quotient_family_points;
    std::size_t quotient_family_satisfying;
};

corollary5_report investigate_corollary5(std::int64_t max_p, std::int64_t max_q,
                                         std::int64_t max_a);

}  // namespace greedyseq
