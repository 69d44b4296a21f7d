#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "greedyseq/coin.hpp"

namespace greedyseq {

enum class verdict { greedy, not_greedy, totally_greedy, not_totally_greedy };

const char* verdict_name(verdict v);

struct greediness_report {
    verdict result;
    std::optional<bigint> witness_amount;           // smallest k where greedy != optimal
    std::optional<bigint> greedy_cost_at_witness;
    std::optional<bigint> optimal_cost_at_witness;
    std::optional<std::size_t> failing_prefix_length;
    // Set when the witness scan was skipped because the search bound exceeds
    // the DP limit; the verdict is still sound (one-point chain).
    bool witness_search_skipped = false;

    bool positive() const {
        return result == verdict::greedy || result == verdict::totally_greedy;
    }
};

// The set {1, a, b} with 1 < a < b.
struct triad_query {
    bigint a;
    bigint b;

    triad_query(bigint a_, bigint b_);  // throws invalid_triad
};

// Closed-form greediness test for {1, a, b}: b - a must land in
// union over m >= 1 of [ma - m, ma]. Tested with m = ceil((b-a)/a).
bool triad_is_greedy(const triad_query& q);

// One-point test: given a *greedy* system S with top denomination s_t and a
// candidate s_next > s_t, the extended set is greedy iff
// greedy_cost(S, m*s_t - s_next) < m with m = ceil(s_next / s_t).
// The greediness of S is the caller's responsibility and is not re-verified.
bool one_point_extension(const coin_system& system, const bigint& s_next);

// Compares greedy and optimal cost for every k in [1, s_{t-1} + s_t), the
// classical smallest-counterexample window. Systems of one or two
// denominations are greedy unconditionally. Reports the smallest witness.
greediness_report is_greedy(const coin_system& system,
                            std::size_t dp_limit = default_dp_limit);

// Extends {1} one denomination at a time through one_point_extension.
// Never needs the DP oracle, so it works for arbitrarily large terms.
greediness_report is_totally_greedy(const coin_system& system);

// Self-test of the four-element equivalence: greedy <=> totally greedy.
// Must return true for every valid 4-element system.
bool four_element_equivalence(const coin_system& system,
                              std::size_t dp_limit = default_dp_limit);

}  // namespace greedyseq
