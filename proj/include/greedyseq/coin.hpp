#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "greedyseq/error.hpp"
#include "greedyseq/numeric.hpp"

namespace greedyseq {

// Finite set of coin denominations {1 = s_1 < s_2 < ... < s_t}.
class coin_system {
public:
    explicit coin_system(std::vector<bigint> denoms);

    const std::vector<bigint>& denoms() const { return denoms_; }
    std::size_t size() const { return denoms_.size(); }
    const bigint& largest() const { return denoms_.back(); }

    // First `len` denominations as their own system; len in [1, size()].
    coin_system prefix(std::size_t len) const;

    bool operator==(const coin_system&) const = default;

private:
    std::vector<bigint> denoms_;
};

// Parses "1,2,5" into a coin_system. Arbitrary-length decimals accepted.
coin_system parse_coin_system(std::string_view csv);

// Multiplicities per denomination together with the represented amount.
struct payment_vector {
    std::vector<bigint> counts;  // aligned with coin_system::denoms()
    bigint amount;
    bigint cost;  // sum of counts
};

// Amounts above this make the dynamic-programming oracle infeasible by
// default; callers may raise it at their own memory expense.
inline constexpr std::size_t default_dp_limit = 10'000'000;

// Repeated integer division from the largest denomination down.
payment_vector greedy_payment(const coin_system& system, const bigint& k);

bigint greedy_cost(const coin_system& system, const bigint& k);

// Minimal-cost representation of k, found by a DP sweep over amounts 0..k.
// Throws amount_exceeds_limit for k > limit. Among cost-minimal vectors the
// tie is unspecified; this implementation prefers the largest denomination
// when reconstructing.
payment_vector optimal_payment(const coin_system& system, const bigint& k,
                               std::size_t limit = default_dp_limit);

bigint optimal_cost(const coin_system& system, const bigint& k,
                    std::size_t limit = default_dp_limit);

namespace detail {

// Minimal coin counts for every amount 0..max_amount, machine-word sized.
// Denominations larger than max_amount are ignored. pred[v] holds the index
// (into denoms) of the largest denomination achieving the minimum at v.
struct dp_table {
    std::vector<std::uint32_t> cost;
    std::vector<std::uint32_t> pred;
};

dp_table build_dp_table(const std::vector<std::uint64_t>& denoms,
                        std::uint64_t max_amount);

// Greedy coin count over uint64 denominations (ascending order).
std::uint64_t greedy_cost_u64(const std::vector<std::uint64_t>& denoms,
                              std::uint64_t k);

}  // namespace detail

}  // namespace greedyseq
