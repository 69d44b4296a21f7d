#include "greedyseq/coin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace greedyseq {

coin_system::coin_system(std::vector<bigint> denoms) : denoms_(std::move(denoms)) {
    if (denoms_.empty()) {
        throw error(errc::invalid_coin_system, "denomination set is empty");
    }
    if (denoms_.front() != 1) {
        throw error(errc::invalid_coin_system,
                    "smallest denomination must be 1, got " + denoms_.front().str());
    }
    for (std::size_t i = 1; i < denoms_.size(); ++i) {
        if (denoms_[i] <= denoms_[i - 1]) {
            throw error(errc::invalid_coin_system,
                        "denominations must be strictly increasing: " +
                            denoms_[i - 1].str() + " then " + denoms_[i].str());
        }
    }
}

coin_system coin_system::prefix(std::size_t len) const {
    if (len < 1 || len > denoms_.size()) {
        throw error(errc::invalid_coin_system,
                    "prefix length out of range: " + std::to_string(len));
    }
    return coin_system(std::vector<bigint>(denoms_.begin(), denoms_.begin() + len));
}

coin_system parse_coin_system(std::string_view csv) {
    std::vector<bigint> denoms;
    std::string token;
    std::istringstream in{std::string(csv)};
    while (std::getline(in, token, ',')) {
        try {
            denoms.push_back(parse_bigint(token));
        } catch (const std::exception& e) {
            throw error(errc::invalid_coin_system, e.what());
        }
    }
    return coin_system(std::move(denoms));
}

payment_vector greedy_payment(const coin_system& system, const bigint& k) {
    if (k < 0) {
        throw error(errc::invalid_coin_system, "amount must be nonnegative");
    }
    const auto& denoms = system.denoms();
    payment_vector pay;
    pay.counts.assign(denoms.size(), 0);
    pay.amount = k;
    pay.cost = 0;
    bigint rest = k;
    for (std::size_t i = denoms.size(); i-- > 0;) {
        pay.counts[i] = rest / denoms[i];
        rest %= denoms[i];
        pay.cost += pay.counts[i];
    }
    return pay;  // rest == 0 since denoms[0] == 1
}

bigint greedy_cost(const coin_system& system, const bigint& k) {
    return greedy_payment(system, k).cost;
}

namespace detail {

dp_table build_dp_table(const std::vector<std::uint64_t>& denoms,
                        std::uint64_t max_amount) {
    constexpr std::uint32_t unreachable = std::numeric_limits<std::uint32_t>::max();
    dp_table table;
    table.cost.assign(max_amount + 1, unreachable);
    table.pred.assign(max_amount + 1, unreachable);
    table.cost[0] = 0;
    for (std::uint64_t v = 1; v <= max_amount; ++v) {
        std::uint32_t best = unreachable;
        std::uint32_t best_pred = unreachable;
        // Largest denomination first so ties keep the largest predecessor.
        for (std::size_t i = denoms.size(); i-- > 0;) {
            const std::uint64_t d = denoms[i];
            if (d > v) continue;
            const std::uint32_t prev = table.cost[v - d];
            if (prev != unreachable && prev + 1 < best) {
                best = prev + 1;
                best_pred = static_cast<std::uint32_t>(i);
            }
        }
        table.cost[v] = best;
        table.pred[v] = best_pred;
    }
    return table;
}

std::uint64_t greedy_cost_u64(const std::vector<std::uint64_t>& denoms,
                              std::uint64_t k) {
    std::uint64_t cost = 0;
    for (std::size_t i = denoms.size(); i-- > 0 && k > 0;) {
        const std::uint64_t d = denoms[i];
        if (d > k) continue;
        cost += k / d;
        k %= d;
    }
    return cost;
}

}  // namespace detail

payment_vector optimal_payment(const coin_system& system, const bigint& k,
                               std::size_t limit) {
    if (k < 0) {
        throw error(errc::invalid_coin_system, "amount must be nonnegative");
    }
    if (k > bigint(limit)) {
        throw error(errc::amount_exceeds_limit,
                    "amount " + k.str() + " exceeds the DP oracle limit " +
                        std::to_string(limit));
    }
    const std::uint64_t amount = to_uint64(k);

    // Denominations above the amount can never be used.
    std::vector<std::uint64_t> small;
    small.reserve(system.size());
    for (const bigint& d : system.denoms()) {
        if (d > k) break;
        small.push_back(to_uint64(d));
    }

    const detail::dp_table table = detail::build_dp_table(small, amount);

    payment_vector pay;
    pay.counts.assign(system.size(), 0);
    pay.amount = k;
    for (std::uint64_t v = amount; v > 0;) {
        const std::uint32_t i = table.pred[v];
        pay.counts[i] += 1;
        v -= small[i];
    }
    pay.cost = std::accumulate(pay.counts.begin(), pay.counts.end(), bigint(0));
    return pay;
}

bigint optimal_cost(const coin_system& system, const bigint& k, std::size_t limit) {
    return optimal_payment(system, k, limit).cost;
}

}  // namespace greedyseq
