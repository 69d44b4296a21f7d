#include "greedyseq/canonicality.hpp"

namespace greedyseq {

const char* verdict_name(verdict v) {
    switch (v) {
        case verdict::greedy: return "Greedy";
        case verdict::not_greedy: return "NotGreedy";
        case verdict::totally_greedy: return "TotallyGreedy";
        case verdict::not_totally_greedy: return "NotTotallyGreedy";
    }
    return "?";
}

const char* errc_name(errc k) {
    switch (k) {
        case errc::invalid_coin_system: return "InvalidCoinSystem";
        case errc::amount_exceeds_limit: return "AmountExceedsLimit";
        case errc::invalid_triad: return "InvalidTriad";
        case errc::not_an_extension: return "NotAnExtension";
        case errc::wrong_size: return "WrongSize";
        case errc::invalid_params: return "InvalidParams";
        case errc::not_monotonic: return "NotMonotonic";
        case errc::degenerate_roots: return "DegenerateRoots";
        case errc::horizon_too_small: return "HorizonTooSmall";
        case errc::no_onset: return "NoOnset";
        case errc::ineligible_params: return "IneligibleParams";
        case errc::verification_failed: return "VerificationFailed";
    }
    return "?";
}

triad_query::triad_query(bigint a_, bigint b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a <= 1 || b <= a) {
        throw error(errc::invalid_triad,
                    "triad needs 1 < a < b, got a=" + a.str() + " b=" + b.str());
    }
}

bool triad_is_greedy(const triad_query& q) {
    const bigint d = q.b - q.a;
    const bigint m = ceil_div(d, q.a);
    return d >= m * q.a - m;
}

bool one_point_extension(const coin_system& system, const bigint& s_next) {
    const bigint& top = system.largest();
    if (s_next <= top) {
        throw error(errc::not_an_extension,
                    "extension " + s_next.str() + " must exceed the current top " +
                        top.str());
    }
    const bigint m = ceil_div(s_next, top);
    return greedy_cost(system, m * top - s_next) < m;
}

greediness_report is_greedy(const coin_system& system, std::size_t dp_limit) {
    greediness_report report{.result = verdict::greedy};
    if (system.size() <= 2) return report;

    const auto& denoms = system.denoms();
    const bigint bound = denoms[system.size() - 2] + denoms[system.size() - 1];
    if (bound - 1 > bigint(dp_limit)) {
        throw error(errc::amount_exceeds_limit,
                    "counterexample search bound " + bound.str() +
                        " exceeds the DP oracle limit " + std::to_string(dp_limit));
    }
    const std::uint64_t max_k = to_uint64(bound - 1);

    std::vector<std::uint64_t> small;
    for (const bigint& d : denoms) {
        if (d > bigint(max_k)) break;  // cannot happen: s_t < bound
        small.push_back(to_uint64(d));
    }
    const detail::dp_table table = detail::build_dp_table(small, max_k);

    for (std::uint64_t k = 1; k <= max_k; ++k) {
        const std::uint64_t g = detail::greedy_cost_u64(small, k);
        if (g > table.cost[k]) {
            report.result = verdict::not_greedy;
            report.witness_amount = bigint(k);
            report.greedy_cost_at_witness = bigint(g);
            report.optimal_cost_at_witness = bigint(table.cost[k]);
            return report;
        }
    }
    return report;
}

greediness_report is_totally_greedy(const coin_system& system) {
    greediness_report report{.result = verdict::totally_greedy};
    const auto& denoms = system.denoms();
    // Prefixes of length 1 and 2 are greedy unconditionally; each further
    // denomination is admitted through the one-point test, which keeps the
    // induction hypothesis (current prefix greedy) intact.
    for (std::size_t next = 2; next < denoms.size(); ++next) {
        if (!one_point_extension(system.prefix(next), denoms[next])) {
            report.result = verdict::not_totally_greedy;
            report.failing_prefix_length = next + 1;
            return report;
        }
    }
    return report;
}

bool four_element_equivalence(const coin_system& system, std::size_t dp_limit) {
    if (system.size() != 4) {
        throw error(errc::wrong_size, "expected a 4-element system, got " +
                                          std::to_string(system.size()));
    }
    const bool plain = is_greedy(system, dp_limit).result == verdict::greedy;
    const bool total = is_totally_greedy(system).result == verdict::totally_greedy;
    return plain == total;
}

}  // namespace greedyseq
