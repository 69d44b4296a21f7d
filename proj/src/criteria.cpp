#include "greedyseq/criteria.hpp"

#include <cstdint>
#include <functional>
#include <set>
#include <sstream>

#include "greedyseq/analysis.hpp"
#include "greedyseq/canonicality.hpp"
#include "greedyseq/coin.hpp"
#include "greedyseq/recurrences.hpp"

namespace greedyseq {
namespace {

criterion_result run(std::string id, std::string title,
                     const std::function<std::pair<bool, std::string>()>& body) {
    criterion_result out{std::move(id), std::move(title), false, ""};
    try {
        auto [passed, detail] = body();
        out.passed = passed;
        out.detail = std::move(detail);
    } catch (const std::exception& e) {
        out.passed = false;
        out.detail = std::string("exception: ") + e.what();
    }
    return out;
}

std::vector<bigint> to_bigints(std::initializer_list<std::int64_t> xs) {
    return std::vector<bigint>(xs.begin(), xs.end());
}

// Minimum coin count by memoized enumeration over count vectors, a code path
// deliberately unrelated to the bottom-up table used by optimal_payment.
class enumeration_oracle {
  public:
    explicit enumeration_oracle(const std::vector<std::uint64_t>& denoms)
        : denoms_(denoms) {}

    std::uint64_t min_cost(std::uint64_t amount) {
        if (memo_.size() < denoms_.size()) memo_.resize(denoms_.size());
        for (auto& row : memo_) {
            if (row.size() <= amount) row.resize(amount + 1, kUnknown);
        }
        return solve(0, amount);
    }

  private:
    static constexpr std::uint64_t kUnknown = ~0ull;

    std::uint64_t solve(std::size_t idx, std::uint64_t rem) {
        if (rem == 0) return 0;
        if (idx == denoms_.size()) return kUnknown;
        auto& slot = memo_[idx][rem];
        if (slot != kUnknown) return slot;
        std::uint64_t best = solve(idx + 1, rem);
        if (denoms_[idx] <= rem) {
            const std::uint64_t with = solve(idx, rem - denoms_[idx]);
            if (with != kUnknown && with + 1 < best) best = with + 1;
        }
        return slot = best;
    }

    std::vector<std::uint64_t> denoms_;
    std::vector<std::vector<std::uint64_t>> memo_;
};

std::pair<bool, std::string> worked_example() {
    const coin_system awkward(to_bigints({1, 4, 6}));
    const payment_vector g = greedy_payment(awkward, 8);
    const bool greedy_ok = g.counts == to_bigints({2, 0, 1}) && g.cost == 3;
    const bool optimal_ok = optimal_cost(awkward, 8) == 2;

    const coin_system friendly(to_bigints({1, 2, 5}));
    const payment_vector g2 = greedy_payment(friendly, 8);
    const bool friendly_ok = g2.counts == to_bigints({1, 1, 1}) && g2.cost == 3 &&
                             optimal_cost(friendly, 8) == 3;

    std::ostringstream detail;
    detail << "{1,4,6}@8: greedy (2,0,1) cost " << g.cost << ", optimal "
           << optimal_cost(awkward, 8) << "; {1,2,5}@8: greedy cost " << g2.cost
           << " = optimal";
    return {greedy_ok && optimal_ok && friendly_ok, detail.str()};
}

std::pair<bool, std::string> prefix_anomaly() {
    const coin_system system(to_bigints({1, 2, 5, 6, 10}));
    const greediness_report whole = is_greedy(system);
    const greediness_report prefixes = is_totally_greedy(system);
    const bool ok = whole.result == verdict::greedy &&
                    prefixes.result == verdict::not_totally_greedy &&
                    prefixes.failing_prefix_length == 4;
    std::ostringstream detail;
    detail << "whole set " << verdict_name(whole.result) << ", prefixes "
           << verdict_name(prefixes.result) << " at length "
           << (prefixes.failing_prefix_length ? *prefixes.failing_prefix_length : 0);
    return {ok, detail.str()};
}

std::pair<bool, std::string> jacobsthal_counterexample() {
    const auto terms = generate_type1(type1_params(3, 1, 2), 7);
    const bool terms_ok = terms == to_bigints({1, 3, 5, 11, 21, 43, 85});

    const coin_system prefix(to_bigints({1, 3, 5, 11, 21}));
    const bigint m = ceil_div(bigint(43), bigint(21));
    const bigint probe = m * 21 - 43;
    const bigint cost = greedy_cost(prefix, probe);
    const bool extension_rejected = !one_point_extension(prefix, 43);
    const bool ok = terms_ok && m == 3 && probe == 20 && cost == 4 &&
                    extension_rejected;
    std::ostringstream detail;
    detail << "terms " << (terms_ok ? "match" : "differ") << "; m = " << m
           << ", greedy cost at " << probe << " is " << cost
           << " (not below m), extension "
           << (extension_rejected ? "rejected" : "accepted");
    return {ok, detail.str()};
}

std::pair<bool, std::string> type1_sweep() {
    std::size_t checked = 0;
    for (std::int64_t p = 1; p <= 8; ++p) {
        for (std::int64_t q = 1; q <= p; ++q) {
            for (std::int64_t a = 2; a <= p + q; ++a) {
                const theorem_verdict v = verify_theorem2(type1_params(a, p, q), 20);
                if (!v.holds) {
                    return {false, "failure at a=" + std::to_string(a) +
                                       " p=" + std::to_string(p) +
                                       " q=" + std::to_string(q)};
                }
                ++checked;
            }
        }
    }
    return {true, std::to_string(checked) +
                      " parameter sets totally greedy to depth 20 "
                      "(includes Fibonacci a=2,p=q=1 and Pell a=p=2,q=1)"};
}

std::pair<bool, std::string> type2_sweep() {
    std::size_t checked = 0;
    for (std::int64_t p = 3; p <= 10; ++p) {
        for (std::int64_t q = 1; q <= p - 2; ++q) {
            for (std::int64_t a = 2; a <= 12; ++a) {
                const theorem_verdict v = verify_theorem3(type2_params(a, p, q), 20);
                if (!v.holds) {
                    return {false, "failure at a=" + std::to_string(a) +
                                       " p=" + std::to_string(p) +
                                       " q=" + std::to_string(q)};
                }
                ++checked;
            }
        }
    }
    return {true, std::to_string(checked) +
                      " parameter sets totally greedy to depth 20"};
}

std::pair<bool, std::string> root_onset_bounds() {
    std::size_t onsets_type1 = 0;
    std::size_t onsets_type2 = 0;
    for (std::int64_t p = 1; p <= 8; ++p) {
        for (std::int64_t q = 1; q <= p; ++q) {
            const bigint disc = bigint(p) * p + 4 * bigint(q);
            if (!(bigint(p) * p < disc && disc < bigint(p + 2) * (p + 2))) {
                return {false, "type-1 discriminant bound fails at p=" +
                                   std::to_string(p) + " q=" + std::to_string(q)};
            }
            for (std::int64_t a = 2; a <= p + q; ++a) {
                const auto terms = generate_type1(type1_params(a, p, q), 20);
                const auto ratios = compute_k0(terms, ratio_family::type1, p, 19);
                if (ratios.k0 < 2 || ratios.k0 > 3) {
                    return {false, "type-1 onset " + std::to_string(ratios.k0) +
                                       " out of [2,3] at a=" + std::to_string(a) +
                                       " p=" + std::to_string(p) +
                                       " q=" + std::to_string(q)};
                }
                ++onsets_type1;
            }
        }
    }
    for (std::int64_t p = 3; p <= 10; ++p) {
        for (std::int64_t q = 1; q <= p - 2; ++q) {
            const bigint disc = bigint(p) * p - 4 * bigint(q);
            if (!(bigint(p - 2) * (p - 2) < disc && disc < bigint(p) * p)) {
                return {false, "type-2 discriminant bound fails at p=" +
                                   std::to_string(p) + " q=" + std::to_string(q)};
            }
            for (std::int64_t a = 2; a <= 12; ++a) {
                const auto terms = generate_type2(type2_params(a, p, q), 20);
                const auto ratios = compute_k0(terms, ratio_family::type2, p, 19);
                if (ratios.k0 < 2 || ratios.k0 > 4) {
                    return {false, "type-2 onset " + std::to_string(ratios.k0) +
                                       " out of [2,4] at a=" + std::to_string(a) +
                                       " p=" + std::to_string(p) +
                                       " q=" + std::to_string(q)};
                }
                ++onsets_type2;
            }
        }
    }

    // The slowest-settling case on the grid: onset 4 with the fourth ratio
    // exactly 5, the closed end of (p-2, p-1] for p = 6.
    const auto slow = generate_type2(type2_params(2, 6, 4), 20);
    const auto slow_ratios = compute_k0(slow, ratio_family::type2, 6, 19);
    if (slow_ratios.k0 != 4 || slow[3] != 5 * slow[2]) {
        return {false, "a=2,p=6,q=4 expected onset 4 with fourth ratio 5, got onset " +
                           std::to_string(slow_ratios.k0)};
    }
    return {true, std::to_string(onsets_type1) + " type-1 and " +
                      std::to_string(onsets_type2) +
                      " type-2 onsets within bounds; discriminant inequalities exact; "
                      "a=2,p=6,q=4 peaks at onset 4 with ratio 5"};
}

std::pair<bool, std::string> triad_oracle() {
    std::size_t checked = 0;
    std::size_t greedy_count = 0;
    for (std::int64_t a = 2; a <= 200; ++a) {
        for (std::int64_t b = a + 1; b <= 200; ++b) {
            const bool closed_form = triad_is_greedy(triad_query(a, b));
            const coin_system system(to_bigints({1, a, b}));
            const bool scanned = is_greedy(system).result == verdict::greedy;
            if (closed_form != scanned) {
                return {false, "disagreement at {1," + std::to_string(a) + "," +
                                   std::to_string(b) + "}"};
            }
            ++checked;
            if (scanned) ++greedy_count;
        }
    }
    return {true, std::to_string(checked) + " triads, 0 disagreements, " +
                      std::to_string(greedy_count) + " greedy"};
}

std::pair<bool, std::string> four_element() {
    std::size_t checked = 0;
    for (std::int64_t s2 = 2; s2 <= 40; ++s2) {
        for (std::int64_t s3 = s2 + 1; s3 <= 40; ++s3) {
            for (std::int64_t s4 = s3 + 1; s4 <= 40; ++s4) {
                const coin_system system(to_bigints({1, s2, s3, s4}));
                if (!four_element_equivalence(system)) {
                    return {false, "equivalence fails at {1," + std::to_string(s2) +
                                       "," + std::to_string(s3) + "," +
                                       std::to_string(s4) + "}"};
                }
                ++checked;
            }
        }
    }
    return {true, std::to_string(checked) +
                      " four-element systems: greedy and totally greedy coincide"};
}

std::pair<bool, std::string> nonhomog_counterexample() {
    const nonhomog_params params(3, 3, 1, 2, /*subtract_q=*/true);
    const auto terms = generate_nonhomog(params, 6);
    if (terms != to_bigints({1, 3, 10, 29, 79, 210})) {
        return {false, "terms differ from 1,3,10,29,79,210"};
    }
    const coin_system base(std::vector<bigint>(terms.begin(), terms.begin() + 4));
    const greediness_report base_report = is_totally_greedy(base);
    const greediness_report five = is_greedy(
        coin_system(std::vector<bigint>(terms.begin(), terms.begin() + 5)));
    const greediness_report six = is_greedy(coin_system(terms));
    const bool ok = base_report.result == verdict::totally_greedy &&
                    five.result == verdict::not_greedy &&
                    six.result == verdict::not_greedy;
    std::ostringstream detail;
    detail << "length 4 " << verdict_name(base_report.result) << "; length 5 "
           << verdict_name(five.result) << " (witness "
           << to_decimal(five.witness_amount.value_or(0)) << "); length 6 "
           << verdict_name(six.result) << " (witness "
           << to_decimal(six.witness_amount.value_or(0)) << ")";
    return {ok, detail.str()};
}

std::pair<bool, std::string> subsequence_structure() {
    const std::vector<type1_params> type1_sources{
        {2, 1, 1}, {2, 2, 1}, {3, 2, 1}, {2, 2, 2}, {4, 2, 2}, {3, 3, 1},
        {4, 3, 2}, {6, 3, 3}, {2, 4, 1}, {5, 4, 3}, {7, 4, 3}, {5, 5, 2},
    };
    const std::vector<type2_params> type2_sources{
        {2, 3, 1}, {2, 4, 2}, {3, 4, 1}, {3, 5, 2},
        {4, 5, 1}, {2, 5, 3}, {4, 6, 2}, {5, 7, 2},
    };

    std::size_t sources = 0;
    for (const auto& src : type1_sources) {
        const theorem_verdict odd = verify_corollary4(src, 12);
        if (!odd.holds) {
            return {false, "odd subsequence fails for type-1 a=" +
                               std::to_string(src.a) + " p=" + std::to_string(src.p) +
                               " q=" + std::to_string(src.q)};
        }
        ++sources;
    }
    std::size_t even_checked = 0;
    for (const auto& src : type2_sources) {
        const theorem_verdict odd = verify_corollary4(src, 12);
        if (!odd.holds) {
            return {false, "odd subsequence fails for type-2 a=" +
                               std::to_string(src.a) + " p=" + std::to_string(src.p) +
                               " q=" + std::to_string(src.q)};
        }
        if (src.a == src.p - src.q) {
            const even_subsequence_result even = even_subsequence_modified(src, 12);
            const theorem_verdict v = verify_corollary6(src, 12);
            if (!even.base_equality_holds || !v.holds) {
                return {false, "even modified subsequence fails for type-2 a=" +
                                   std::to_string(src.a) +
                                   " p=" + std::to_string(src.p) +
                                   " q=" + std::to_string(src.q)};
            }
            ++even_checked;
        }
        ++sources;
    }
    return {true, std::to_string(sources) +
                      " sources: odd subsequences obey the transformed recurrence "
                      "and are totally greedy to depth 12; " +
                      std::to_string(even_checked) +
                      " even modified subsequences (a = p-q) pass the base equality"};
}

std::pair<bool, std::string> even_base_equality_grid() {
    const corollary5_report first = investigate_corollary5(30, 30, 30);
    const corollary5_report second = investigate_corollary5(30, 30, 30);
    const bool deterministic =
        first.satisfying == second.satisfying &&
        first.family_is_a_equals_p_plus_q == second.family_is_a_equals_p_plus_q &&
        first.stated_family_satisfying == second.stated_family_satisfying &&
        first.quotient_family_satisfying == second.quotient_family_satisfying;
    if (!deterministic) return {false, "two identical grid runs disagree"};

    // Cross-check the predicate on every grid point against the terms
    // themselves: the base equality must coincide with p''a - q'' = G_4.
    std::set<std::array<std::int64_t, 3>> reported(first.satisfying.begin(),
                                                   first.satisfying.end());
    std::size_t points = 0;
    for (std::int64_t p = 1; p <= 30; ++p) {
        for (std::int64_t q = 1; q <= p && q <= 30; ++q) {
            for (std::int64_t a = 2; a <= 30; ++a) {
                const auto g = generate_type1(type1_params(a, p, q), 4);
                const bigint lhs =
                    (bigint(p) * p + 2 * bigint(q)) * a - bigint(q) * q;
                const bool direct = lhs == g[3];
                const bool listed = reported.count({p, q, a}) > 0;
                if (direct != listed) {
                    return {false, "predicate mismatch at p=" + std::to_string(p) +
                                       " q=" + std::to_string(q) +
                                       " a=" + std::to_string(a)};
                }
                ++points;
            }
        }
    }
    if (first.stated_family_points == 0) {
        return {false, "the family p=q+1, a=q was never evaluated"};
    }

    std::ostringstream detail;
    detail << points << " grid points; " << first.satisfying.size()
           << " satisfy the base equality; satisfying set "
           << (first.family_is_a_equals_p_plus_q ? "==" : "!=")
           << " {a = p+q}; family p=q+1,a=q passes "
           << first.stated_family_satisfying << "/" << first.stated_family_points
           << "; quotient family a=(pq+q^2)/(2q-1) passes "
           << first.quotient_family_satisfying << "/"
           << first.quotient_family_points;
    return {true, detail.str()};
}

std::pair<bool, std::string> search_bound() {
    std::size_t checked = 0;
    std::vector<std::int64_t> stack;
    // Enumerate strictly increasing systems {1, ...} with up to 5 elements
    // drawn from [2, 30] and compare the windowed verdict against an
    // exhaustive sweep to 3 * s_t.
    const std::function<std::pair<bool, std::string>(std::int64_t)> recurse =
        [&](std::int64_t next_min) -> std::pair<bool, std::string> {
        std::vector<bigint> denoms{1};
        for (std::int64_t s : stack) denoms.push_back(s);
        const coin_system system(denoms);
        const bool windowed = is_greedy(system).result == verdict::greedy;

        const std::uint64_t top = denoms.back().convert_to<std::uint64_t>();
        std::vector<std::uint64_t> small;
        for (const bigint& d : denoms) small.push_back(d.convert_to<std::uint64_t>());
        enumeration_oracle oracle(small);
        bool exhaustive = true;
        for (std::uint64_t k = 1; k <= 3 * top; ++k) {
            if (greedy_cost(system, k) > oracle.min_cost(k)) {
                exhaustive = false;
                break;
            }
        }
        if (windowed != exhaustive) {
            std::string set = "1";
            for (std::int64_t s : stack) set += "," + std::to_string(s);
            return {false, "bound verdict disagrees with the 3*s_t sweep on {" +
                               set + "}"};
        }
        ++checked;

        if (stack.size() < 4) {
            for (std::int64_t s = next_min; s <= 30; ++s) {
                stack.push_back(s);
                auto result = recurse(s + 1);
                stack.pop_back();
                if (!result.first) return result;
            }
        }
        return {true, ""};
    };
    auto result = recurse(2);
    if (!result.first) return result;
    return {true, std::to_string(checked) +
                      " systems: windowed verdict equals the exhaustive sweep"};
}

}  // namespace

std::vector<criterion_result> run_all_criteria() {
    std::vector<criterion_result> results;
    results.push_back(run("worked-example",
                          "Greedy and optimal payments on {1,4,6} and {1,2,5}",
                          worked_example));
    results.push_back(run("prefix-anomaly",
                          "{1,2,5,6,10} is greedy but its length-4 prefix is not",
                          prefix_anomaly));
    results.push_back(run("jacobsthal-counterexample",
                          "Jacobsthal extension 43 fails the one-point test",
                          jacobsthal_counterexample));
    results.push_back(run("t2-type1-sweep",
                          "Type-1 grid (q<=p<=8, 2<=a<=p+q) totally greedy",
                          type1_sweep));
    results.push_back(run("t3-type2-sweep",
                          "Type-2 grid (3<=p<=10, q<=p-2, a<=12) totally greedy",
                          type2_sweep));
    results.push_back(run("root-onset-bounds",
                          "Exact discriminant bounds and ratio onsets on both grids",
                          root_onset_bounds));
    results.push_back(run("triad-oracle",
                          "Closed-form triad test vs DP scan, 2<=a<b<=200",
                          triad_oracle));
    results.push_back(run("four-element-equivalence",
                          "Greedy <=> totally greedy for 4-element systems, s4<=40",
                          four_element));
    results.push_back(run("nonhomog-counterexample",
                          "1,3,10,29,79,210: greedy through length 4, then not",
                          nonhomog_counterexample));
    results.push_back(run("subsequence-structure",
                          "Odd/even subsequences of 20 sampled sources",
                          subsequence_structure));
    results.push_back(run("c5-even-grid",
                          "Even-subsequence base equality grid, p,q,a <= 30",
                          even_base_equality_grid));
    results.push_back(run("search-bound",
                          "Witness window vs exhaustive 3*s_t sweep, t<=5, s_t<=30",
                          search_bound));
    return results;
}

}  // namespace greedyseq
