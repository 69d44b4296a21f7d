#include "greedyseq/analysis.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"

using namespace greedyseq;

namespace {

std::vector<bigint> big(std::initializer_list<std::int64_t> xs) {
    return std::vector<bigint>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("ratio onset on classic sequences") {
    // Fibonacci ratios sit in (1, 2) from the start.
    const auto fib = generate_type1(type1_params(2, 1, 1), 12);
    const ratio_analysis fib_ratios = compute_k0(fib, ratio_family::type1, 1, 11);
    CHECK(fib_ratios.k0 == 2);
    CHECK(fib_ratios.interval_low == 1);
    CHECK(fib_ratios.interval_high == 2);
    CHECK(fib_ratios.ceil_ratio_after_onset == 2);
    CHECK(fib_ratios.pre_onset_ratios.empty());

    // The slow type-2 case: J = 1, 2, 8, 40, 208, ... settles at n = 4.
    const auto slow = generate_type2(type2_params(2, 6, 4), 12);
    const ratio_analysis slow_ratios = compute_k0(slow, ratio_family::type2, 6, 11);
    CHECK(slow_ratios.k0 == 4);
    CHECK(slow_ratios.interval_low == 5);
    CHECK(slow_ratios.interval_high == 6);
    REQUIRE(slow_ratios.pre_onset_ratios.size() == 2);
    CHECK(slow_ratios.pre_onset_ratios[0].first == 2);
    CHECK(slow_ratios.pre_onset_ratios[0].second.first == 8);
    CHECK(slow_ratios.pre_onset_ratios[0].second.second == 2);
    CHECK(slow_ratios.pre_onset_ratios[1].first == 3);
    CHECK(slow_ratios.pre_onset_ratios[1].second.first == 40);
    CHECK(slow_ratios.pre_onset_ratios[1].second.second == 8);

    // Perturbed families use the same machinery with their own interval.
    const auto plus = generate_nonhomog(nonhomog_params(2, 2, 1, 1, false), 12);
    CHECK(compute_k0(plus, ratio_family::nonhomog_plus, 2, 11).k0 == 3);
    const auto minus = generate_nonhomog(nonhomog_params(3, 3, 1, 2, true), 12);
    CHECK(compute_k0(minus, ratio_family::nonhomog_minus, 3, 11).k0 == 3);
}

TEST_CASE("ratio onset error handling") {
    const auto fib = generate_type1(type1_params(2, 1, 1), 12);
    CHECK_THROWS_AS(compute_k0(fib, ratio_family::type1, 1, 4), error);
    CHECK_THROWS_AS(compute_k0(fib, ratio_family::type1, 1, 20), error);

    // q > p: the ratios straddle lambda = 2 forever, never inside (1, 2).
    const auto jac = generate_type1(type1_params(3, 1, 2), 20);
    try {
        compute_k0(jac, ratio_family::type1, 1, 19);
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.kind() == errc::no_onset);
    }
}

TEST_CASE("ratio subsequences are monotone from the predicted side") {
    // a = 2 above lambda = golden ratio: even-position ratios fall, odd rise.
    const auto fib = generate_type1(type1_params(2, 1, 1), 16);
    CHECK(check_monotonicity(fib, 2, 1, 1, root_family::type1));

    // a = 2 below lambda = 1 + sqrt(3).
    const auto t1 = generate_type1(type1_params(2, 2, 2), 16);
    CHECK(check_monotonicity(t1, 2, 2, 2, root_family::type1));

    // Type 2, both sides of lambda = (3 + sqrt(5)) / 2.
    const auto below = generate_type2(type2_params(2, 3, 1), 16);
    CHECK(check_monotonicity(below, 2, 3, 1, root_family::type2));
    const auto above = generate_type2(type2_params(3, 3, 1), 16);
    CHECK(check_monotonicity(above, 3, 3, 1, root_family::type2));

    // A corrupted term flips a comparison and must be caught.
    auto tampered = fib;
    tampered[9] += 1;
    CHECK_FALSE(check_monotonicity(tampered, 2, 1, 1, root_family::type1));

    CHECK_THROWS_AS(check_monotonicity(big({1, 2, 3}), 2, 1, 1, root_family::type1),
                    error);
    CHECK_THROWS_AS(
        check_monotonicity(generate_type1(type1_params(2, 2, 1), 8), 2, 2, 1,
                           root_family::type2),
        error);  // p^2 - 4q < 0: degenerate for the minus family
}

TEST_CASE("type-1 family sweep verdicts") {
    const theorem_verdict fib = verify_theorem2(type1_params(2, 1, 1), 20);
    CHECK(fib.holds);
    CHECK(fib.id == theorem_id::t2_type1);
    CHECK(fib.prefix_depth_checked == 20);
    CHECK_FALSE(fib.first_failure.has_value());

    CHECK(verify_theorem2(type1_params(2, 2, 1), 20).holds);   // Pell
    CHECK(verify_theorem2(type1_params(4, 3, 2), 18).holds);
    CHECK(verify_theorem2(type1_params(5, 3, 2), 18).holds);   // a = p + q

    CHECK_THROWS_AS(verify_theorem2(type1_params(6, 3, 2), 18), error);  // a > p+q
    try {
        verify_theorem2(type1_params(3, 1, 2), 18);  // q > p
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.kind() == errc::ineligible_params);
    }
    CHECK_THROWS_AS(verify_theorem2(type1_params(2, 1, 1), 2), error);
}

TEST_CASE("the q > p sequence is caught by the counterexample search") {
    const auto jac = generate_type1(type1_params(3, 1, 2), 7);
    const greediness_report report = find_counterexample(jac);
    CHECK(report.result == verdict::not_totally_greedy);
    CHECK(report.failing_prefix_length == 6);
    CHECK(report.witness_amount == bigint(63));
    CHECK(report.greedy_cost_at_witness == bigint(5));
    CHECK(report.optimal_cost_at_witness == bigint(3));
    CHECK_FALSE(report.witness_search_skipped);
}

TEST_CASE("counterexample search skips the scan above the DP limit") {
    // Huge failing prefix: witness search is declined, verdict still sound.
    std::vector<bigint> seq = {1, 2, 5, 6};
    const bigint scale = parse_bigint("10000000000000000");
    for (auto& t : seq) t *= scale;
    seq[0] = 1;
    seq.insert(seq.begin() + 1, 2);  // {1, 2, 2e16, 5e16, 6e16}
    const greediness_report report = find_counterexample(seq);
    CHECK(report.result == verdict::not_totally_greedy);
    CHECK(report.witness_search_skipped);
    CHECK_FALSE(report.witness_amount.has_value());
}

TEST_CASE("type-2 family sweep verdicts") {
    CHECK(verify_theorem3(type2_params(2, 3, 1), 20).holds);
    CHECK(verify_theorem3(type2_params(12, 4, 2), 20).holds);
    CHECK(verify_theorem3(type2_params(2, 6, 4), 20).holds);

    try {
        verify_theorem3(type2_params(2, 3, 2), 20);  // q > p - 2
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.kind() == errc::ineligible_params);
    }
}

TEST_CASE("perturbed-family verdicts") {
    // Onset 3 with greedy prefix {1, 2, 6}: holds to depth 12.
    const theorem_verdict ok = verify_proposition3(nonhomog_params(2, 2, 1, 1, false), 12);
    CHECK(ok.holds);
    CHECK(ok.id == theorem_id::p3_nonhomog);
    CHECK(ok.note.empty());

    // Onset 2 is admitted but flagged.
    const theorem_verdict early = verify_proposition3(nonhomog_params(4, 2, 1, 1, false), 12);
    CHECK(early.holds);
    CHECK(early.note.find("K0=2") != std::string::npos);

    CHECK_THROWS_AS(verify_proposition3(nonhomog_params(3, 3, 1, 2, true), 12),
                    error);  // minus family
    CHECK_THROWS_AS(verify_proposition3(nonhomog_params(2, 2, 3, 1, false), 12),
                    error);  // q > p
}

TEST_CASE("subsequence corollaries") {
    const theorem_verdict fib_odd = verify_corollary4(type1_params(2, 1, 1), 12);
    CHECK(fib_odd.holds);
    CHECK(fib_odd.id == theorem_id::c4_odd);
    CHECK(verify_corollary4(type2_params(2, 4, 1), 12).holds);

    const theorem_verdict even_ok = verify_corollary5(type1_params(3, 2, 1), 12);
    CHECK(even_ok.holds);
    CHECK(even_ok.id == theorem_id::c5_even1);

    // Pell's even subsequence misses the base equality: refused, not guessed.
    CHECK_THROWS_AS(verify_corollary5(type1_params(2, 2, 1), 12), error);

    const theorem_verdict t2_even = verify_corollary6(type2_params(2, 3, 1), 12);
    CHECK(t2_even.holds);
    CHECK(t2_even.id == theorem_id::c6_even2);
    CHECK_THROWS_AS(verify_corollary6(type2_params(3, 5, 1), 12), error);  // a != p-q

    const auto both = verify_subsequence_corollaries(type1_params(3, 2, 1), 12);
    REQUIRE(both.size() == 2);
    CHECK(both[0].id == theorem_id::c4_odd);
    CHECK(both[1].id == theorem_id::c5_even1);

    const auto pell = verify_subsequence_corollaries(type1_params(2, 2, 1), 12);
    REQUIRE(pell.size() == 1);

    const auto t2 = verify_subsequence_corollaries(type2_params(2, 3, 1), 12);
    REQUIRE(t2.size() == 2);
    CHECK(t2[1].id == theorem_id::c6_even2);

    CHECK_THROWS_AS(
        verify_subsequence_corollaries(nonhomog_params(2, 2, 1, 1, false), 12),
        error);
}

TEST_CASE("even-subsequence base equality grid") {
    const corollary5_report report = investigate_corollary5(8, 8, 8);

    // The satisfying set is exactly a = p + q on this grid.
    CHECK(report.family_is_a_equals_p_plus_q);
    std::vector<std::array<std::int64_t, 3>> expected;
    for (std::int64_t p = 1; p <= 8; ++p) {
        for (std::int64_t q = 1; q <= p; ++q) {
            if (p + q <= 8) expected.push_back({p, q, p + q});
        }
    }
    CHECK(report.satisfying == expected);

    // The p = q+1, a = q family never satisfies the equality here.
    CHECK(report.stated_family_points > 0);
    CHECK(report.stated_family_satisfying == 0);

    // The quotient formula hits only its q = 1 row, where it reduces to p+q.
    CHECK(report.quotient_family_points >= 7);
    CHECK(report.quotient_family_satisfying < report.quotient_family_points);

    // Deterministic by construction.
    const corollary5_report again = investigate_corollary5(8, 8, 8);
    CHECK(again.satisfying == report.satisfying);
}

TEST_CASE("identifier names are stable") {
    CHECK(std::string(theorem_id_name(theorem_id::t2_type1)) == "T2_type1");
    CHECK(std::string(theorem_id_name(theorem_id::t3_type2)) == "T3_type2");
    CHECK(std::string(theorem_id_name(theorem_id::p3_nonhomog)) == "P3_nonhomog");
    CHECK(std::string(theorem_id_name(theorem_id::c4_odd)) == "C4_odd");
    CHECK(std::string(theorem_id_name(theorem_id::c5_even1)) == "C5_even1");
    CHECK(std::string(theorem_id_name(theorem_id::c6_even2)) == "C6_even2");
    CHECK(std::string(ratio_family_name(ratio_family::nonhomog_plus)) == "nonhomog+");
}
