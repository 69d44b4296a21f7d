#include "greedyseq/analysis.hpp"

#include <algorithm>

namespace greedyseq {

const char* ratio_family_name(ratio_family f) {
    switch (f) {
        case ratio_family::type1: return "type1";
        case ratio_family::type2: return "type2";
        case ratio_family::nonhomog_plus: return "nonhomog+";
        case ratio_family::nonhomog_minus: return "nonhomog-";
    }
    return "?";
}

const char* theorem_id_name(theorem_id id) {
    switch (id) {
        case theorem_id::t2_type1: return "T2_type1";
        case theorem_id::t3_type2: return "T3_type2";
        case theorem_id::p3_nonhomog: return "P3_nonhomog";
        case theorem_id::c4_odd: return "C4_odd";
        case theorem_id::c5_even1: return "C5_even1";
        case theorem_id::c6_even2: return "C6_even2";
    }
    return "?";
}

ratio_analysis compute_k0(const std::vector<bigint>& seq, ratio_family family,
                          std::int64_t p, std::size_t horizon) {
    if (horizon < 5) {
        throw error(errc::horizon_too_small, "ratio horizon must be at least 5");
    }
    if (seq.size() < horizon + 1) {
        throw error(errc::horizon_too_small,
                    "sequence has " + std::to_string(seq.size()) + " terms, need " +
                        std::to_string(horizon + 1) + " for horizon " +
                        std::to_string(horizon));
    }
    const bool upper_family =
        family == ratio_family::type1 || family == ratio_family::nonhomog_plus;
    const std::int64_t low = upper_family ? p : p - 1;
    const std::int64_t high = low + 1;

    // Ratio at 1-based n is seq[n] / seq[n-1] in 0-based storage. The onset
    // is one past the last ratio falling outside the open interval.
    const auto inside = [&](std::size_t n) {
        const bigint& num = seq[n];
        const bigint& den = seq[n - 1];
        return low * den < num && num < high * den;
    };
    std::size_t last_outside = 0;
    for (std::size_t n = 2; n <= horizon; ++n) {
        if (!inside(n)) last_outside = n;
    }
    if (last_outside == horizon) {
        throw error(errc::no_onset,
                    "ratios have not settled in (" + std::to_string(low) + ", " +
                        std::to_string(high) + ") by n = " + std::to_string(horizon));
    }

    ratio_analysis out;
    out.k0 = std::max<std::size_t>(2, last_outside + 1);
    out.interval_low = low;
    out.interval_high = high;
    out.ceil_ratio_after_onset = high;
    for (std::size_t n = out.k0; n <= horizon; ++n) {
        if (ceil_div(seq[n], seq[n - 1]) != high) {
            throw error(errc::verification_failed,
                        "onset ratio at n = " + std::to_string(n) +
                            " does not have ceiling " + std::to_string(high));
        }
    }
    for (std::size_t n = 2; n < out.k0; ++n) {
        out.pre_onset_ratios.push_back({n, {seq[n], seq[n - 1]}});
    }

    // Worst-case onset of a genuine type-2 sequence: J_4/J_3 in (p-2, p-1].
    if (family == ratio_family::type2 && out.k0 == 4) {
        const bigint& j3 = seq[2];
        const bigint& j4 = seq[3];
        if (!((p - 2) * j3 < j4 && j4 <= (p - 1) * j3)) {
            throw error(errc::verification_failed,
                        "type-2 onset at 4 but J_4/J_3 = " + j4.str() + "/" +
                            j3.str() + " is outside (p-2, p-1]");
        }
    }
    return out;
}

namespace {

enum class side { below, above, equal };

// Exact position of a relative to lambda = (p + sqrt(disc)) / 2.
side a_versus_lambda(std::int64_t a, std::int64_t p, const bigint& disc) {
    const bigint s = 2 * bigint(a) - p;
    if (s <= 0) return side::below;
    const bigint s2 = s * s;
    if (s2 < disc) return side::below;
    if (s2 > disc) return side::above;
    return side::equal;
}

}  // namespace

bool check_monotonicity(const std::vector<bigint>& seq, std::int64_t a,
                        std::int64_t p, std::int64_t q, root_family family) {
    if (seq.size() < 8) {
        throw error(errc::invalid_params,
                    "monotonicity check needs at least 8 terms");
    }
    const bigint disc = family == root_family::type1
                            ? bigint(p) * p + 4 * bigint(q)
                            : bigint(p) * p - 4 * bigint(q);
    if (disc <= 0) {
        throw error(errc::degenerate_roots,
                    "discriminant " + disc.str() + " is not positive");
    }
    const side pos = a_versus_lambda(a, p, disc);
    if (pos == side::equal) return true;  // geometric sequence, constant ratios
    const bool a_below = pos == side::below;

    if (family == root_family::type2) {
        // Single ratio sequence J_{n+1}/J_n: increasing iff a < lambda.
        for (std::size_t n = 1; n + 1 < seq.size(); ++n) {
            const bigint lhs = seq[n] * seq[n];
            const bigint rhs = seq[n - 1] * seq[n + 1];
            if (a_below ? lhs >= rhs : lhs <= rhs) return false;
        }
        return true;
    }

    // Type 1: ratios at even positions G_{2k+2}/G_{2k+1} rise towards lambda
    // when a < lambda (fall when a > lambda); odd positions do the opposite.
    for (std::size_t i = 0; i + 3 < seq.size(); ++i) {
        const bigint lhs = seq[i + 1] * seq[i + 2];
        const bigint rhs = seq[i] * seq[i + 3];
        const bool even_pair = i % 2 == 0;
        const bool expect_less = even_pair == a_below;
        if (expect_less ? lhs >= rhs : lhs <= rhs) return false;
    }
    return true;
}

greediness_report find_counterexample(const std::vector<bigint>& seq,
                                      std::size_t dp_limit) {
    const coin_system system(seq);
    greediness_report report = is_totally_greedy(system);
    if (report.result == verdict::totally_greedy) return report;

    const std::size_t len = *report.failing_prefix_length;
    const coin_system prefix = system.prefix(len);
    const bigint bound = prefix.denoms()[len - 2] + prefix.denoms()[len - 1];
    if (bound - 1 > bigint(dp_limit)) {
        report.witness_search_skipped = true;
        return report;
    }
    const greediness_report scan = is_greedy(prefix, dp_limit);
    if (scan.result != verdict::not_greedy) {
        throw error(errc::verification_failed,
                    "one-point chain failed at prefix length " +
                        std::to_string(len) +
                        " but the witness scan found no counterexample");
    }
    report.witness_amount = scan.witness_amount;
    report.greedy_cost_at_witness = scan.greedy_cost_at_witness;
    report.optimal_cost_at_witness = scan.optimal_cost_at_witness;
    return report;
}

namespace {

theorem_verdict verdict_from_report(theorem_id id, recurrence_params params,
                                    std::size_t depth,
                                    const greediness_report& report,
                                    std::string note = {}) {
    theorem_verdict v{id, std::move(params), depth, report.positive(),
                      std::nullopt, std::move(note)};
    if (!v.holds) {
        v.first_failure =
            failure_point{*report.failing_prefix_length, report.witness_amount};
    }
    return v;
}

}  // namespace

theorem_verdict verify_theorem2(const type1_params& params, std::size_t depth) {
    if (!params.is_type1()) {
        throw error(errc::ineligible_params,
                    "q = " + std::to_string(params.q) + " exceeds p = " +
                        std::to_string(params.p) + "; outside the type-1 family");
    }
    if (!params.meets_theorem2()) {
        throw error(errc::ineligible_params,
                    "a = " + std::to_string(params.a) + " exceeds p + q = " +
                        std::to_string(params.p + params.q));
    }
    if (depth < 3) {
        throw error(errc::invalid_params, "depth must be at least 3");
    }
    const auto terms = generate_type1(params, depth);
    return verdict_from_report(theorem_id::t2_type1, params, depth,
                               find_counterexample(terms));
}

theorem_verdict verify_theorem3(const type2_params& params, std::size_t depth) {
    if (!params.is_type2()) {
        throw error(errc::ineligible_params,
                    "q = " + std::to_string(params.q) + " exceeds p - 2 = " +
                        std::to_string(params.p - 2) + "; outside the type-2 family");
    }
    if (depth < 4) {
        throw error(errc::invalid_params, "depth must be at least 4");
    }
    const auto terms = generate_type2(params, depth);
    return verdict_from_report(theorem_id::t3_type2, params, depth,
                               find_counterexample(terms));
}

theorem_verdict verify_proposition3(const nonhomog_params& params,
                                    std::size_t depth) {
    if (params.subtract_q) {
        throw error(errc::ineligible_params,
                    "the non-homogeneous result is stated for the +q family");
    }
    if (params.q > params.p) {
        throw error(errc::ineligible_params,
                    "needs q <= p, got q = " + std::to_string(params.q) +
                        ", p = " + std::to_string(params.p));
    }
    if (depth < 6) {
        throw error(errc::invalid_params,
                    "depth must be at least 6 to locate the onset");
    }
    const auto terms = generate_nonhomog(params, depth);

    ratio_analysis ratios;
    try {
        ratios = compute_k0(terms, ratio_family::nonhomog_plus, params.p, depth - 1);
    } catch (const error& e) {
        if (e.kind() == errc::no_onset) {
            throw error(errc::ineligible_params, e.what());
        }
        throw;
    }

    const std::vector<bigint> prefix(terms.begin(), terms.begin() + ratios.k0);
    const greediness_report base = is_greedy(coin_system(prefix));
    if (!base.positive()) {
        throw error(errc::ineligible_params,
                    "prefix of length " + std::to_string(ratios.k0) +
                        " is not greedy; the hypothesis is unmet");
    }

    std::string note;
    if (ratios.k0 == 2) {
        note = "onset K0=2 admitted alongside the stated K0>=3 hypothesis";
    }
    return verdict_from_report(theorem_id::p3_nonhomog, params, depth,
                               find_counterexample(terms), std::move(note));
}

namespace {

// The extracted subsequence must satisfy x_k = p'x_{k-1} - q'x_{k-2} exactly;
// anything else is an implementation fault, not a mathematical finding.
void require_transformed_recurrence(const subsequence_result& sub) {
    for (std::size_t k = 2; k < sub.terms.size(); ++k) {
        if (sub.terms[k] != sub.transformed.p * sub.terms[k - 1] -
                                sub.transformed.q * sub.terms[k - 2]) {
            throw error(errc::verification_failed,
                        "odd subsequence violates its transformed recurrence at k = " +
                            std::to_string(k + 1));
        }
    }
}

}  // namespace

theorem_verdict verify_corollary4(const type1_params& source, std::size_t depth) {
    if (!source.is_type1() || !source.meets_theorem2()) {
        throw error(errc::ineligible_params,
                    "source must be a totally greedy type-1 family "
                    "(q <= p and 2 <= a <= p+q)");
    }
    if (depth < 4) {
        throw error(errc::invalid_params, "depth must be at least 4");
    }
    const subsequence_result sub = odd_subsequence(source, depth);
    require_transformed_recurrence(sub);
    return verdict_from_report(theorem_id::c4_odd, source, depth,
                               find_counterexample(sub.terms));
}

theorem_verdict verify_corollary4(const type2_params& source, std::size_t depth) {
    if (!source.is_type2()) {
        throw error(errc::ineligible_params,
                    "source must be a type-2 family (q <= p - 2)");
    }
    if (depth < 4) {
        throw error(errc::invalid_params, "depth must be at least 4");
    }
    const subsequence_result sub = odd_subsequence(source, depth);
    require_transformed_recurrence(sub);
    return verdict_from_report(theorem_id::c4_odd, source, depth,
                               find_counterexample(sub.terms));
}

theorem_verdict verify_corollary5(const type1_params& source, std::size_t depth) {
    if (!source.is_type1() || !source.meets_theorem2()) {
        throw error(errc::ineligible_params,
                    "source must be a totally greedy type-1 family "
                    "(q <= p and 2 <= a <= p+q)");
    }
    if (depth < 4) {
        throw error(errc::invalid_params, "depth must be at least 4");
    }
    const even_subsequence_result sub = even_subsequence_modified(source, depth);
    if (!sub.base_equality_holds) {
        throw error(errc::ineligible_params,
                    "the modified even subsequence does not satisfy its recurrence "
                    "across the prepended 1 for these parameters");
    }
    return verdict_from_report(theorem_id::c5_even1, source, depth,
                               find_counterexample(sub.terms),
                               "eligibility decided by the computed base equality");
}

theorem_verdict verify_corollary6(const type2_params& source, std::size_t depth) {
    if (!source.is_type2()) {
        throw error(errc::ineligible_params,
                    "source must be a type-2 family (q <= p - 2)");
    }
    if (source.a != source.p - source.q) {
        throw error(errc::ineligible_params,
                    "needs a = p - q, got a = " + std::to_string(source.a));
    }
    if (depth < 4) {
        throw error(errc::invalid_params, "depth must be at least 4");
    }
    const even_subsequence_result sub = even_subsequence_modified(source, depth);
    if (!sub.base_equality_holds) {
        throw error(errc::verification_failed,
                    "a = p - q must make the base equality hold");
    }
    return verdict_from_report(theorem_id::c6_even2, source, depth,
                               find_counterexample(sub.terms));
}

std::vector<theorem_verdict> verify_subsequence_corollaries(
    const recurrence_params& source, std::size_t depth) {
    std::vector<theorem_verdict> verdicts;
    if (const auto* t1 = std::get_if<type1_params>(&source)) {
        verdicts.push_back(verify_corollary4(*t1, depth));
        if (even_subsequence_modified(*t1, 3).base_equality_holds) {
            verdicts.push_back(verify_corollary5(*t1, depth));
        }
    } else if (const auto* t2 = std::get_if<type2_params>(&source)) {
        verdicts.push_back(verify_corollary4(*t2, depth));
        if (t2->a == t2->p - t2->q) {
            verdicts.push_back(verify_corollary6(*t2, depth));
        }
    } else {
        throw error(errc::ineligible_params,
                    "subsequence results apply to the homogeneous families only");
    }
    return verdicts;
}

corollary5_report investigate_corollary5(std::int64_t max_p, std::int64_t max_q,
                                         std::int64_t max_a) {
    if (max_p < 1 || max_q < 1 || max_a < 2) {
        throw error(errc::invalid_params, "grid bounds too small");
    }
    corollary5_report report{};
    report.max_p = max_p;
    report.max_q = max_q;
    report.max_a = max_a;

    for (std::int64_t p = 1; p <= max_p; ++p) {
        for (std::int64_t q = 1; q <= std::min(p, max_q); ++q) {
            for (std::int64_t a = 2; a <= max_a; ++a) {
                const type1_params src(a, p, q);
                if (even_subsequence_modified(src, 3).base_equality_holds) {
                    report.satisfying.push_back({p, q, a});
                }
            }
        }
    }

    // Compare against a = p + q, the family the grid keeps producing.
    std::vector<std::array<std::int64_t, 3>> expected;
    for (std::int64_t p = 1; p <= max_p; ++p) {
        for (std::int64_t q = 1; q <= std::min(p, max_q); ++q) {
            if (p + q <= max_a) expected.push_back({p, q, p + q});
        }
    }
    report.family_is_a_equals_p_plus_q = report.satisfying == expected;

    // The family as stated: p = q + 1, a = q.
    for (std::int64_t q = 1; q <= max_q && q + 1 <= max_p; ++q) {
        const std::int64_t a = q;
        if (a < 2 || a > max_a) continue;
        ++report.stated_family_points;
        if (even_subsequence_modified(type1_params(a, q + 1, q), 3)
                .base_equality_holds) {
            ++report.stated_family_satisfying;
        }
    }

    // The family from the quotient formula a = (pq + q^2) / (2q - 1).
    for (std::int64_t p = 1; p <= max_p; ++p) {
        for (std::int64_t q = 1; q <= std::min(p, max_q); ++q) {
            const std::int64_t num = p * q + q * q;
            const std::int64_t den = 2 * q - 1;
            if (num % den != 0) continue;
            const std::int64_t a = num / den;
            if (a < 2 || a > max_a) continue;
            ++report.quotient_family_points;
            if (even_subsequence_modified(type1_params(a, p, q), 3)
                    .base_equality_holds) {
                ++report.quotient_family_satisfying;
            }
        }
    }
    return report;
}

}  // namespace greedyseq
