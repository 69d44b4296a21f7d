#include "greedyseq/records.hpp"

namespace greedyseq {

json terms_to_json(const std::vector<bigint>& terms) {
    json arr = json::array();
    for (const bigint& t : terms) arr.push_back(to_decimal(t));
    return arr;
}

json to_json(const coin_system& system) {
    return json{{"denominations", terms_to_json(system.denoms())}};
}

json to_json(const payment_vector& payment) {
    return json{{"amount", to_decimal(payment.amount)},
                {"counts", terms_to_json(payment.counts)},
                {"cost", to_decimal(payment.cost)}};
}

json to_json(const greediness_report& report) {
    json out{{"verdict", verdict_name(report.result)}};
    if (report.witness_amount) {
        out["witness_amount"] = to_decimal(*report.witness_amount);
    }
    if (report.greedy_cost_at_witness) {
        out["greedy_cost_at_witness"] = to_decimal(*report.greedy_cost_at_witness);
    }
    if (report.optimal_cost_at_witness) {
        out["optimal_cost_at_witness"] = to_decimal(*report.optimal_cost_at_witness);
    }
    if (report.failing_prefix_length) {
        out["failing_prefix_length"] = *report.failing_prefix_length;
    }
    if (report.witness_search_skipped) {
        out["witness_search_skipped"] = true;
    }
    return out;
}

json to_json(const type1_params& params) {
    return json{{"family", "type1"},
                {"a", params.a},
                {"p", params.p},
                {"q", params.q}};
}

json to_json(const type2_params& params) {
    return json{{"family", "type2"},
                {"a", params.a},
                {"p", params.p},
                {"q", params.q}};
}

json to_json(const nonhomog_params& params) {
    return json{{"family", "nonhomog"},
                {"a", params.a},
                {"p", params.p},
                {"q", params.q},
                {"r", params.r},
                {"sign", params.subtract_q ? "minus" : "plus"}};
}

json to_json(const recurrence_params& params) {
    return std::visit([](const auto& p) { return to_json(p); }, params);
}

namespace {

std::string real_to_string(const real50& x) { return x.str(50); }

}  // namespace

json to_json(const characteristic_roots& roots) {
    json out{{"family", roots.family == root_family::type1 ? "type1" : "type2"},
             {"p", roots.p},
             {"q", roots.q},
             {"discriminant", to_decimal(roots.discriminant)},
             {"lambda", real_to_string(roots.lambda)},
             {"mu", real_to_string(roots.mu)}};
    if (roots.a) out["a"] = *roots.a;
    if (roots.c1) out["c1"] = real_to_string(*roots.c1);
    if (roots.c2) out["c2"] = real_to_string(*roots.c2);
    return out;
}

json to_json(const ratio_analysis& ratios) {
    json pre = json::array();
    for (const auto& [n, ratio] : ratios.pre_onset_ratios) {
        pre.push_back(json{{"n", n},
                           {"numerator", to_decimal(ratio.first)},
                           {"denominator", to_decimal(ratio.second)}});
    }
    return json{{"k0", ratios.k0},
                {"interval_low", ratios.interval_low},
                {"interval_high", ratios.interval_high},
                {"ceil_ratio_after_onset", ratios.ceil_ratio_after_onset},
                {"pre_onset_ratios", std::move(pre)}};
}

json to_json(const subsequence_result& sub) {
    return json{{"terms", terms_to_json(sub.terms)},
                {"transformed", to_json(sub.transformed)}};
}

json to_json(const even_subsequence_result& sub) {
    return json{{"terms", terms_to_json(sub.terms)},
                {"transformed", to_json(sub.transformed)},
                {"base_equality", sub.base_equality_holds}};
}

json to_json(const theorem_verdict& verdict) {
    json out{{"theorem", theorem_id_name(verdict.id)},
             {"params", to_json(verdict.params)},
             {"prefix_depth_checked", verdict.prefix_depth_checked},
             {"holds", verdict.holds}};
    if (verdict.first_failure) {
        json failure{{"prefix_length", verdict.first_failure->prefix_length}};
        if (verdict.first_failure->witness_amount) {
            failure["witness_amount"] =
                to_decimal(*verdict.first_failure->witness_amount);
        }
        out["first_failure"] = std::move(failure);
    }
    if (!verdict.note.empty()) out["note"] = verdict.note;
    return out;
}

json to_json(const corollary5_report& report) {
    json sat = json::array();
    for (const auto& [p, q, a] : report.satisfying) {
        sat.push_back(json{{"p", p}, {"q", q}, {"a", a}});
    }
    return json{{"max_p", report.max_p},
                {"max_q", report.max_q},
                {"max_a", report.max_a},
                {"satisfying", std::move(sat)},
                {"family_is_a_equals_p_plus_q", report.family_is_a_equals_p_plus_q},
                {"stated_family_points", report.stated_family_points},
                {"stated_family_satisfying", report.stated_family_satisfying},
                {"quotient_family_points", report.quotient_family_points},
                {"quotient_family_satisfying", report.quotient_family_satisfying}};
}

json output_record(const std::string& command, json inputs, json result) {
    return json{{"command", command},
                {"inputs", std::move(inputs)},
                {"result", std::move(result)},
                {"status", "ok"}};
}

json error_record(const std::string& command, json inputs,
                  const std::string& error_kind, const std::string& message) {
    return json{{"command", command},
                {"inputs", std::move(inputs)},
                {"result", json{{"message", message}}},
                {"status", "error"},
                {"error_kind", error_kind}};
}

}  // namespace greedyseq
