// Command-line front end: greedy/optimal payments, greediness checks,
// sequence generation, subsequence transforms, ratio onsets, characteristic
// roots, and the full verification suite. Every subcommand prints either
// human-readable text (default) or one JSON record (--json).
//
// Exit codes: 0 ok / positive verdict, 1 negative verdict, 2 usage or input
// error. Environment: GREEDY_DP_LIMIT caps the dynamic-programming oracle,
// GREEDY_DEPTH sets the default term count for gen/subseq/k0.

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "greedyseq/analysis.hpp"
#include "greedyseq/canonicality.hpp"
#include "greedyseq/coin.hpp"
#include "greedyseq/criteria.hpp"
#include "greedyseq/records.hpp"
#include "greedyseq/recurrences.hpp"

namespace {

using namespace greedyseq;

std::size_t env_size_t(const char* name, std::size_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    std::size_t value = 0;
    const char* end = raw + std::string_view(raw).size();
    const auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc() || ptr != end || value == 0) {
        throw error(errc::invalid_params,
                    std::string(name) + " must be a positive integer, got '" +
                        raw + "'");
    }
    return value;
}

std::size_t env_dp_limit() { return env_size_t("GREEDY_DP_LIMIT", default_dp_limit); }
std::size_t env_depth() { return env_size_t("GREEDY_DEPTH", 25); }

void emit(const json& record) { std::cout << record.dump(2) << "\n"; }

std::string join_terms(const std::vector<bigint>& terms) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0) out += " ";
        out += to_decimal(terms[i]);
    }
    return out;
}

void print_report_human(const greediness_report& report) {
    std::cout << verdict_name(report.result) << "\n";
    if (report.failing_prefix_length) {
        std::cout << "failing prefix length: " << *report.failing_prefix_length
                  << "\n";
    }
    if (report.witness_amount) {
        std::cout << "witness amount: " << to_decimal(*report.witness_amount)
                  << " (greedy " << to_decimal(*report.greedy_cost_at_witness)
                  << ", optimal " << to_decimal(*report.optimal_cost_at_witness)
                  << ")\n";
    }
    if (report.witness_search_skipped) {
        std::cout << "witness search skipped: bound exceeds the DP limit\n";
    }
}

int verdict_exit(const greediness_report& report) {
    return report.positive() ? 0 : 1;
}

// ---- pay ----------------------------------------------------------------

struct pay_options {
    std::string set;
    std::string amount;
    std::string mode = "greedy";
};

int cmd_pay(const pay_options& opt, bool json_mode) {
    const coin_system system = parse_coin_system(opt.set);
    const bigint amount = parse_bigint(opt.amount);
    if (amount < 0) {
        throw error(errc::invalid_params, "amount must be non-negative");
    }
    const payment_vector payment = opt.mode == "greedy"
                                       ? greedy_payment(system, amount)
                                       : optimal_payment(system, amount, env_dp_limit());
    if (json_mode) {
        emit(output_record("pay",
                           json{{"set", opt.set},
                                {"amount", opt.amount},
                                {"mode", opt.mode}},
                           to_json(payment)));
    } else {
        std::cout << "counts: " << join_terms(payment.counts) << "\n"
                  << "cost: " << to_decimal(payment.cost) << "\n";
    }
    return 0;
}

// ---- check --------------------------------------------------------------

struct check_options {
    std::string set;
    std::string mode = "greedy";
};

int cmd_check(const check_options& opt, bool json_mode) {
    const coin_system system = parse_coin_system(opt.set);
    const greediness_report report = opt.mode == "greedy"
                                         ? is_greedy(system, env_dp_limit())
                                         : is_totally_greedy(system);
    greediness_report enriched = report;
    if (opt.mode == "totally-greedy" &&
        report.result == verdict::not_totally_greedy) {
        // Borrow the witness scanner to attach a concrete counterexample.
        const std::vector<bigint>& d = system.denoms();
        enriched = find_counterexample(d, env_dp_limit());
    }
    if (json_mode) {
        emit(output_record("check", json{{"set", opt.set}, {"mode", opt.mode}},
                           to_json(enriched)));
    } else {
        print_report_human(enriched);
    }
    return verdict_exit(enriched);
}

// ---- shared family/params plumbing ---------------------------------------

struct family_options {
    std::string family;
    std::int64_t a = 0;
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t r = 0;
    std::string sign = "plus";
    std::size_t n = 0;  // 0 = take the environment default
};

recurrence_params parse_family(const family_options& opt) {
    if (opt.family == "type1") return type1_params(opt.a, opt.p, opt.q);
    if (opt.family == "type2") return type2_params(opt.a, opt.p, opt.q);
    return nonhomog_params(opt.a, opt.p, opt.q, opt.r, opt.sign == "minus");
}

std::vector<bigint> generate_any(const recurrence_params& params, std::size_t n) {
    if (const auto* t1 = std::get_if<type1_params>(&params)) {
        return generate_type1(*t1, n);
    }
    if (const auto* t2 = std::get_if<type2_params>(&params)) {
        return generate_type2(*t2, n);
    }
    return generate_nonhomog(std::get<nonhomog_params>(params), n);
}

json family_inputs(const family_options& opt, std::size_t n) {
    json inputs{{"family", opt.family},
                {"a", opt.a},
                {"p", opt.p},
                {"q", opt.q},
                {"n", n}};
    if (opt.family == "nonhomog") {
        inputs["r"] = opt.r;
        inputs["sign"] = opt.sign;
    }
    return inputs;
}

ratio_family ratio_family_of(const recurrence_params& params) {
    if (std::holds_alternative<type1_params>(params)) return ratio_family::type1;
    if (std::holds_alternative<type2_params>(params)) return ratio_family::type2;
    return std::get<nonhomog_params>(params).subtract_q
               ? ratio_family::nonhomog_minus
               : ratio_family::nonhomog_plus;
}

// ---- gen ------------------------------------------------------------------

struct gen_options : family_options {
    bool verify = false;
};

int cmd_gen(const gen_options& opt, bool json_mode) {
    const std::size_t n = opt.n > 0 ? opt.n : env_depth();
    const recurrence_params params = parse_family(opt);
    const std::vector<bigint> terms = generate_any(params, n);

    std::optional<greediness_report> report;
    std::optional<ratio_analysis> ratios;
    std::string ratio_note;
    if (opt.verify) {
        report = find_counterexample(terms, env_dp_limit());
        try {
            ratios = compute_k0(terms, ratio_family_of(params), opt.p, n - 1);
        } catch (const error& e) {
            if (e.kind() == errc::no_onset || e.kind() == errc::horizon_too_small) {
                ratio_note = e.what();
            } else {
                throw;
            }
        }
    }

    if (json_mode) {
        json result{{"terms", terms_to_json(terms)},
                    {"params", to_json(params)}};
        if (report) result["greediness"] = to_json(*report);
        if (ratios) result["ratios"] = to_json(*ratios);
        if (!ratio_note.empty()) result["ratio_note"] = ratio_note;
        json inputs = family_inputs(opt, n);
        inputs["verify"] = opt.verify;
        emit(output_record("gen", std::move(inputs), std::move(result)));
    } else {
        std::cout << join_terms(terms) << "\n";
        if (report) print_report_human(*report);
        if (ratios) {
            std::cout << "ratio onset: " << ratios->k0 << " (interval ("
                      << ratios->interval_low << ", " << ratios->interval_high
                      << "))\n";
        }
        if (!ratio_note.empty()) std::cout << "ratios: " << ratio_note << "\n";
    }
    return report ? verdict_exit(*report) : 0;
}

// ---- subseq ----------------------------------------------------------------

struct subseq_options : family_options {
    std::string parity = "odd";
};

int cmd_subseq(const subseq_options& opt, bool json_mode) {
    const std::size_t n = opt.n > 0 ? opt.n : env_depth();
    if (opt.family == "nonhomog") {
        throw error(errc::invalid_params,
                    "subsequence transforms apply to type1/type2 sources");
    }

    std::vector<bigint> terms;
    std::optional<type2_params> transformed;
    std::optional<bool> base_equality;
    if (opt.parity == "odd") {
        const subsequence_result sub =
            opt.family == "type1"
                ? odd_subsequence(type1_params(opt.a, opt.p, opt.q), n)
                : odd_subsequence(type2_params(opt.a, opt.p, opt.q), n);
        terms = sub.terms;
        transformed = sub.transformed;
    } else {
        const even_subsequence_result sub =
            opt.family == "type1"
                ? even_subsequence_modified(type1_params(opt.a, opt.p, opt.q), n)
                : even_subsequence_modified(type2_params(opt.a, opt.p, opt.q), n);
        terms = sub.terms;
        transformed = sub.transformed;
        base_equality = sub.base_equality_holds;
    }
    const greediness_report report = find_counterexample(terms, env_dp_limit());

    if (json_mode) {
        json result{{"terms", terms_to_json(terms)},
                    {"transformed", to_json(*transformed)},
                    {"greediness", to_json(report)}};
        if (base_equality) result["base_equality"] = *base_equality;
        json inputs = family_inputs(opt, n);
        inputs["parity"] = opt.parity;
        emit(output_record("subseq", std::move(inputs), std::move(result)));
    } else {
        std::cout << join_terms(terms) << "\n"
                  << "transformed: a'=" << transformed->a << " p'=" << transformed->p
                  << " q'=" << transformed->q << "\n";
        if (base_equality) {
            std::cout << "base equality: " << (*base_equality ? "true" : "false")
                      << "\n";
        }
        print_report_human(report);
    }
    return verdict_exit(report);
}

// ---- k0 --------------------------------------------------------------------

int cmd_k0(const family_options& opt, bool json_mode) {
    const std::size_t n = opt.n > 0 ? opt.n : env_depth();
    const recurrence_params params = parse_family(opt);
    const std::vector<bigint> terms = generate_any(params, n);
    const ratio_analysis ratios =
        compute_k0(terms, ratio_family_of(params), opt.p, n - 1);

    if (json_mode) {
        emit(output_record("k0", family_inputs(opt, n), to_json(ratios)));
    } else {
        std::cout << "K0 = " << ratios.k0 << ", ratios settle in ("
                  << ratios.interval_low << ", " << ratios.interval_high
                  << "), ceiling " << ratios.ceil_ratio_after_onset << "\n";
        for (const auto& [idx, ratio] : ratios.pre_onset_ratios) {
            std::cout << "ratio " << idx << ": " << to_decimal(ratio.first) << "/"
                      << to_decimal(ratio.second) << "\n";
        }
    }
    return 0;
}

// ---- roots -----------------------------------------------------------------

struct roots_options {
    std::string family;
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::optional<std::int64_t> a;
};

int cmd_roots(const roots_options& opt, bool json_mode) {
    const root_family family =
        opt.family == "type1" ? root_family::type1 : root_family::type2;
    const characteristic_roots roots = char_roots(opt.p, opt.q, family, opt.a);

    if (json_mode) {
        json inputs{{"family", opt.family}, {"p", opt.p}, {"q", opt.q}};
        if (opt.a) inputs["a"] = *opt.a;
        emit(output_record("roots", std::move(inputs), to_json(roots)));
    } else {
        std::cout << "discriminant: " << to_decimal(roots.discriminant) << "\n"
                  << "lambda: " << roots.lambda.str(50) << "\n"
                  << "mu: " << roots.mu.str(50) << "\n";
        if (roots.c1) {
            std::cout << "c1: " << roots.c1->str(50) << "\n"
                      << "c2: " << roots.c2->str(50) << "\n";
        }
    }
    return 0;
}

// ---- verify-paper ------------------------------------------------------------

int cmd_verify_paper(bool json_mode) {
    const std::vector<criterion_result> results = run_all_criteria();
    bool all_passed = true;
    for (const auto& r : results) all_passed = all_passed && r.passed;

    if (json_mode) {
        json rows = json::array();
        for (const auto& r : results) {
            rows.push_back(json{{"id", r.id},
                                {"title", r.title},
                                {"passed", r.passed},
                                {"detail", r.detail}});
        }
        emit(output_record("verify-paper", json::object(),
                           json{{"criteria", std::move(rows)},
                                {"all_passed", all_passed}}));
    } else {
        for (const auto& r : results) {
            std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.id << ": "
                      << r.title << "\n      " << r.detail << "\n";
        }
        std::cout << (all_passed ? "all criteria passed"
                                 : "some criteria FAILED")
                  << "\n";
    }
    return all_passed ? 0 : 1;
}

void add_family_flags(CLI::App* cmd, family_options& opt, bool with_r) {
    cmd->add_option("--family", opt.family, "sequence family")
        ->required()
        ->check(CLI::IsMember(with_r ? std::vector<std::string>{"type1", "type2",
                                                                "nonhomog"}
                                     : std::vector<std::string>{"type1", "type2"}));
    cmd->add_option("-a", opt.a, "second term")->required();
    cmd->add_option("-p", opt.p, "coefficient of the previous term")->required();
    cmd->add_option("-q", opt.q, "coefficient of the term before that")->required();
    if (with_r) {
        cmd->add_option("-r", opt.r, "additive constant (nonhomog only)");
        cmd->add_option("--sign", opt.sign, "sign of the q term (nonhomog only)")
            ->check(CLI::IsMember({"plus", "minus"}));
    }
    cmd->add_option("-n", opt.n, "number of terms (default GREEDY_DEPTH or 25)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Greedy change-making, canonicality checks and totally greedy "
                 "recurrence sequences"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "print one JSON record instead of text");

    pay_options pay_opt;
    CLI::App* pay = app.add_subcommand("pay", "pay an amount with a coin system");
    pay->add_option("--set", pay_opt.set, "denominations, e.g. 1,2,5")->required();
    pay->add_option("--amount", pay_opt.amount, "amount to pay")->required();
    pay->add_option("--mode", pay_opt.mode, "greedy or optimal")
        ->check(CLI::IsMember({"greedy", "optimal"}));

    check_options check_opt;
    CLI::App* check = app.add_subcommand("check", "test a system for greediness");
    check->add_option("--set", check_opt.set, "denominations")->required();
    check->add_option("--mode", check_opt.mode, "greedy or totally-greedy")
        ->check(CLI::IsMember({"greedy", "totally-greedy"}));

    gen_options gen_opt;
    CLI::App* gen = app.add_subcommand("gen", "generate a recurrence sequence");
    add_family_flags(gen, gen_opt, /*with_r=*/true);
    gen->add_flag("--verify", gen_opt.verify,
                  "also run the totally-greedy check and ratio analysis");

    subseq_options subseq_opt;
    CLI::App* subseq =
        app.add_subcommand("subseq", "odd/even subsequence with transformed params");
    add_family_flags(subseq, subseq_opt, /*with_r=*/false);
    subseq->add_option("--parity", subseq_opt.parity, "odd or even")
        ->required()
        ->check(CLI::IsMember({"odd", "even"}));

    family_options k0_opt;
    CLI::App* k0 = app.add_subcommand("k0", "ratio onset analysis");
    add_family_flags(k0, k0_opt, /*with_r=*/true);

    roots_options roots_opt;
    CLI::App* roots = app.add_subcommand("roots", "characteristic roots");
    roots->add_option("--family", roots_opt.family, "type1 or type2")
        ->required()
        ->check(CLI::IsMember({"type1", "type2"}));
    roots->add_option("-p", roots_opt.p, "coefficient of the previous term")
        ->required();
    roots->add_option("-q", roots_opt.q, "coefficient of the term before that")
        ->required();
    std::int64_t roots_a = 0;
    CLI::Option* a_opt = roots->add_option("-a", roots_a, "second term, for c1/c2");

    CLI::App* verify =
        app.add_subcommand("verify-paper", "run the full verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    // Echo of the parsed arguments for the error envelope; the success paths
    // rebuild the same echo with the resolved term count.
    json inputs = json::object();
    if (pay->parsed()) {
        inputs = json{{"set", pay_opt.set},
                      {"amount", pay_opt.amount},
                      {"mode", pay_opt.mode}};
    } else if (check->parsed()) {
        inputs = json{{"set", check_opt.set}, {"mode", check_opt.mode}};
    } else if (gen->parsed()) {
        inputs = family_inputs(gen_opt, gen_opt.n);
        inputs["verify"] = gen_opt.verify;
    } else if (subseq->parsed()) {
        inputs = family_inputs(subseq_opt, subseq_opt.n);
        inputs["parity"] = subseq_opt.parity;
    } else if (k0->parsed()) {
        inputs = family_inputs(k0_opt, k0_opt.n);
    } else if (roots->parsed()) {
        inputs = json{{"family", roots_opt.family}, {"p", roots_opt.p},
                      {"q", roots_opt.q}};
    }
    try {
        if (pay->parsed()) return cmd_pay(pay_opt, json_mode);
        if (check->parsed()) return cmd_check(check_opt, json_mode);
        if (gen->parsed()) return cmd_gen(gen_opt, json_mode);
        if (subseq->parsed()) return cmd_subseq(subseq_opt, json_mode);
        if (k0->parsed()) return cmd_k0(k0_opt, json_mode);
        if (roots->parsed()) {
            if (a_opt->count() > 0) roots_opt.a = roots_a;
            return cmd_roots(roots_opt, json_mode);
        }
        if (verify->parsed()) return cmd_verify_paper(json_mode);
    } catch (const error& e) {
        if (json_mode) {
            emit(error_record(command, inputs, e.kind_name(), e.what()));
        } else {
            std::cerr << "error (" << e.kind_name() << "): " << e.what() << "\n";
        }
        return 2;
    } catch (const std::exception& e) {
        if (json_mode) {
            emit(error_record(command, inputs, "Internal", e.what()));
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 2;
    }
    return 2;
}
