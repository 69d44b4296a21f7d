#include <sys/wait.h>

#include <cstdio>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "greedyseq/records.hpp"

// GREEDYSEQ_CLI_PATH is injected by the build; these tests drive the real
// binary through a shell and inspect exit codes and output.

namespace {

struct cli_result {
    int exit_code;
    std::string out;
};

cli_result run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd;
    if (!env.empty()) cmd += env + " ";
    cmd += std::string(GREEDYSEQ_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

nlohmann::json parse_record(const cli_result& r) {
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("pay: greedy and optimal modes") {
    const cli_result greedy = run_cli("pay --set 1,2,5 --amount 8 --mode greedy");
    CHECK(greedy.exit_code == 0);
    CHECK(greedy.out.find("counts: 1 1 1") != std::string::npos);
    CHECK(greedy.out.find("cost: 3") != std::string::npos);

    const cli_result optimal =
        run_cli("--json pay --set 1,4,6 --amount 8 --mode optimal");
    CHECK(optimal.exit_code == 0);
    const auto record = parse_record(optimal);
    CHECK(record["status"] == "ok");
    CHECK(record["command"] == "pay");
    CHECK(record["result"]["cost"] == "2");
    CHECK(record["result"]["amount"] == "8");
    CHECK_FALSE(record.contains("error_kind"));

    const cli_result zero = run_cli("pay --set 1 --amount 0");
    CHECK(zero.exit_code == 0);
    CHECK(zero.out.find("cost: 0") != std::string::npos);
}

TEST_CASE("pay: parse failures exit 2 with an error kind") {
    const cli_result bad_set = run_cli("--json pay --set 2,5 --amount 8");
    CHECK(bad_set.exit_code == 2);
    const auto record = parse_record(bad_set);
    CHECK(record["status"] == "error");
    CHECK(record["error_kind"] == "InvalidCoinSystem");

    const cli_result bad_amount = run_cli("pay --set 1,2 --amount 3x");
    CHECK(bad_amount.exit_code == 2);

    const cli_result usage = run_cli("pay --set 1,2");  // missing --amount
    CHECK(usage.exit_code == 2);

    const cli_result unknown = run_cli("pay --set 1,2 --amount 3 --bogus");
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("check: verdicts drive the exit code") {
    const cli_result ok = run_cli("check --set 1,2,5,6,10 --mode greedy");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("Greedy") == 0);

    const cli_result partial =
        run_cli("--json check --set 1,2,5,6,10 --mode totally-greedy");
    CHECK(partial.exit_code == 1);
    const auto record = parse_record(partial);
    CHECK(record["result"]["verdict"] == "NotTotallyGreedy");
    CHECK(record["result"]["failing_prefix_length"] == 4);
    CHECK(record["result"]["witness_amount"] == "10");

    const cli_result witness = run_cli("--json check --set 1,3,5,11,21,43 --mode greedy");
    CHECK(witness.exit_code == 1);
    const auto wrec = parse_record(witness);
    CHECK(wrec["result"]["verdict"] == "NotGreedy");
    CHECK(wrec["result"]["witness_amount"] == "63");
    CHECK(wrec["result"]["greedy_cost_at_witness"] == "5");
    CHECK(wrec["result"]["optimal_cost_at_witness"] == "3");
}

TEST_CASE("check: the DP limit is adjustable through the environment") {
    // 1,6000001,12000001 is a greedy triad, but the default window (1.8e7)
    // exceeds the default limit of 1e7.
    const cli_result refused = run_cli("check --set 1,6000001,12000001");
    CHECK(refused.exit_code == 2);
    CHECK(refused.out.find("AmountExceedsLimit") != std::string::npos);

    const cli_result allowed = run_cli("check --set 1,6000001,12000001",
                                       "GREEDY_DP_LIMIT=20000000");
    CHECK(allowed.exit_code == 0);

    const cli_result junk = run_cli("check --set 1,2,5", "GREEDY_DP_LIMIT=banana");
    CHECK(junk.exit_code == 2);
}

TEST_CASE("gen: terms, verification and the ratio note") {
    const cli_result pell = run_cli("gen --family type1 -a 2 -p 2 -q 1 -n 6");
    CHECK(pell.exit_code == 0);
    CHECK(pell.out.find("1 2 5 12 29 70") != std::string::npos);

    // q > p: the ratios approach 2 from alternating sides forever, so a
    // window ending on an outside ratio reports "not settled", not an onset.
    const cli_result jac =
        run_cli("--json gen --family type1 -a 3 -p 1 -q 2 -n 8 --verify");
    CHECK(jac.exit_code == 1);
    const auto record = parse_record(jac);
    CHECK(record["result"]["greediness"]["verdict"] == "NotTotallyGreedy");
    CHECK(record["result"]["greediness"]["failing_prefix_length"] == 6);
    CHECK(record["result"].contains("ratio_note"));

    const cli_result perturbed = run_cli(
        "--json gen --family nonhomog -a 3 -p 3 -q 1 -r 2 --sign minus -n 6 --verify");
    CHECK(perturbed.exit_code == 1);
    const auto prec = parse_record(perturbed);
    const auto terms = prec["result"]["terms"];
    REQUIRE(terms.size() == 6);
    CHECK(terms[4] == "79");
    CHECK(terms[5] == "210");
    CHECK(prec["result"]["greediness"]["failing_prefix_length"] == 5);

    const cli_result defaulted =
        run_cli("--json gen --family type1 -a 2 -p 1 -q 1", "GREEDY_DEPTH=9");
    const auto drec = parse_record(defaulted);
    CHECK(drec["result"]["terms"].size() == 9);

    const cli_result invalid = run_cli("gen --family type1 -a 1 -p 1 -q 1 -n 5");
    CHECK(invalid.exit_code == 2);
}

TEST_CASE("subseq: transforms and verdicts") {
    const cli_result odd =
        run_cli("subseq --family type1 -a 2 -p 1 -q 1 --parity odd -n 5");
    CHECK(odd.exit_code == 0);
    CHECK(odd.out.find("1 3 8 21 55") != std::string::npos);
    CHECK(odd.out.find("a'=3 p'=3 q'=1") != std::string::npos);
    CHECK(odd.out.find("TotallyGreedy") != std::string::npos);

    const cli_result even =
        run_cli("--json subseq --family type2 -a 2 -p 3 -q 1 --parity even -n 5");
    CHECK(even.exit_code == 0);
    const auto record = parse_record(even);
    CHECK(record["result"]["base_equality"] == true);
    CHECK(record["result"]["transformed"]["p"] == 7);
    CHECK(record["result"]["greediness"]["verdict"] == "TotallyGreedy");

    const cli_result two = run_cli(
        "--json subseq --family type1 -a 2 -p 2 -q 1 --parity odd -n 2");
    CHECK(two.exit_code == 0);
    CHECK(parse_record(two)["result"]["terms"].size() == 2);

    const cli_result nonhomog = run_cli(
        "subseq --family nonhomog -a 2 -p 2 -q 1 --parity odd -n 5");
    CHECK(nonhomog.exit_code == 2);
}

TEST_CASE("k0 and roots") {
    const cli_result onset =
        run_cli("--json k0 --family type2 -a 2 -p 6 -q 4 -n 12");
    CHECK(onset.exit_code == 0);
    const auto record = parse_record(onset);
    CHECK(record["result"]["k0"] == 4);
    CHECK(record["result"]["interval_low"] == 5);
    CHECK(record["result"]["pre_onset_ratios"].size() == 2);

    const cli_result no_onset = run_cli("k0 --family type1 -a 3 -p 1 -q 2 -n 12");
    CHECK(no_onset.exit_code == 2);

    const cli_result roots = run_cli("roots --family type1 -p 1 -q 1");
    CHECK(roots.exit_code == 0);
    CHECK(roots.out.find("lambda: 1.6180339887") != std::string::npos);

    const cli_result coeffs = run_cli("--json roots --family type2 -p 3 -q 1 -a 2");
    const auto crec = parse_record(coeffs);
    CHECK(crec["result"]["discriminant"] == "5");
    CHECK(crec["result"].contains("c1"));

    const cli_result degenerate = run_cli("--json roots --family type2 -p 2 -q 1");
    CHECK(degenerate.exit_code == 2);
    CHECK(parse_record(degenerate)["error_kind"] == "DegenerateRoots");
}

TEST_CASE("structured output round-trips byte for byte") {
    const std::vector<std::string> invocations = {
        "--json pay --set 1,4,6 --amount 8 --mode optimal",
        "--json check --set 1,2,5,6,10 --mode totally-greedy",
        "--json gen --family type1 -a 2 -p 2 -q 1 -n 8 --verify",
        "--json subseq --family type2 -a 2 -p 3 -q 1 --parity even -n 5",
        "--json k0 --family type1 -a 2 -p 1 -q 1 -n 10",
        "--json roots --family type1 -p 2 -q 1 -a 2",
        "--json pay --set 2,5 --amount 1",  // error records round-trip too
    };
    for (const auto& args : invocations) {
        CAPTURE(args);
        const cli_result r = run_cli(args);
        const auto once = nlohmann::json::parse(r.out);
        const std::string rendered = once.dump(2);
        const auto twice = nlohmann::json::parse(rendered);
        CHECK(once == twice);
        CHECK(rendered == r.out.substr(0, r.out.size() - 1));  // trailing \n
    }
}

TEST_CASE("usage errors and help") {
    CHECK(run_cli("").exit_code == 2);                 // missing subcommand
    CHECK(run_cli("frobnicate").exit_code == 2);       // unknown subcommand
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("pay --help").exit_code == 0);
}

TEST_CASE("record helpers keep the status/error_kind invariant") {
    using greedyseq::error_record;
    using greedyseq::output_record;
    const auto ok = output_record("pay", {{"set", "1,2"}}, {{"cost", "1"}});
    CHECK(ok["status"] == "ok");
    CHECK_FALSE(ok.contains("error_kind"));
    const auto bad = error_record("pay", {{"set", "2"}}, "InvalidCoinSystem", "msg");
    CHECK(bad["status"] == "error");
    CHECK(bad["error_kind"] == "InvalidCoinSystem");
}
