// Runs the full verification suite and prints one pass/fail line per
// criterion. Exit code 0 iff every criterion passed.

#include <cstdio>

#include "greedyseq/criteria.hpp"

int main() {
    const auto results = greedyseq::run_all_criteria();
    bool all_passed = true;
    for (const auto& r : results) {
        std::printf("%s  %-26s %s\n", r.passed ? "PASS" : "FAIL", r.id.c_str(),
                    r.detail.c_str());
        all_passed = all_passed && r.passed;
    }
    std::printf("%s\n", all_passed ? "all criteria passed" : "FAILURES present");
    return all_passed ? 0 : 1;
}
