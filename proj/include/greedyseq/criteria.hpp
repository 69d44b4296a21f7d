#pragma once

#include <string>
#include <vector>

// The full verification suite behind `verify-paper`: every headline claim the
// library makes, checked end to end against independent enumeration where one
// exists. Each criterion is self-contained and reports pass/fail plus a short
// human-readable detail line; a thrown exception inside a criterion is caught
// and reported as a failure, never as a crash.

namespace greedyseq {

struct criterion_result {
    std::string id;      // stable slug, e.g. "triad-oracle"
    std::string title;   // one-line description
    bool passed;
    std::string detail;  // counts, witnesses, or the failure reason
};

std::vector<criterion_result> run_all_criteria();

}  // namespace greedyseq
