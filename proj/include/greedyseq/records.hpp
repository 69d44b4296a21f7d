#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "greedyseq/analysis.hpp"
#include "greedyseq/canonicality.hpp"
#include "greedyseq/coin.hpp"
#include "greedyseq/recurrences.hpp"

// JSON views of the domain types. Arbitrary-precision integers are rendered
// as decimal strings so no consumer ever sees a truncated double; indices,
// flags and machine-word parameters stay native JSON. Optional fields are
// omitted when absent, never emitted as null. nlohmann::json keeps object
// keys sorted, which is what makes parse-then-dump a byte-stable round trip.

namespace greedyseq {

using json = nlohmann::json;

json terms_to_json(const std::vector<bigint>& terms);

json to_json(const coin_system& system);
json to_json(const payment_vector& payment);
json to_json(const greediness_report& report);
json to_json(const type1_params& params);
json to_json(const type2_params& params);
json to_json(const nonhomog_params& params);
json to_json(const recurrence_params& params);
json to_json(const characteristic_roots& roots);
json to_json(const ratio_analysis& ratios);
json to_json(const subsequence_result& sub);
json to_json(const even_subsequence_result& sub);
json to_json(const theorem_verdict& verdict);
json to_json(const corollary5_report& report);

// The envelope every command prints in --json mode: status is "ok" or
// "error", and error_kind appears exactly when status is "error".
json output_record(const std::string& command, json inputs, json result);
json error_record(const std::string& command, json inputs,
                  const std::string& error_kind, const std::string& message);

}  // namespace greedyseq
