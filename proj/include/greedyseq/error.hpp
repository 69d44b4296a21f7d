#pragma once

#include <stdexcept>
#include <string>

namespace greedyseq {

enum class errc {
    invalid_coin_system,
    amount_exceeds_limit,
    invalid_triad,
    not_an_extension,
    wrong_size,
    invalid_params,
    not_monotonic,
    degenerate_roots,
    horizon_too_small,
    no_onset,
    ineligible_params,
    verification_failed,
};

const char* errc_name(errc k);

// Single exception type for the whole library. kind() is stable and is what
// the CLI reports as error_kind; the message carries the offending values.
class error : public std::runtime_error {
public:
    error(errc kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    errc kind() const { return kind_; }
    const char* kind_name() const { return errc_name(kind_); }

private:
    errc kind_;
};

}  // namespace greedyseq
