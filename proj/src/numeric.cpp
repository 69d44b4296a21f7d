#include "greedyseq/numeric.hpp"

#include <cctype>

#include "greedyseq/error.hpp"

namespace greedyseq {

bigint parse_bigint(std::string_view text) {
    if (text.empty()) {
        throw error(errc::invalid_params, "empty integer literal");
    }
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) {
        throw error(errc::invalid_params, "sign without digits");
    }
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw error(errc::invalid_params, "bad digit in integer literal: '" +
                                                  std::string(text) + "'");
        }
    }
    return bigint(std::string(text));
}

std::string to_decimal(const bigint& v) { return v.str(); }

}  // namespace greedyseq
