#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "greedyseq/error.hpp"
#include "greedyseq/numeric.hpp"

namespace greedyseq {

// G_1 = 1, G_2 = a, G_n = p*G_{n-1} + q*G_{n-2}.
struct type1_params {
    std::int64_t a;
    std::int64_t p;
    std::int64_t q;

    type1_params(std::int64_t a_, std::int64_t p_, std::int64_t q_);

    // The classified family requires q <= p; the struct still carries
    // parameter sets outside it (they generate fine, the theorems just do
    // not apply).
    bool is_type1() const { return q <= p; }
    bool meets_theorem2() const { return a >= 2 && a <= p + q; }
};

// J_1 = 1, J_2 = a, J_n = p*J_{n-1} - q*J_{n-2}.
struct type2_params {
    std::int64_t a;
    std::int64_t p;
    std::int64_t q;

    type2_params(std::int64_t a_, std::int64_t p_, std::int64_t q_);

    // q <= p - 2 gives distinct real roots with lambda in (p-1, p) and a
    // strictly increasing sequence. Subsequence transforms of unclassified
    // sources can land outside, so this is a flag, not a constructor error.
    bool is_type2() const { return q <= p - 2; }
};

// T_1 = 1, T_2 = a, T_n = p*T_{n-1} +/- q*T_{n-2} + r with signed r != 0.
// subtract_q selects which homogeneous family is perturbed.
struct nonhomog_params {
    std::int64_t a;
    std::int64_t p;
    std::int64_t q;
    std::int64_t r;
    bool subtract_q;

    nonhomog_params(std::int64_t a_, std::int64_t p_, std::int64_t q_,
                    std::int64_t r_, bool subtract_q_);
};

using recurrence_params = std::variant<type1_params, type2_params, nonhomog_params>;

std::vector<bigint> generate_type1(const type1_params& params, std::size_t n);

// Throws invalid_params unless params.is_type2().
std::vector<bigint> generate_type2(const type2_params& params, std::size_t n);

// Throws not_monotonic if any term fails to exceed its predecessor; such
// parameters cannot form a denomination sequence.
std::vector<bigint> generate_nonhomog(const nonhomog_params& params, std::size_t n);

// For the +q family, consecutive differences satisfy a homogeneous
// third-order recurrence: T_{k+1} = (p+1)T_k + (q-p)T_{k-1} - q*T_{k-2}.
// Returns true iff that identity holds exactly for all 3 <= k <= n-1.
bool third_order_reduction_check(const nonhomog_params& params, std::size_t n);

enum class root_family { type1, type2 };

// Roots of x^2 - px - q (type 1) or x^2 - px + q (type 2), 50 decimal
// digits, plus the exact discriminant for integer interval certificates.
struct characteristic_roots {
    root_family family;
    std::int64_t p;
    std::int64_t q;
    bigint discriminant;  // p^2 + 4q or p^2 - 4q
    real50 lambda;        // dominant root
    real50 mu;
    std::optional<std::int64_t> a;  // perturbation, when supplied
    std::optional<real50> c1;       // (a - mu) / (lambda - mu)
    std::optional<real50> c2;       // (lambda - a) / (lambda - mu)
};

// Throws degenerate_roots when the type-2 discriminant is not positive.
characteristic_roots char_roots(std::int64_t p, std::int64_t q, root_family family,
                                std::optional<std::int64_t> a = std::nullopt);

// c1*lambda^(n-1) + c2*mu^(n-1), the closed form of the n-th term (1-based)
// for both families. Diagnostic cross-check only; requires a to have been
// supplied to char_roots.
real50 closed_form_eval(const characteristic_roots& roots, std::size_t n);

struct subsequence_result {
    std::vector<bigint> terms;
    type2_params transformed;  // odd/even subsequences always obey p', q' = q^2
};

struct even_subsequence_result {
    std::vector<bigint> terms;  // 1, a, then the even terms of the source
    type2_params transformed;
    // Whether p''*a - q'' equals the source's 4th term, i.e. whether the
    // modified sequence satisfies the transformed recurrence across the
    // prepended 1. Reported honestly instead of assumed from the parameters.
    bool base_equality_holds;
};

// Terms at positions 1, 3, 5, ... of the source (n of them, n >= 2) plus the
// transformed parameters: p' = p^2 + 2q (type-1 source) or p^2 - 2q (type-2),
// q' = q^2, a' = pa + q or pa - q.
subsequence_result odd_subsequence(const type1_params& source, std::size_t n);
subsequence_result odd_subsequence(const type2_params& source, std::size_t n);

// 1 prepended to the even terms of the source (n terms total, n >= 3), with
// the transformed parameters p'' = p^2 +/- 2q, q'' = q^2.
even_subsequence_result even_subsequence_modified(const type1_params& source,
                                                  std::size_t n);
even_subsequence_result even_subsequence_modified(const type2_params& source,
                                                  std::size_t n);

// Newline-delimited decimal rendering, one term per line.
std::string render_terms_lines(const std::vector<bigint>& terms);

}  // namespace greedyseq
