#include "greedyseq/recurrences.hpp"

#include <sstream>

namespace greedyseq {

namespace {

void require(bool ok, errc kind, const std::string& msg) {
    if (!ok) throw error(kind, msg);
}

std::string triple(std::int64_t a, std::int64_t p, std::int64_t q) {
    return "a=" + std::to_string(a) + " p=" + std::to_string(p) +
           " q=" + std::to_string(q);
}

}  // namespace

type1_params::type1_params(std::int64_t a_, std::int64_t p_, std::int64_t q_)
    : a(a_), p(p_), q(q_) {
    require(a >= 2 && p >= 1 && q >= 1, errc::invalid_params,
            "type-1 parameters need a >= 2, p >= 1, q >= 1, got " + triple(a, p, q));
}

type2_params::type2_params(std::int64_t a_, std::int64_t p_, std::int64_t q_)
    : a(a_), p(p_), q(q_) {
    require(a >= 2 && p >= 1 && q >= 1, errc::invalid_params,
            "type-2 parameters need a >= 2, p >= 1, q >= 1, got " + triple(a, p, q));
}

nonhomog_params::nonhomog_params(std::int64_t a_, std::int64_t p_, std::int64_t q_,
                                 std::int64_t r_, bool subtract_q_)
    : a(a_), p(p_), q(q_), r(r_), subtract_q(subtract_q_) {
    require(a >= 2 && p >= 1 && q >= 1, errc::invalid_params,
            "non-homogeneous parameters need a >= 2, p >= 1, q >= 1, got " +
                triple(a, p, q));
    require(r != 0, errc::invalid_params,
            "non-homogeneous parameters need r != 0 (use the homogeneous family)");
}

std::vector<bigint> generate_type1(const type1_params& params, std::size_t n) {
    require(n >= 1, errc::invalid_params, "need n >= 1 terms");
    std::vector<bigint> seq;
    seq.reserve(n);
    seq.emplace_back(1);
    if (n >= 2) seq.emplace_back(params.a);
    for (std::size_t k = 2; k < n; ++k) {
        seq.push_back(params.p * seq[k - 1] + params.q * seq[k - 2]);
    }
    return seq;
}

std::vector<bigint> generate_type2(const type2_params& params, std::size_t n) {
    require(n >= 1, errc::invalid_params, "need n >= 1 terms");
    require(params.is_type2(), errc::invalid_params,
            "type-2 generation needs q <= p - 2, got " +
                triple(params.a, params.p, params.q));
    std::vector<bigint> seq;
    seq.reserve(n);
    seq.emplace_back(1);
    if (n >= 2) seq.emplace_back(params.a);
    for (std::size_t k = 2; k < n; ++k) {
        seq.push_back(params.p * seq[k - 1] - params.q * seq[k - 2]);
    }
    return seq;
}

std::vector<bigint> generate_nonhomog(const nonhomog_params& params, std::size_t n) {
    require(n >= 1, errc::invalid_params, "need n >= 1 terms");
    std::vector<bigint> seq;
    seq.reserve(n);
    seq.emplace_back(1);
    if (n >= 2) seq.emplace_back(params.a);
    for (std::size_t k = 2; k < n; ++k) {
        bigint next = params.p * seq[k - 1] + params.r;
        if (params.subtract_q) {
            next -= params.q * seq[k - 2];
        } else {
            next += params.q * seq[k - 2];
        }
        if (next <= seq[k - 1]) {
            throw error(errc::not_monotonic,
                        "term " + std::to_string(k + 1) + " = " + next.str() +
                            " does not exceed its predecessor " + seq[k - 1].str());
        }
        seq.push_back(std::move(next));
    }
    return seq;
}

bool third_order_reduction_check(const nonhomog_params& params, std::size_t n) {
    require(!params.subtract_q, errc::invalid_params,
            "the third-order reduction is stated for the +q family");
    require(n >= 4, errc::invalid_params, "need n >= 4 terms for the reduction");
    const std::vector<bigint> t = generate_nonhomog(params, n);
    for (std::size_t k = 3; k + 1 <= n; ++k) {
        // 1-based T_{k+1} = (p+1)T_k + (q-p)T_{k-1} - q T_{k-2}
        const bigint expect = (params.p + 1) * t[k - 1] +
                              (params.q - params.p) * t[k - 2] -
                              bigint(params.q) * t[k - 3];
        if (t[k] != expect) return false;
    }
    return true;
}

characteristic_roots char_roots(std::int64_t p, std::int64_t q, root_family family,
                                std::optional<std::int64_t> a) {
    require(p >= 1 && q >= 1, errc::invalid_params, "roots need p >= 1, q >= 1");
    characteristic_roots roots;
    roots.family = family;
    roots.p = p;
    roots.q = q;
    roots.discriminant = family == root_family::type1
                             ? bigint(p) * p + 4 * bigint(q)
                             : bigint(p) * p - 4 * bigint(q);
    if (family == root_family::type2 && roots.discriminant <= 0) {
        throw error(errc::degenerate_roots,
                    "p^2 - 4q = " + roots.discriminant.str() +
                        "; the roots are not real and distinct");
    }
    const real50 root = sqrt(real50(roots.discriminant));
    roots.lambda = (real50(p) + root) / 2;
    roots.mu = (real50(p) - root) / 2;
    if (a) {
        roots.a = a;
        const real50 span = roots.lambda - roots.mu;
        roots.c1 = (real50(*a) - roots.mu) / span;
        roots.c2 = (roots.lambda - real50(*a)) / span;
    }
    return roots;
}

real50 closed_form_eval(const characteristic_roots& roots, std::size_t n) {
    require(n >= 1, errc::invalid_params, "term index n must be >= 1");
    require(roots.c1.has_value() && roots.c2.has_value(), errc::invalid_params,
            "closed form needs the coefficients; pass a to char_roots");
    const auto e = static_cast<int>(n - 1);
    return *roots.c1 * pow(roots.lambda, e) + *roots.c2 * pow(roots.mu, e);
}

namespace {

std::vector<bigint> odd_terms(const std::vector<bigint>& source, std::size_t n) {
    std::vector<bigint> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back(source[2 * k]);
    return out;
}

std::int64_t narrow_param(const bigint& v, const char* what) {
    if (v < std::numeric_limits<std::int64_t>::min() ||
        v > std::numeric_limits<std::int64_t>::max()) {
        throw error(errc::invalid_params,
                    std::string(what) + " = " + v.str() +
                        " overflows the parameter range");
    }
    return v.convert_to<std::int64_t>();
}

std::vector<bigint> even_terms_prepended(const std::vector<bigint>& source,
                                         std::size_t n) {
    std::vector<bigint> out;
    out.reserve(n);
    out.emplace_back(1);
    for (std::size_t k = 1; k < n; ++k) out.push_back(source[2 * k - 1]);
    return out;
}

}  // namespace

subsequence_result odd_subsequence(const type1_params& source, std::size_t n) {
    require(n >= 2, errc::invalid_params, "odd subsequence needs n >= 2 terms");
    const auto terms = generate_type1(source, 2 * n - 1);
    const bigint a2 = bigint(source.p) * source.a + source.q;
    const bigint p2 = bigint(source.p) * source.p + 2 * bigint(source.q);
    const bigint q2 = bigint(source.q) * source.q;
    return {odd_terms(terms, n),
            type2_params(narrow_param(a2, "a'"), narrow_param(p2, "p'"),
                         narrow_param(q2, "q'"))};
}

subsequence_result odd_subsequence(const type2_params& source, std::size_t n) {
    require(n >= 2, errc::invalid_params, "odd subsequence needs n >= 2 terms");
    const auto terms = generate_type2(source, 2 * n - 1);
    const bigint a2 = bigint(source.p) * source.a - source.q;
    const bigint p2 = bigint(source.p) * source.p - 2 * bigint(source.q);
    const bigint q2 = bigint(source.q) * source.q;
    return {odd_terms(terms, n),
            type2_params(narrow_param(a2, "a'"), narrow_param(p2, "p'"),
                         narrow_param(q2, "q'"))};
}

even_subsequence_result even_subsequence_modified(const type1_params& source,
                                                  std::size_t n) {
    require(n >= 3, errc::invalid_params, "even subsequence needs n >= 3 terms");
    const auto terms = generate_type1(source, 2 * n - 2);
    const bigint p2 = bigint(source.p) * source.p + 2 * bigint(source.q);
    const bigint q2 = bigint(source.q) * source.q;
    type2_params transformed(source.a, narrow_param(p2, "p''"),
                             narrow_param(q2, "q''"));
    const bool base = p2 * source.a - q2 == terms[3];
    return {even_terms_prepended(terms, n), transformed, base};
}

even_subsequence_result even_subsequence_modified(const type2_params& source,
                                                  std::size_t n) {
    require(n >= 3, errc::invalid_params, "even subsequence needs n >= 3 terms");
    const auto terms = generate_type2(source, 2 * n - 2);
    const bigint p2 = bigint(source.p) * source.p - 2 * bigint(source.q);
    const bigint q2 = bigint(source.q) * source.q;
    type2_params transformed(source.a, narrow_param(p2, "p''"),
                             narrow_param(q2, "q''"));
    const bool base = p2 * source.a - q2 == terms[3];
    return {even_terms_prepended(terms, n), transformed, base};
}

std::string render_terms_lines(const std::vector<bigint>& terms) {
    std::ostringstream out;
    for (const bigint& t : terms) out << t.str() << '\n';
    return out.str();
}

}  // namespace greedyseq
