#pragma once

// Moment series, R-transform (free cumulants) and the convolutions built on
// boxstar: M(mu) = R(mu) * Zeta, R(mu) = M(mu) * Moeb.

#include <optional>
#include <set>

#include "../series.hpp"
#include "distribution.hpp"

namespace ncfree {

/// The series whose coefficients are the moments of mu.
inline NCSeries m_series(const JointDistribution& mu) {
    NCSeries out(mu.n(), mu.max_degree());
    for (const auto& [w, c] : mu.moments()) out.set(w, c);
    return out;
}

/// The distribution whose moment series is f.
inline JointDistribution from_m_series(const NCSeries& f) {
    JointDistribution out(f.n(), f.max_degree());
    for (const auto& [w, c] : f.coeffs()) out.set(w, c);
    return out;
}

inline NCSeries r_transform(const JointDistribution& mu) {
    return boxstar(m_series(mu), moeb(mu.n(), mu.max_degree()));
}

/// The unique distribution with R-transform f.
inline JointDistribution from_r_series(const NCSeries& f) {
    return from_m_series(boxstar(f, zeta(f.n(), f.max_degree())));
}

inline void require_same_n(const JointDistribution& a, const JointDistribution& b, const char* op) {
    if (a.n() != b.n()) throw invalid_argument(std::string(op) + ": distributions have different variable counts");
}

/// Distribution of (a_1 + b_1, ..., a_n + b_n) for free families; degree is the smaller of the two.
inline JointDistribution free_additive(const JointDistribution& a, const JointDistribution& b) {
    require_same_n(a, b, "free_additive");
    const int d = std::min(a.max_degree(), b.max_degree());
    return from_r_series(add(r_transform(truncate(a, d)), r_transform(truncate(b, d))));
}

/// Which equivalent form of the product formula to evaluate.
enum class ProductPipeline {
    r_r,  // R(ab) = R(a) * R(b)
    r_m,  // M(ab) = R(a) * M(b)
    m_r,  // M(ab) = M(a) * R(b)
};

/// Distribution of (a_1 b_1, ..., a_n b_n) when {a_i} is free from {b_i}.
inline JointDistribution multiply_free_tuples(const JointDistribution& a, const JointDistribution& b,
                                              ProductPipeline pipeline = ProductPipeline::r_r) {
    require_same_n(a, b, "multiply_free_tuples");
    const int d = std::min(a.max_degree(), b.max_degree());
    const auto ad = truncate(a, d);
    const auto bd = truncate(b, d);
    switch (pipeline) {
    case ProductPipeline::r_m:
        return from_m_series(boxstar(r_transform(ad), m_series(bd)));
    case ProductPipeline::m_r:
        return from_m_series(boxstar(m_series(ad), r_transform(bd)));
    case ProductPipeline::r_r:
    default:
        return from_r_series(boxstar(r_transform(ad), r_transform(bd)));
    }
}

/// First word of length <= d whose R-coefficient is non-zero and which uses
/// letters from both `group` and its complement.
inline std::optional<Word> find_cross_term(const JointDistribution& mu, const std::set<int>& group, int d) {
    if (d > mu.max_degree()) throw truncation_exceeded("cross_term_check: degree beyond max_degree");
    for (int v : group)
        if (v < 1 || v > mu.n()) throw invalid_argument("cross_term_check: variable index out of range");
    const auto r = r_transform(truncate(mu, d));
    for (const auto& [w, c] : r.coeffs()) {
        bool inside = false, outside = false;
        for (int x : w) (group.count(x) ? inside : outside) = true;
        if (inside && outside) return w;
    }
    return std::nullopt;
}

/// True iff R(mu) has no coefficient mixing `group` with the remaining variables, through degree d.
inline bool cross_term_check(const JointDistribution& mu, const std::set<int>& group, int d) {
    return !find_cross_term(mu, group, d).has_value();
}

} // namespace ncfree
