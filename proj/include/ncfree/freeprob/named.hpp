#pragma once

#include "transforms.hpp"

namespace ncfree {

namespace detail {

inline Scalar catalan(unsigned k) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * k, k);
    return Scalar(c) / Scalar(k + 1);
}

inline JointDistribution one_dim_from_moments(int d, auto moment_of_power) {
    JointDistribution out(1, d);
    for (int k = 1; k <= d; ++k) out.set(Word(std::vector<int>(static_cast<std::size_t>(k), 1)), moment_of_power(k));
    return out;
}

} // namespace detail

/// Centered semicircular element of variance s (radius r with s = r^2/4):
/// even moments s^k C_k, odd moments zero.
inline JointDistribution semicircular(const Scalar& s, int d) {
    return detail::one_dim_from_moments(d, [&](int k) {
        if (k % 2 == 1) return Scalar(0);
        return Scalar(pow(s, static_cast<unsigned>(k / 2)) * detail::catalan(static_cast<unsigned>(k / 2)));
    });
}

/// Free Poisson element: degree-k free cumulant alpha * beta^k.
inline JointDistribution free_poisson(const Scalar& alpha, const Scalar& beta, int d) {
    NCSeries r(1, d);
    for (int k = 1; k <= d; ++k) r.set(Word(std::vector<int>(static_cast<std::size_t>(k), 1)), alpha * pow(beta, static_cast<unsigned>(k)));
    return from_r_series(r);
}

/// Idempotent of trace alpha: every moment of positive degree equals alpha.
inline JointDistribution idempotent_dist(const Scalar& alpha, int d) {
    return detail::one_dim_from_moments(d, [&](int) { return alpha; });
}

/// n copies of the same element: mu(w) = mu(X^|w|).
inline JointDistribution diagonal_distribution(const JointDistribution& mu1, int n) {
    if (mu1.n() != 1) throw invalid_argument("diagonal_distribution expects a one-variable distribution");
    JointDistribution out(n, mu1.max_degree());
    for (int k = 1; k <= mu1.max_degree(); ++k) {
        const Scalar m = mu1.moment(Word(std::vector<int>(static_cast<std::size_t>(k), 1)));
        if (m == 0) continue;
        for (const auto& w : words_of_length(n, k)) out.set(w, m);
    }
    return out;
}

/// R-transform of n copies of the same element, as the lift of its one-variable R-transform.
inline NCSeries diagonal_r(const JointDistribution& mu1, int n) {
    if (mu1.n() != 1) throw invalid_argument("diagonal_r expects a one-variable distribution");
    return lift_diagonal(r_transform(mu1), n);
}

/// Every moment equal to one: the tuple (1, ..., 1).
inline JointDistribution unit_distribution(int n, int d) { return from_m_series(zeta(n, d)); }

} // namespace ncfree
