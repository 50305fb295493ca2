#pragma once

#include <vector>

#include "transforms.hpp"

namespace ncfree {

/// A one-variable power series with non-zero constant term, sum beta_j z^j
/// for j = 0 .. size()-1.
struct SSeries {
    std::vector<Scalar> beta;

    std::size_t size() const { return beta.size(); }
    friend bool operator==(const SSeries&, const SSeries&) = default;
};

/// Truncated product; the result has the shorter length.
inline SSeries operator*(const SSeries& f, const SSeries& g) {
    const std::size_t len = std::min(f.size(), g.size());
    SSeries out{std::vector<Scalar>(len)};
    for (std::size_t j = 0; j < len; ++j)
        for (std::size_t i = 0; i <= j; ++i) out.beta[j] += f.beta[i] * g.beta[j - i];
    return out;
}

/// Coefficients c_1..c_d (index 0 unused) of the compositional inverse of
/// psi(z) = sum_k m_k z^k, found one degree at a time: with c_k still zero,
/// [z^k] psi(chi) equals whatever c_k must cancel, divided by m_1.
inline std::vector<Scalar> compositional_inverse(const std::vector<Scalar>& m) {
    const std::size_t d = m.size() - 1;
    if (m[1] == 0) throw not_invertible("compositional inverse needs a non-zero linear coefficient");
    std::vector<Scalar> c(d + 1);
    for (std::size_t k = 1; k <= d; ++k) {
        // [z^k] of sum_j m_j chi^j with chi truncated at degree k, c_k = 0.
        Scalar at_k(0);
        std::vector<Scalar> power(k + 1);  // chi^j
        power[0] = 1;
        for (std::size_t j = 1; j <= k; ++j) {
            std::vector<Scalar> next(k + 1);
            for (std::size_t a = 0; a <= k; ++a) {
                if (power[a] == 0) continue;
                for (std::size_t b = 1; a + b <= k; ++b) next[a + b] += power[a] * c[b];
            }
            power = std::move(next);
            at_k += m[j] * power[k];
        }
        c[k] = (Scalar(k == 1 ? 1 : 0) - at_k) / m[1];
    }
    return c;
}

/// S(z) = ((1+z)/z) * chi(z), with chi the compositional inverse of the
/// moment series. Returns beta_0 .. beta_{d-1} for a distribution of degree d.
inline SSeries s_transform_1d(const JointDistribution& mu) {
    if (mu.n() != 1) throw invalid_argument("s_transform_1d expects a one-variable distribution");
    const int d = mu.max_degree();
    if (d < 2) throw invalid_argument("s_transform_1d needs max_degree >= 2");
    std::vector<Scalar> m(static_cast<std::size_t>(d) + 1);
    for (int k = 1; k <= d; ++k) m[static_cast<std::size_t>(k)] = mu.moment(Word(std::vector<int>(static_cast<std::size_t>(k), 1)));
    if (m[1] == 0) throw not_invertible("S-transform needs a non-zero first moment");
    const auto c = compositional_inverse(m);
    SSeries s{std::vector<Scalar>(static_cast<std::size_t>(d))};
    for (std::size_t j = 0; j < s.size(); ++j) s.beta[j] = c[j + 1] + (j > 0 ? c[j] : Scalar(0));
    return s;
}

/// The map sending the R-transform of mu to the S-transform of mu.
inline SSeries fourier_f(const NCSeries& r) {
    if (r.n() != 1) throw invalid_argument("fourier_f expects a one-variable series");
    return s_transform_1d(from_r_series(r));
}

} // namespace ncfree
