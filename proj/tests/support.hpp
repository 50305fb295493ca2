#pragma once

// Test-only helpers: seeded random rationals, series and distributions, and
// brute-force oracles that share no code with the library's fast paths.

#include <random>
#include <set>
#include <vector>

#include <ncfree/ncfree.hpp>

namespace ncfree::testing {

using Rng = std::mt19937_64;

inline Scalar random_rational(Rng& rng, int num_bound = 5, int den_bound = 4) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound), den(1, den_bound);
    Scalar x(num(rng), den(rng));
    x.canonicalize();
    return x;
}

inline Scalar random_nonzero(Rng& rng, int num_bound = 5, int den_bound = 4) {
    Scalar x;
    do x = random_rational(rng, num_bound, den_bound);
    while (x == 0);
    return x;
}

/// Dense random series; roughly one coefficient in `zero_one_in` is zero.
inline NCSeries random_series(Rng& rng, int n, int d, int zero_one_in = 4) {
    NCSeries f(n, d);
    std::uniform_int_distribution<int> coin(0, zero_one_in - 1);
    for (const auto& w : words_up_to(n, d))
        if (coin(rng) != 0) f.set(w, random_rational(rng));
    return f;
}

inline NCSeries random_invertible_series(Rng& rng, int n, int d) {
    NCSeries f = random_series(rng, n, d);
    for (int i = 1; i <= n; ++i) f.set(Word{i}, random_nonzero(rng));
    return f;
}

/// Arbitrary moments on every word: generally not tracial.
inline JointDistribution random_distribution(Rng& rng, int n, int d) {
    return from_m_series(random_series(rng, n, d, 1000));
}

inline JointDistribution random_1d(Rng& rng, int d, bool nonzero_mean = false) {
    JointDistribution mu(1, d);
    for (int k = 1; k <= d; ++k) {
        Word w(std::vector<int>(static_cast<std::size_t>(k), 1));
        mu.set(w, (k == 1 && nonzero_mean) ? random_nonzero(rng) : random_rational(rng));
    }
    return mu;
}

/// Tracial: a free pair of one-dimensional distributions.
inline JointDistribution random_free_pair(Rng& rng, int d) {
    return free_product_centering(random_1d(rng, d), random_1d(rng, d), d);
}

/// Tracial: commuting classically independent pair, mu(w) = E[x^#1] E[y^#2].
inline JointDistribution classical_pair(const JointDistribution& x, const JointDistribution& y, int d) {
    JointDistribution mu(2, d);
    for (const auto& w : words_up_to(2, d)) {
        int c1 = 0, c2 = 0;
        for (int l : w) (l == 1 ? c1 : c2)++;
        mu.set(w, x.moment(Word(std::vector<int>(static_cast<std::size_t>(c1), 1))) *
                      y.moment(Word(std::vector<int>(static_cast<std::size_t>(c2), 1))));
    }
    return mu;
}

/// Tracial: mutually orthogonal idempotents e_1..e_n with traces alpha_i
/// (e_i e_j = 0 for i != j).
inline JointDistribution orthogonal_idempotents(const std::vector<Scalar>& alphas, int d) {
    const int n = static_cast<int>(alphas.size());
    JointDistribution mu(n, d);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= d; ++k) mu.set(Word(std::vector<int>(static_cast<std::size_t>(k), i)), alphas[static_cast<std::size_t>(i - 1)]);
    return mu;
}

// ---------------------------------------------------------------------------
// Brute-force oracles

/// Crossing test straight from the definition: no a<b<c<e with a~c, b~e in different blocks.
inline bool brute_noncrossing(const SetPartition& p) {
    const int k = p.size();
    for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b)
            for (int c = b + 1; c <= k; ++c)
                for (int e = c + 1; e <= k; ++e)
                    if (p.same_block(a, c) && p.same_block(b, e) && !p.same_block(a, b)) return false;
    return true;
}

/// Every set partition of {1..k} (restricted growth strings).
inline std::vector<SetPartition> all_set_partitions(int k) {
    std::vector<SetPartition> out;
    std::vector<int> rgs(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, int i, int max_label) -> void {
        if (i == k) {
            out.push_back(SetPartition::from_labels(rgs));
            return;
        }
        for (int l = 0; l <= max_label + 1; ++l) {
            rgs[static_cast<std::size_t>(i)] = l;
            self(self, i + 1, std::max(max_label, l));
        }
    };
    rgs[0] = 0;
    rec(rec, 1, 0);
    return out;
}

/// Kreweras complement by its circular definition: the coarsest pi whose
/// interleaving with rho (rho on odd points, pi on even points) is non-crossing.
inline NCPartition geometric_kreweras(const NCPartition& rho) {
    const int k = rho.size();
    std::vector<NCPartition> fits;
    for (const auto& cand : all_set_partitions(k)) {
        if (!brute_noncrossing(cand)) continue;
        const NCPartition pi(cand);
        std::vector<int> raw(static_cast<std::size_t>(2 * k));
        for (int i = 1; i <= k; ++i) {
            raw[static_cast<std::size_t>(2 * i - 2)] = rho.block_of(i);
            raw[static_cast<std::size_t>(2 * i - 1)] = k + pi.block_of(i);
        }
        if (brute_noncrossing(SetPartition::from_labels(raw))) fits.push_back(pi);
    }
    const NCPartition* best = &fits.front();
    for (const auto& f : fits)
        if (f.block_count() < best->block_count()) best = &f;
    return *best;
}

/// (2k)! / (k! (k+1)!) from factorials.
inline unsigned long long catalan_by_factorials(unsigned k) {
    mpz_class a, b, c;
    mpz_fac_ui(a.get_mpz_t(), 2 * k);
    mpz_fac_ui(b.get_mpz_t(), k);
    mpz_fac_ui(c.get_mpz_t(), k + 1);
    mpz_class r = a / (b * c);
    return r.get_ui();
}

/// Boxed-star coefficients straight from the defining sum, word by word.
inline NCSeries boxstar_by_definition(const NCSeries& f, const NCSeries& g) {
    const int d = std::min(f.max_degree(), g.max_degree());
    NCSeries out(f.n(), d);
    for (const auto& w : words_up_to(f.n(), d)) {
        Scalar acc(0);
        for (const auto& pi : enumerate_nc(static_cast<int>(w.size())))
            acc += coef_pi(f, w, pi) * coef_pi(g, w, kreweras(pi));
        out.set(w, acc);
    }
    return out;
}

/// One-variable moments from free cumulants: m_k = sum over NC(k) of prod kappa_|B|.
inline std::vector<Scalar> moments_from_cumulants(const std::vector<Scalar>& kappa, int d) {
    std::vector<Scalar> m(static_cast<std::size_t>(d) + 1);
    for (int k = 1; k <= d; ++k)
        for (const auto& pi : enumerate_nc(k)) {
            Scalar prod(1);
            for (const auto& b : pi.blocks()) prod *= kappa[b.size()];
            m[static_cast<std::size_t>(k)] += prod;
        }
    return m;
}

inline Word power(int letter, int k) { return Word(std::vector<int>(static_cast<std::size_t>(k), letter)); }

} // namespace ncfree::testing
