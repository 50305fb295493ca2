#pragma once

// Consequences of the product formula: conjugation by a semicircular,
// compression by a free idempotent, the t-semigroup, and checkable
// freeness criteria. Each verify_* function evaluates both sides of an
// identity on every instance in range and reports the first mismatch.

#include <string>
#include <utility>
#include <vector>

#include "named.hpp"
#include "oracle.hpp"
#include "transforms.hpp"

namespace ncfree {

/// Outcome of checking one identity over a family of instances.
struct IdentityCheck {
    explicit IdentityCheck(std::string n) : name(std::move(n)) {}

    std::string name;
    bool passed = true;
    std::size_t instances = 0;
    std::string witness;  // first failing instance
    Scalar lhs, rhs;      // its two sides

    void record(const std::string& instance, const Scalar& l, const Scalar& r) {
        ++instances;
        if (passed && l != r) {
            passed = false;
            witness = instance;
            lhs = l;
            rhs = r;
        }
    }
};

struct VerificationReport {
    std::vector<IdentityCheck> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Compares two distributions on every word of length 1..d.
inline IdentityCheck compare_distributions(std::string name, const JointDistribution& x, const JointDistribution& y,
                                           int d) {
    IdentityCheck check{std::move(name)};
    for (const auto& w : words_up_to(x.n(), d)) check.record(format_word(w), x.moment(w), y.moment(w));
    return check;
}

inline IdentityCheck compare_series(std::string name, const NCSeries& x, const NCSeries& y, int d) {
    IdentityCheck check{std::move(name)};
    for (const auto& w : words_up_to(x.n(), d)) check.record(format_word(w), x.coef(w), y.coef(w));
    return check;
}

/// Multiplies every moment of positive degree by `factor`; used for the
/// renormalized trace (1/alpha) phi on a corner p A p.
inline JointDistribution renormalize(const JointDistribution& mu, const Scalar& factor) {
    JointDistribution out(mu.n(), mu.max_degree());
    for (const auto& [w, c] : mu.moments()) out.set(w, c * factor);
    return out;
}

// ---------------------------------------------------------------------------
// Product of free tuples

/// Checks the product formula three ways against the centering oracle.
inline VerificationReport verify_product_formula(const JointDistribution& a, const JointDistribution& b, int d) {
    require_same_n(a, b, "verify_product_formula");
    if (d > a.max_degree() || d > b.max_degree()) throw truncation_exceeded("verify_product_formula: degree beyond inputs");
    const int n = a.n();
    const auto ad = truncate(a, d), bd = truncate(b, d);
    const auto rr = multiply_free_tuples(ad, bd, ProductPipeline::r_r);

    FreeProductOracle oracle(ad, bd);
    std::vector<Word> products;
    for (int i = 1; i <= n; ++i) products.push_back(Word{i, n + i});
    const auto direct = pushforward(oracle, products, d);

    VerificationReport report;
    report.checks.push_back(compare_distributions("R(ab) = R(a) * R(b) against free-product moments", direct, rr, d));
    report.checks.push_back(compare_distributions("M(ab) = R(a) * M(b)", multiply_free_tuples(ad, bd, ProductPipeline::r_m), rr, d));
    report.checks.push_back(compare_distributions("M(ab) = M(a) * R(b)", multiply_free_tuples(ad, bd, ProductPipeline::m_r), rr, d));
    return report;
}

// ---------------------------------------------------------------------------
// Conjugation by a semicircular element of variance s

/// R-transform of (b a_1 b, ..., b a_n b) for b semicircular of variance s
/// free from the (tracial) a-family: M(mu_a) dilated by s.
inline NCSeries conjugate_by_semicircular(const JointDistribution& a, const Scalar& s) {
    return dilate(m_series(a), s);
}

/// Distribution of (b a_1 b, ..., b a_n b) through degree d, read off the
/// centering oracle. Needs a to degree d.
inline JointDistribution bab_family(const JointDistribution& a, const Scalar& s, int d) {
    const int b = a.n() + 1;
    FreeProductOracle oracle(a, semicircular(s, 2 * d));
    std::vector<Word> images;
    for (int i = 1; i <= a.n(); ++i) images.push_back(Word{b, i, b});
    return pushforward(oracle, images, d);
}

inline IdentityCheck verify_conjugation(const JointDistribution& a, const Scalar& s, int d) {
    if (d > a.max_degree()) throw truncation_exceeded("verify_conjugation: degree beyond input");
    const auto direct = r_transform(bab_family(a, s, d));
    return compare_series("R(bab) = M(a) o D_s", direct, truncate(conjugate_by_semicircular(a, s), d), d);
}

/// For the 2m-tuple (c_1, c'_1, ..., c_m, c'_m) with joint distribution mu,
/// returns the pair
///   coef(1..m)(M(c) * M(c'))  and  coef(1..2m)(M(c, c') * Sqsum).
inline std::pair<Scalar, Scalar> interleaving_sides(const JointDistribution& mu) {
    if (mu.n() % 2 != 0) throw invalid_argument("interleaving_sides expects an even number of variables");
    const int m = mu.n() / 2;
    if (mu.max_degree() < 2 * m) throw truncation_exceeded("interleaving_sides needs moments to degree 2m");
    std::vector<int> odd, even;
    for (int j = 1; j <= m; ++j) {
        odd.push_back(2 * j - 1);
        even.push_back(2 * j);
    }
    const auto mc = m_series(truncate(marginal(mu, odd), m));
    const auto mc2 = m_series(truncate(marginal(mu, even), m));
    const Scalar lhs = boxstar_coef(mc, mc2, identity_word(m));
    const Scalar rhs = boxstar_coef(m_series(truncate(mu, 2 * m)), sqsum(m, 2 * m), identity_word(2 * m));
    return {lhs, rhs};
}

/// The identity for every m <= d/2 and every choice of the c's and c''s among
/// the variables of mu.
inline IdentityCheck verify_interleaving_identity(const JointDistribution& mu, int d) {
    if (d > mu.max_degree()) throw truncation_exceeded("verify_interleaving_identity: degree beyond input");
    IdentityCheck check{"coef(1..m)(M(c) * M(c')) = coef(1..2m)(M(c, c') * Sqsum)"};
    for (int m = 1; 2 * m <= d; ++m) {
        for (const auto& choice : words_of_length(mu.n(), 2 * m)) {
            const auto [l, r] = interleaving_sides(truncate(marginal(mu, choice.letters()), 2 * m));
            check.record("m=" + std::to_string(m) + " vars=" + format_word(choice), l, r);
        }
    }
    return check;
}

namespace detail {

// All words over 1..n of length 0..d, the empty word first.
inline std::vector<Word> words_with_empty(int n, int d) {
    std::vector<Word> out{Word{}};
    auto rest = words_up_to(n, d);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

// Every tuple (x_1..x_m) with entries from `pool`.
template <typename Visit>
void for_each_tuple(const std::vector<Word>& pool, int m, Visit visit) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
    while (true) {
        std::vector<Word> tuple;
        for (auto i : idx) tuple.push_back(pool[i]);
        visit(tuple);
        int j = m - 1;
        while (j >= 0 && idx[static_cast<std::size_t>(j)] + 1 == pool.size()) idx[static_cast<std::size_t>(j--)] = 0;
        if (j < 0) break;
        ++idx[static_cast<std::size_t>(j)];
    }
}

inline std::string describe_tuple(const char* label, const std::vector<Word>& tuple) {
    std::string s = label;
    s += "=(";
    for (std::size_t j = 0; j < tuple.size(); ++j) {
        if (j) s += ";";
        s += format_word(tuple[j]);
    }
    return s + ")";
}

} // namespace detail

/// Freeness criterion for {b a_i b} against the algebra generated by the a's:
///   phi(c_1 (b a_{i_1} b) ... c_m (b a_{i_m} b)) = coef(1..m)(M(mu_c) * R(mu_{b a_{i_1} b, ...}))
/// for m <= d, c_j monomials in the a's of length 0..d, and all index tuples.
/// The left side comes from the centering oracle, the right side from the
/// oracle-built bab family.
inline IdentityCheck verify_bab_free_from_a(const JointDistribution& a, const Scalar& s, int d) {
    const int n = a.n();
    const int b = n + 1;
    FreeProductOracle oracle(a, semicircular(s, 2 * d + 2 * d * d));
    IdentityCheck check{"phi(c_1 (b a b) ... c_m (b a b)) = coef(1..m)(M(c) * R(bab))"};
    const auto cpool = detail::words_with_empty(n, d);
    std::vector<Word> letters;
    for (int i = 1; i <= n; ++i) letters.push_back(Word{i});
    for (int m = 1; m <= d; ++m) {
        detail::for_each_tuple(letters, m, [&](const std::vector<Word>& is) {
            std::vector<Word> bab;
            for (const auto& i : is) bab.push_back(Word{b, i[0], b});
            const auto r_bab = r_transform(pushforward(oracle, bab, m));
            detail::for_each_tuple(cpool, m, [&](const std::vector<Word>& cs) {
                Word joined;
                for (int j = 0; j < m; ++j) joined = joined + cs[static_cast<std::size_t>(j)] + bab[static_cast<std::size_t>(j)];
                const Scalar lhs = oracle.moment(joined);
                const Scalar rhs = boxstar_coef(m_series(pushforward(a, cs, m)), r_bab, identity_word(m));
                check.record(detail::describe_tuple("c", cs) + " " + detail::describe_tuple("i", is), lhs, rhs);
            });
        });
    }
    return check;
}

inline bool check_bab_free_from_a(const JointDistribution& a, const Scalar& s, int d) {
    return verify_bab_free_from_a(a, s, d).passed;
}

// ---------------------------------------------------------------------------
// Compression by a free idempotent of trace alpha

/// Distribution of (p a_1 p, ..., p a_n p) in p A p with the trace renormalized
/// by 1/alpha: the R-transform becomes (1/alpha) R(mu) o D_alpha.
inline JointDistribution compress(const JointDistribution& mu, const Scalar& alpha) {
    if (alpha == 0) throw invalid_argument("compress: alpha must be non-zero");
    return from_r_series(dilate(scale(r_transform(mu), 1 / alpha), alpha));
}

/// The distribution with R-transform t R(mu).
inline JointDistribution semigroup_t(const JointDistribution& mu, const Scalar& t) {
    return from_r_series(scale(r_transform(mu), t));
}

/// The same semigroup element realized as t p a p with p of trace 1/t.
inline JointDistribution semigroup_by_compression(const JointDistribution& mu, const Scalar& t) {
    if (t == 0) throw invalid_argument("semigroup_by_compression: t must be non-zero");
    return compress(dilate_distribution(mu, t), 1 / t);
}

/// Compressed distribution read off the centering oracle, with p free from
/// the a's: moments (1/alpha) phi(p a_{i_1} p p a_{i_2} p ...).
inline JointDistribution compress_by_oracle(const JointDistribution& mu, const Scalar& alpha, int d) {
    if (alpha == 0) throw invalid_argument("compress: alpha must be non-zero");
    const int p = mu.n() + 1;
    FreeProductOracle oracle(mu, idempotent_dist(alpha, 2 * d));
    std::vector<Word> images;
    for (int i = 1; i <= mu.n(); ++i) images.push_back(Word{p, i, p});
    return renormalize(pushforward(oracle, images, d), 1 / alpha);
}

inline IdentityCheck verify_compression(const JointDistribution& mu, const Scalar& alpha, int d) {
    if (d > mu.max_degree()) throw truncation_exceeded("verify_compression: degree beyond input");
    return compare_distributions("R(pap) = (1/alpha) R(a) o D_alpha", compress_by_oracle(mu, alpha, d),
                                 compress(truncate(mu, d), alpha), d);
}

/// Throws precondition_violation unless variable p of mu satisfies
/// mu(u p p v) = mu(u p v) wherever both sides are in range, and mu(p) != 0.
inline Scalar require_idempotent(const JointDistribution& mu, int p) {
    if (p < 1 || p > mu.n()) throw invalid_argument("idempotent variable index out of range");
    const Scalar alpha = mu.moment(Word{p});
    if (alpha == 0) throw precondition_violation("idempotent has trace zero");
    for (int len = 1; len < mu.max_degree(); ++len) {
        for (const auto& w : words_of_length(mu.n(), len)) {
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (w[i] != p) continue;
                std::vector<int> doubled(w.letters());
                doubled.insert(doubled.begin() + static_cast<std::ptrdiff_t>(i), p);
                if (mu.moment(Word(doubled)) != mu.moment(w))
                    throw precondition_violation("variable " + std::to_string(p) + " is not idempotent at word " +
                                                 format_word(w));
            }
        }
    }
    return alpha;
}

/// Freeness of {p a_i p} from p B p inside (p A p, (1/alpha) phi), checked by
///   (1/alpha) phi((p b_1 p)(p a_{i_1} p) ... ) = coef(1..m)(R(pBp-tuple) * M(pap-tuple))
/// for m <= d, B-words b_j of length 1..d and all index tuples. The a's are
/// free from B (which contains the idempotent p); the left side uses the
/// centering oracle, the right side the compression formula.
inline IdentityCheck verify_compression_freeness_check(const JointDistribution& a, const JointDistribution& b, int p,
                                                       int d) {
    const Scalar alpha = require_idempotent(b, p);
    const int n = a.n();
    const int shift = n;
    FreeProductOracle oracle(a, b);
    IdentityCheck check{"(1/alpha) phi(pb_1p pa_1p ... ) = coef(1..m)(R(pBp) * M(pAp))"};
    const auto bpool = words_up_to(b.n(), d);
    std::vector<Word> letters;
    for (int i = 1; i <= n; ++i) letters.push_back(Word{i});
    for (int m = 1; m <= d; ++m) {
        detail::for_each_tuple(letters, m, [&](const std::vector<Word>& is) {
            std::vector<int> vars;
            for (const auto& i : is) vars.push_back(i[0]);
            const auto m_x = m_series(compress(truncate(marginal(a, vars), m), alpha));
            detail::for_each_tuple(bpool, m, [&](const std::vector<Word>& bs) {
                std::vector<Word> pbp;
                for (const auto& bw : bs) pbp.push_back(Word{p} + bw + Word{p});
                const auto r_b = r_transform(renormalize(pushforward(b, pbp, m), 1 / alpha));

                std::vector<int> joined;
                for (int j = 0; j < m; ++j) {
                    for (int x : pbp[static_cast<std::size_t>(j)]) joined.push_back(x + shift);
                    joined.push_back(p + shift);
                    joined.push_back(vars[static_cast<std::size_t>(j)]);
                    joined.push_back(p + shift);
                }
                const Scalar lhs = oracle.moment(Word(joined)) / alpha;
                const Scalar rhs = boxstar_coef(r_b, m_x, identity_word(m));
                check.record(detail::describe_tuple("b", bs) + " " + detail::describe_tuple("i", is), lhs, rhs);
            });
        });
    }
    return check;
}

inline bool verify_compression_freeness(const JointDistribution& a, const JointDistribution& b, int p, int d) {
    return verify_compression_freeness_check(a, b, p, d).passed;
}

} // namespace ncfree
