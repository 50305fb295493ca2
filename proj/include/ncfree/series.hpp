#pragma once

// Truncated formal power series in n non-commuting variables without
// constant term, and the boxed-star convolution
//   coef_w(f * g) = sum over pi in NC(k) of coef_pi(f, w, pi) * coef_pi(g, w, K(pi)).

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "errors.hpp"
#include "nc_lattice.hpp"
#include "scalar.hpp"
#include "word.hpp"

namespace ncfree {

class NCSeries {
public:
    /// The zero series in n variables truncated at degree d.
    NCSeries(int n, int max_degree) : n_(n), d_(max_degree) {
        if (n < 1) throw invalid_argument("series needs at least one variable");
        if (max_degree < 1) throw invalid_argument("series max_degree must be >= 1");
    }

    int n() const { return n_; }
    int max_degree() const { return d_; }
    const std::map<Word, Scalar>& coeffs() const { return coeffs_; }

    Scalar coef(const Word& w) const {
        check(w);
        auto it = coeffs_.find(w);
        return it == coeffs_.end() ? Scalar(0) : it->second;
    }

    /// Stores `value` at `w`; a zero value erases the entry.
    void set(const Word& w, const Scalar& value) {
        check(w);
        if (value == 0)
            coeffs_.erase(w);
        else
            coeffs_[w] = value;
    }

    bool is_zero() const { return coeffs_.empty(); }

    friend bool operator==(const NCSeries&, const NCSeries&) = default;

private:
    void check(const Word& w) const {
        if (w.empty()) throw invalid_argument("series have no constant term");
        check_letters(w, n_);
        if (static_cast<int>(w.size()) > d_)
            throw truncation_exceeded("word of length " + std::to_string(w.size()) + " beyond max_degree " +
                                      std::to_string(d_));
    }

    int n_;
    int d_;
    std::map<Word, Scalar> coeffs_;
};

inline Scalar coef(const NCSeries& f, const Word& w) { return f.coef(w); }

/// Product over the blocks of pi of the coefficient of w restricted to the block.
inline Scalar coef_pi(const NCSeries& f, const Word& w, const NCPartition& pi) {
    if (static_cast<int>(w.size()) != pi.size())
        throw invalid_argument("coef_pi: partition size differs from word length");
    Scalar acc(1);
    for (const auto& block : pi.blocks()) {
        acc *= f.coef(w.restrict(block));
        if (acc == 0) break;
    }
    return acc;
}

/// Keeps only the coefficients of degree <= d.
inline NCSeries truncate(const NCSeries& f, int d) {
    NCSeries out(f.n(), d);
    for (const auto& [w, c] : f.coeffs())
        if (static_cast<int>(w.size()) <= d) out.set(w, c);
    return out;
}

inline NCSeries scale(const NCSeries& f, const Scalar& r) {
    NCSeries out(f.n(), f.max_degree());
    if (r == 0) return out;
    for (const auto& [w, c] : f.coeffs()) out.set(w, c * r);
    return out;
}

inline void require_same_shape(const NCSeries& f, const NCSeries& g, const char* op) {
    if (f.n() != g.n() || f.max_degree() != g.max_degree())
        throw invalid_argument(std::string(op) + ": series shapes differ");
}

inline NCSeries add(const NCSeries& f, const NCSeries& g) {
    require_same_shape(f, g, "add");
    NCSeries out = f;
    for (const auto& [w, c] : g.coeffs()) out.set(w, out.coef(w) + c);
    return out;
}

inline NCSeries subtract(const NCSeries& f, const NCSeries& g) { return add(f, scale(g, -1)); }

/// Composition with the dilation z_i -> r z_i: degree-k coefficients scaled by r^k.
inline NCSeries dilate(const NCSeries& f, const Scalar& r) {
    NCSeries out(f.n(), f.max_degree());
    for (const auto& [w, c] : f.coeffs()) out.set(w, c * pow(r, static_cast<unsigned>(w.size())));
    return out;
}

/// Series built from a rule giving the coefficient of every word of length k.
template <typename ByDegree>
NCSeries series_from_degree_rule(int n, int d, ByDegree rule) {
    NCSeries out(n, d);
    for (int k = 1; k <= d; ++k) {
        const Scalar c = rule(k);
        if (c == 0) continue;
        for (auto& w : words_of_length(n, k)) out.set(w, c);
    }
    return out;
}

/// z_1 + ... + z_n, the neutral element for boxstar.
inline NCSeries sum_series(int n, int d) {
    return series_from_degree_rule(n, d, [](int k) { return Scalar(k == 1 ? 1 : 0); });
}

/// Every coefficient equal to one.
inline NCSeries zeta(int n, int d) {
    return series_from_degree_rule(n, d, [](int) { return Scalar(1); });
}

/// (-1)^(k+1) (2k-2)! / ((k-1)! k!): the signed Catalan number C_{k-1}.
inline Scalar moeb_coefficient(int k) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(2 * k - 2), static_cast<unsigned long>(k - 1));
    c /= k;
    return Scalar(k % 2 == 1 ? c : mpz_class(-c));
}

/// The boxstar inverse of zeta(n, d).
inline NCSeries moeb(int n, int d) {
    return series_from_degree_rule(n, d, [](int k) { return moeb_coefficient(k); });
}

/// Each word of length k receives the coefficient of z^k in the one-variable series f.
inline NCSeries lift_diagonal(const NCSeries& f, int n) {
    if (f.n() != 1) throw invalid_argument("lift_diagonal expects a one-variable series");
    return series_from_degree_rule(n, f.max_degree(), [&](int k) { return f.coef(Word(std::vector<int>(static_cast<std::size_t>(k), 1))); });
}

/// Sum over i, j in 1..2m of z_i z_j, truncated at degree d (d >= 2 keeps it whole).
inline NCSeries sqsum(int m, int d = 2) {
    if (m < 1) throw invalid_argument("sqsum needs m >= 1");
    return series_from_degree_rule(2 * m, d, [](int k) { return Scalar(k == 2 ? 1 : 0); });
}

namespace detail {

// For each pi in NC(k): its blocks and those of K(pi), as indices into a
// shared list of distinct blocks (position sets, 0-based).
struct StarTable {
    struct Pair {
        std::vector<std::uint16_t> pi_blocks, k_blocks;
        int pi_count;  // |pi|; |K(pi)| = k + 1 - |pi|
    };
    std::vector<std::vector<std::uint8_t>> blocks;
    std::vector<Pair> pairs;
};

inline const StarTable& star_table(int k) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const StarTable>> cache;
    const auto& all = enumerate_nc(k);
    std::lock_guard lock(mutex);
    auto& slot = cache[k];
    if (!slot) {
        auto table = std::make_unique<StarTable>();
        std::map<std::vector<std::uint8_t>, std::uint16_t> index;
        auto ids = [&](const NCPartition& p) {
            std::vector<std::uint16_t> out;
            for (const auto& b : p.blocks()) {
                std::vector<std::uint8_t> pos;
                for (int e : b) pos.push_back(static_cast<std::uint8_t>(e - 1));
                auto [it, inserted] = index.try_emplace(pos, static_cast<std::uint16_t>(table->blocks.size()));
                if (inserted) table->blocks.push_back(pos);
                out.push_back(it->second);
            }
            return out;
        };
        for (const auto& pi : all) table->pairs.push_back({ids(pi), ids(kreweras(pi)), pi.block_count()});
        slot = std::move(table);
    }
    return *slot;
}

inline constexpr std::size_t dense_limit = std::size_t{1} << 24;

// Coefficients of every word of length 1..d in base-n code order.
template <typename T>
class DenseLayers {
public:
    DenseLayers(int n, int d) : n_(n), d_(d), layers_(static_cast<std::size_t>(d) + 1) {
        if (n > 255) throw invalid_argument("boxstar supports at most 255 variables");
        std::size_t total = 0, width = 1;
        for (int k = 1; k <= d; ++k) {
            if (width > dense_limit / static_cast<std::size_t>(n) || (total += width * static_cast<std::size_t>(n)) > dense_limit)
                throw invalid_argument("series too large: n^max_degree exceeds the evaluation limit");
            width *= static_cast<std::size_t>(n);
            layers_[static_cast<std::size_t>(k)].resize(width);
        }
    }

    int n() const { return n_; }
    int d() const { return d_; }

    static std::size_t code(const Word& w, int n) {
        std::size_t c = 0;
        for (int x : w) c = c * static_cast<std::size_t>(n) + static_cast<std::size_t>(x - 1);
        return c;
    }

    T& at(int len, std::size_t code) { return layers_[static_cast<std::size_t>(len)][code]; }
    const T& at(int len, std::size_t code) const { return layers_[static_cast<std::size_t>(len)][code]; }
    const std::vector<T>& layer(int len) const { return layers_[static_cast<std::size_t>(len)]; }

private:
    int n_;
    int d_;
    std::vector<std::vector<T>> layers_;
};

inline Word decode_word(std::size_t code, int n, int k) {
    std::vector<int> letters(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
        letters[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::size_t>(n)) + 1;
        code /= static_cast<std::size_t>(n);
    }
    return Word(std::move(letters));
}

// f = numerators / den with a common integer denominator, so that block
// products only need integer multiplication.
struct IntegerSeries {
    DenseLayers<mpz_class> num;
    mpz_class den{1};

    IntegerSeries(const NCSeries& f, int d) : num(f.n(), d) {
        for (const auto& [w, c] : f.coeffs())
            if (static_cast<int>(w.size()) <= d) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        for (const auto& [w, c] : f.coeffs())
            if (static_cast<int>(w.size()) <= d)
                num.at(static_cast<int>(w.size()), num.code(w, f.n())) = c.get_num() * (den / c.get_den());
    }
};

// Walks all words of length k in code order, with letters as 0-based digits.
template <typename Visit>
void for_each_word_code(int n, int k, Visit visit) {
    std::vector<std::uint8_t> letters(static_cast<std::size_t>(k), 0);
    std::size_t code = 0;
    while (true) {
        visit(letters.data(), code);
        ++code;
        int i = k - 1;
        while (i >= 0 && letters[static_cast<std::size_t>(i)] == n - 1) letters[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++letters[static_cast<std::size_t>(i)];
    }
}

// Code of the word restricted to each distinct block of the table.
inline void block_codes(const StarTable& table, int n, const std::uint8_t* letters, std::vector<std::size_t>& out) {
    out.resize(table.blocks.size());
    for (std::size_t b = 0; b < table.blocks.size(); ++b) {
        std::size_t c = 0;
        for (std::uint8_t p : table.blocks[b]) c = c * static_cast<std::size_t>(n) + letters[p];
        out[b] = c;
    }
}

} // namespace detail

/// Boxed-star convolution. The result is truncated at the smaller of the two
/// degrees; the zero series is absorbing on either side.
inline NCSeries boxstar(const NCSeries& f, const NCSeries& g) {
    if (f.n() != g.n()) throw invalid_argument("boxstar: series have different variable counts");
    const int n = f.n();
    const int d = std::min(f.max_degree(), g.max_degree());
    NCSeries out(n, d);
    if (f.is_zero() || g.is_zero()) return out;
    const detail::IntegerSeries F(f, d), G(g, d);
    std::vector<std::size_t> codes;
    std::vector<const mpz_class*> fv, gv;
    mpz_class t;
    for (int k = 1; k <= d; ++k) {
        const auto& table = detail::star_table(k);
        // Terms are grouped by |pi|; each group shares the denominator den_f^|pi| den_g^(k+1-|pi|).
        std::vector<mpz_class> acc(static_cast<std::size_t>(k) + 1);
        std::vector<Scalar> scale_by(static_cast<std::size_t>(k) + 1);
        for (int j = 1; j <= k; ++j) {
            mpz_class den_f, den_g;
            mpz_pow_ui(den_f.get_mpz_t(), F.den.get_mpz_t(), static_cast<unsigned long>(j));
            mpz_pow_ui(den_g.get_mpz_t(), G.den.get_mpz_t(), static_cast<unsigned long>(k + 1 - j));
            scale_by[static_cast<std::size_t>(j)] = Scalar(mpz_class(1), den_f * den_g);
        }
        fv.resize(table.blocks.size());
        gv.resize(table.blocks.size());
        detail::for_each_word_code(n, k, [&](const std::uint8_t* letters, std::size_t code) {
            detail::block_codes(table, n, letters, codes);
            for (std::size_t b = 0; b < codes.size(); ++b) {
                const int len = static_cast<int>(table.blocks[b].size());
                fv[b] = &F.num.at(len, codes[b]);
                gv[b] = &G.num.at(len, codes[b]);
            }
            for (auto& a : acc) a = 0;
            for (const auto& pair : table.pairs) {
                bool zero = false;
                t = 1;
                for (auto b : pair.pi_blocks) {
                    if (sgn(*fv[b]) == 0) { zero = true; break; }
                    mpz_mul(t.get_mpz_t(), t.get_mpz_t(), fv[b]->get_mpz_t());
                }
                if (zero) continue;
                for (auto b : pair.k_blocks) {
                    if (sgn(*gv[b]) == 0) { zero = true; break; }
                    mpz_mul(t.get_mpz_t(), t.get_mpz_t(), gv[b]->get_mpz_t());
                }
                if (zero) continue;
                mpz_add(acc[static_cast<std::size_t>(pair.pi_count)].get_mpz_t(),
                        acc[static_cast<std::size_t>(pair.pi_count)].get_mpz_t(), t.get_mpz_t());
            }
            Scalar value(0);
            for (int j = 1; j <= k; ++j)
                if (sgn(acc[static_cast<std::size_t>(j)]) != 0) value += Scalar(acc[static_cast<std::size_t>(j)]) * scale_by[static_cast<std::size_t>(j)];
            if (value != 0) out.set(detail::decode_word(code, n, k), value);
        });
    }
    return out;
}

/// The single coefficient coef_w(f * g), without building the whole product.
inline Scalar boxstar_coef(const NCSeries& f, const NCSeries& g, const Word& w) {
    if (f.n() != g.n()) throw invalid_argument("boxstar: series have different variable counts");
    const int k = static_cast<int>(w.size());
    if (k > std::min(f.max_degree(), g.max_degree()))
        throw truncation_exceeded("boxstar_coef: word longer than the product's max_degree");
    Scalar acc(0);
    for (const auto& pi : enumerate_nc(k)) {
        const Scalar a = coef_pi(f, w, pi);
        if (a == 0) continue;
        acc += a * coef_pi(g, w, kreweras(pi));
    }
    return acc;
}

/// Sum over pi <= rho of coef_pi(f, w, pi) * coef_pi(g, w, K_rho(pi)); equals coef_pi(f * g, w, rho).
inline Scalar coef_pi_star(const NCSeries& f, const NCSeries& g, const Word& w, const NCPartition& rho) {
    const int k = static_cast<int>(w.size());
    if (k != rho.size()) throw invalid_argument("coef_pi_star: partition size differs from word length");
    Scalar acc(0);
    for (const auto& pi : enumerate_nc(k)) {
        if (!leq(pi, rho)) continue;
        const Scalar a = coef_pi(f, w, pi);
        if (a == 0) continue;
        acc += a * coef_pi(g, w, relative_kreweras(pi, rho));
    }
    return acc;
}

/// The two-sided boxstar inverse, solved degree by degree. The all-singleton
/// partition pairs with the one-block complement, so the unknown coefficient
/// appears once, multiplied by the product of linear coefficients.
inline NCSeries boxstar_inverse(const NCSeries& f) {
    const int n = f.n();
    const int d = f.max_degree();
    for (int i = 1; i <= n; ++i)
        if (f.coef(Word{i}) == 0)
            throw not_invertible("linear coefficient of z_" + std::to_string(i) + " vanishes");
    detail::DenseLayers<Scalar> F(n, d), G(n, d);
    for (const auto& [w, c] : f.coeffs()) F.at(static_cast<int>(w.size()), F.code(w, n)) = c;
    std::vector<std::size_t> codes;
    mpq_class t, lin;
    for (int k = 1; k <= d; ++k) {
        const auto& table = detail::star_table(k);
        detail::for_each_word_code(n, k, [&](const std::uint8_t* letters, std::size_t code) {
            detail::block_codes(table, n, letters, codes);
            auto fval = [&](std::uint16_t b) -> const Scalar& { return F.at(static_cast<int>(table.blocks[b].size()), codes[b]); };
            auto gval = [&](std::uint16_t b) -> const Scalar& { return G.at(static_cast<int>(table.blocks[b].size()), codes[b]); };
            Scalar rest(k == 1 ? 1 : 0);
            for (const auto& pair : table.pairs) {
                t = 1;
                for (auto b : pair.pi_blocks) t *= fval(b);
                if (pair.pi_count == k) {
                    lin = t;
                    continue;
                }
                if (t == 0) continue;
                for (auto b : pair.k_blocks) t *= gval(b);
                rest -= t;
            }
            G.at(k, code) = rest / lin;
        });
    }
    NCSeries out(n, d);
    for (int k = 1; k <= d; ++k)
        for (std::size_t c = 0; c < G.layer(k).size(); ++c)
            if (G.layer(k)[c] != 0) out.set(detail::decode_word(c, n, k), G.layer(k)[c]);
    return out;
}

} // namespace ncfree
