#pragma once

#include <map>
#include <string>
#include <vector>

#include "../errors.hpp"
#include "../scalar.hpp"
#include "../word.hpp"

namespace ncfree {

/// A normalized moment functional on words of length <= max_degree in n
/// variables. The empty word has moment 1 and is never stored.
class JointDistribution {
public:
    JointDistribution(int n, int max_degree) : n_(n), d_(max_degree) {
        if (n < 1) throw invalid_argument("distribution needs at least one variable");
        if (max_degree < 1) throw invalid_argument("distribution max_degree must be >= 1");
    }

    int n() const { return n_; }
    int max_degree() const { return d_; }
    const std::map<Word, Scalar>& moments() const { return moments_; }

    Scalar moment(const Word& w) const {
        if (w.empty()) return Scalar(1);
        check(w);
        auto it = moments_.find(w);
        return it == moments_.end() ? Scalar(0) : it->second;
    }

    void set(const Word& w, const Scalar& value) {
        if (w.empty()) throw invalid_argument("the empty-word moment is fixed at 1");
        check(w);
        if (value == 0)
            moments_.erase(w);
        else
            moments_[w] = value;
    }

    friend bool operator==(const JointDistribution&, const JointDistribution&) = default;

private:
    void check(const Word& w) const {
        check_letters(w, n_);
        if (static_cast<int>(w.size()) > d_)
            throw truncation_exceeded("moment of length " + std::to_string(w.size()) + " beyond max_degree " +
                                      std::to_string(d_));
    }

    int n_;
    int d_;
    std::map<Word, Scalar> moments_;
};

/// Joint distribution of the elements y_j = images[j] (words in the source
/// variables, possibly empty) through degree d. `Source` is anything with
/// `moment(const Word&)`.
template <typename Source>
JointDistribution pushforward(Source& source, const std::vector<Word>& images, int d) {
    JointDistribution out(static_cast<int>(images.size()), d);
    for (int k = 1; k <= d; ++k) {
        for (const auto& w : words_of_length(out.n(), k)) {
            std::vector<int> letters;
            for (int x : w) {
                const auto& img = images[static_cast<std::size_t>(x - 1)];
                letters.insert(letters.end(), img.begin(), img.end());
            }
            out.set(w, source.moment(Word(std::move(letters))));
        }
    }
    return out;
}

/// Distribution of the sub-tuple (a_{vars[0]}, a_{vars[1]}, ...); indices may repeat.
inline JointDistribution marginal(const JointDistribution& mu, const std::vector<int>& vars) {
    std::vector<Word> images;
    for (int v : vars) images.push_back(Word{v});
    return pushforward(mu, images, mu.max_degree());
}

inline JointDistribution truncate(const JointDistribution& mu, int d) {
    JointDistribution out(mu.n(), d);
    for (const auto& [w, c] : mu.moments())
        if (static_cast<int>(w.size()) <= d) out.set(w, c);
    return out;
}

/// Distribution of (r a_1, ..., r a_n): degree-k moments scaled by r^k.
inline JointDistribution dilate_distribution(const JointDistribution& mu, const Scalar& r) {
    JointDistribution out(mu.n(), mu.max_degree());
    for (const auto& [w, c] : mu.moments()) out.set(w, c * pow(r, static_cast<unsigned>(w.size())));
    return out;
}

/// True iff every moment of length <= d is invariant under cyclic rotation.
/// Only stored words need checking: a word all of whose rotations are absent
/// is consistently zero.
inline bool is_tracial(const JointDistribution& mu, int d) {
    if (d > mu.max_degree()) throw truncation_exceeded("is_tracial: degree beyond max_degree");
    for (const auto& [w, c] : mu.moments()) {
        if (static_cast<int>(w.size()) > d) continue;
        for (std::size_t r = 1; r < w.size(); ++r)
            if (mu.moment(w.rotated(r)) != c) return false;
    }
    return true;
}

inline bool is_tracial(const JointDistribution& mu) { return is_tracial(mu, mu.max_degree()); }

} // namespace ncfree
