#pragma once

// Moments of two free families computed straight from the definition of
// freeness, with no cumulants involved. A word splits into maximal runs
// u_1 ... u_r of letters from one family. Expanding
//   phi((u_1 - phi(u_1)) ... (u_r - phi(u_r))) = 0
// gives
//   phi(w) = sum over non-empty S of (-1)^(|S|+1) prod_{j in S} phi(u_j) * phi(w without the runs in S),
// and every word on the right is strictly shorter.

#include <unordered_map>

#include "distribution.hpp"

namespace ncfree {

/// Lazily evaluated joint distribution of (a_1..a_m, b_1..b_n) with {a} free
/// from {b}. Variables 1..m are the a's, m+1..m+n the b's. Pure moments are
/// read from the inputs, so a word only needs its runs (after merging) to fit
/// the input degrees; otherwise truncation_exceeded is thrown.
class FreeProductOracle {
public:
    FreeProductOracle(JointDistribution a, JointDistribution b) : a_(std::move(a)), b_(std::move(b)) {}

    int n() const { return a_.n() + b_.n(); }
    int split() const { return a_.n(); }

    Scalar moment(const Word& w) {
        check_letters(w, n());
        return eval(w);
    }

    /// All moments through degree d.
    JointDistribution distribution(int d) {
        JointDistribution out(n(), d);
        for (const auto& w : words_up_to(n(), d)) out.set(w, eval(w));
        return out;
    }

private:
    bool in_a(int x) const { return x <= a_.n(); }

    Scalar pure(const std::vector<int>& run) const {
        if (in_a(run.front())) return a_.moment(Word(run));
        std::vector<int> shifted(run);
        for (int& x : shifted) x -= a_.n();
        return b_.moment(Word(std::move(shifted)));
    }

    Scalar eval(const Word& w) {
        std::vector<std::vector<int>> runs;
        for (int x : w) {
            if (runs.empty() || in_a(runs.back().front()) != in_a(x)) runs.emplace_back();
            runs.back().push_back(x);
        }
        if (runs.empty()) return Scalar(1);
        if (runs.size() == 1) return pure(runs.front());
        if (auto it = memo_.find(w); it != memo_.end()) return it->second;

        std::vector<Scalar> means;
        means.reserve(runs.size());
        for (const auto& run : runs) means.push_back(pure(run));

        const std::size_t r = runs.size();
        Scalar total(0);
        for (std::size_t mask = 1; mask < (std::size_t{1} << r); ++mask) {
            Scalar c(1);
            std::vector<int> rest;
            int removed = 0;
            for (std::size_t j = 0; j < r; ++j) {
                if (mask & (std::size_t{1} << j)) {
                    c *= means[j];
                    ++removed;
                } else {
                    rest.insert(rest.end(), runs[j].begin(), runs[j].end());
                }
            }
            if (c == 0) continue;
            const Scalar term = c * eval(Word(std::move(rest)));
            if (removed % 2 == 1)
                total += term;
            else
                total -= term;
        }
        memo_.emplace(w, total);
        return total;
    }

    JointDistribution a_;
    JointDistribution b_;
    std::unordered_map<Word, Scalar, WordHash> memo_;
};

/// The joint distribution through degree d of the two families taken free
/// from each other. Requires d within both input degrees.
inline JointDistribution free_product_centering(const JointDistribution& a, const JointDistribution& b, int d) {
    if (d > a.max_degree() || d > b.max_degree())
        throw truncation_exceeded("free_product_centering: degree " + std::to_string(d) +
                                  " exceeds an input max_degree");
    FreeProductOracle oracle(a, b);
    return oracle.distribution(d);
}

} // namespace ncfree
