#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace ncfree {

/// A finite sequence of 1-based variable indices. Ordered by length, then
/// lexicographically. The empty word stands for the unit and only appears
/// as a moment argument; series coefficients need length >= 1.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<int> letters) : letters_(letters) {}

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<int>& letters() const { return letters_; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    /// Subword at the given 1-based positions, kept in the order given.
    Word restrict(const std::vector<int>& positions) const {
        std::vector<int> out;
        out.reserve(positions.size());
        for (int p : positions) out.push_back(letters_[static_cast<std::size_t>(p - 1)]);
        return Word(std::move(out));
    }

    friend Word operator+(const Word& a, const Word& b) {
        std::vector<int> out = a.letters_;
        out.insert(out.end(), b.letters_.begin(), b.letters_.end());
        return Word(std::move(out));
    }

    /// Cyclic rotation moving the first `by` letters to the back.
    Word rotated(std::size_t by) const {
        if (letters_.empty()) return *this;
        by %= letters_.size();
        std::vector<int> out(letters_.begin() + static_cast<std::ptrdiff_t>(by), letters_.end());
        out.insert(out.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(by));
        return Word(std::move(out));
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<int> letters_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::size_t h = w.size();
        for (int x : w) h = h * 1000003u ^ std::hash<int>{}(x);
        return h;
    }
};

/// Throws invalid_argument unless every letter lies in 1..n.
inline void check_letters(const Word& w, int n) {
    for (int x : w)
        if (x < 1 || x > n)
            throw invalid_argument("letter " + std::to_string(x) + " outside 1.." + std::to_string(n));
}

/// "1,2,1"; the empty word formats as "".
inline std::string format_word(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

inline Word parse_word(std::string_view text) {
    std::vector<int> letters;
    if (text.empty()) return Word{};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = std::min(text.find(',', pos), text.size());
        const std::string item(text.substr(pos, comma - pos));
        if (item.empty() || item.size() > 9 || item.find_first_not_of("0123456789") != std::string::npos)
            throw invalid_argument("malformed word: '" + std::string(text) + "'");
        letters.push_back(std::stoi(item));
        pos = comma + 1;
    }
    return Word(std::move(letters));
}

/// All n^k words of length k over 1..n in lexicographic order.
inline std::vector<Word> words_of_length(int n, int k) {
    std::vector<Word> out;
    std::vector<int> cur(static_cast<std::size_t>(k), 1);
    while (true) {
        out.emplace_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n) cur[static_cast<std::size_t>(i--)] = 1;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
    }
    return out;
}

/// The word (1, 2, ..., m).
inline Word identity_word(int m) {
    std::vector<int> letters(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) letters[static_cast<std::size_t>(j)] = j + 1;
    return Word(std::move(letters));
}

/// All words of length 1..d, in word order.
inline std::vector<Word> words_up_to(int n, int d) {
    std::vector<Word> out;
    for (int k = 1; k <= d; ++k) {
        auto layer = words_of_length(n, k);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace ncfree
