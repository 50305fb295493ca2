#pragma once

// Non-crossing partitions of {1,...,k}: enumeration, refinement order,
// Kreweras complement (absolute and relative to a coarser partition),
// the permutation embedding and the NC(k) -> NCP(2k) pairing bijection.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace ncfree {

/// A set partition of {1,...,k} stored as its restricted growth string:
/// label(i) is the index of the block containing i, blocks numbered in order
/// of their minimum element. Canonical by construction, so `==` is equality
/// of partitions and `<=>` is the lexicographic order on the label map.
class SetPartition {
public:
    using label_type = std::uint16_t;

    SetPartition() = default;

    /// Relabels an arbitrary block assignment (any integers) into canonical form.
    template <typename Int>
    static SetPartition from_labels(const std::vector<Int>& raw) {
        SetPartition p;
        p.labels_.resize(raw.size());
        std::map<Int, label_type> seen;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            auto [it, inserted] = seen.try_emplace(raw[i], static_cast<label_type>(seen.size()));
            p.labels_[i] = it->second;
        }
        p.block_count_ = static_cast<int>(seen.size());
        return p;
    }

    /// Blocks of 1-based elements; must be disjoint, non-empty and cover {1..k}.
    static SetPartition from_blocks(int k, const std::vector<std::vector<int>>& blocks) {
        if (k < 1) throw invalid_argument("partition ground set must be non-empty");
        std::vector<int> raw(static_cast<std::size_t>(k), -1);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (blocks[b].empty()) throw invalid_argument("partition has an empty block");
            for (int e : blocks[b]) {
                if (e < 1 || e > k)
                    throw invalid_argument("element " + std::to_string(e) + " outside {1.." + std::to_string(k) + "}");
                if (raw[static_cast<std::size_t>(e - 1)] != -1)
                    throw invalid_argument("element " + std::to_string(e) + " occurs in two blocks");
                raw[static_cast<std::size_t>(e - 1)] = static_cast<int>(b);
            }
        }
        for (int i = 0; i < k; ++i)
            if (raw[static_cast<std::size_t>(i)] == -1)
                throw invalid_argument("element " + std::to_string(i + 1) + " is not covered");
        return from_labels(raw);
    }

    int size() const { return static_cast<int>(labels_.size()); }
    int block_count() const { return block_count_; }

    /// Block index of the 1-based element `i`.
    int block_of(int i) const { return labels_[static_cast<std::size_t>(i - 1)]; }
    bool same_block(int i, int j) const { return block_of(i) == block_of(j); }
    const std::vector<label_type>& labels() const { return labels_; }

    /// Blocks with ascending 1-based elements, ordered by minimum.
    std::vector<std::vector<int>> blocks() const {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(block_count_));
        for (std::size_t i = 0; i < labels_.size(); ++i) out[labels_[i]].push_back(static_cast<int>(i) + 1);
        return out;
    }

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend auto operator<=>(const SetPartition& a, const SetPartition& b) { return a.labels_ <=> b.labels_; }

private:
    std::vector<label_type> labels_;
    int block_count_ = 0;
};

/// Stack scan: every re-visited block must be the innermost open one.
inline bool is_noncrossing(const SetPartition& p) {
    const auto& lab = p.labels();
    std::vector<std::size_t> last(static_cast<std::size_t>(p.block_count()), 0);
    for (std::size_t i = 0; i < lab.size(); ++i) last[lab[i]] = i;
    std::vector<bool> opened(static_cast<std::size_t>(p.block_count()), false);
    std::vector<int> stack;
    for (std::size_t i = 0; i < lab.size(); ++i) {
        const int b = lab[i];
        if (!opened[static_cast<std::size_t>(b)]) {
            opened[static_cast<std::size_t>(b)] = true;
            if (last[static_cast<std::size_t>(b)] != i) stack.push_back(b);
            continue;
        }
        if (stack.empty() || stack.back() != b) return false;
        if (last[static_cast<std::size_t>(b)] == i) stack.pop_back();
    }
    return true;
}

/// Throws invalid_argument when `blocks` is not a set partition of {1..k}.
inline bool is_noncrossing(int k, const std::vector<std::vector<int>>& blocks) {
    return is_noncrossing(SetPartition::from_blocks(k, blocks));
}

/// Element of NC(k).
class NCPartition {
public:
    NCPartition() = default;
    explicit NCPartition(SetPartition p) : p_(std::move(p)) {
        if (!is_noncrossing(p_)) throw invalid_argument("partition is crossing");
    }
    NCPartition(int k, const std::vector<std::vector<int>>& blocks)
        : NCPartition(SetPartition::from_blocks(k, blocks)) {}

    /// 0_k, all singletons.
    static NCPartition finest(int k) {
        std::vector<int> raw(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) raw[static_cast<std::size_t>(i)] = i;
        return NCPartition(trusted, SetPartition::from_labels(raw));
    }
    /// 1_k, one block.
    static NCPartition coarsest(int k) {
        return NCPartition(trusted, SetPartition::from_labels(std::vector<int>(static_cast<std::size_t>(k), 0)));
    }

    int size() const { return p_.size(); }
    int block_count() const { return p_.block_count(); }
    int block_of(int i) const { return p_.block_of(i); }
    std::vector<std::vector<int>> blocks() const { return p_.blocks(); }
    const SetPartition& as_set_partition() const { return p_; }

    bool is_pairing() const {
        for (const auto& b : blocks())
            if (b.size() != 2) return false;
        return true;
    }

    friend bool operator==(const NCPartition&, const NCPartition&) = default;
    friend auto operator<=>(const NCPartition& a, const NCPartition& b) { return a.p_ <=> b.p_; }

private:
    struct trusted_t {};
    static constexpr trusted_t trusted{};
    NCPartition(trusted_t, SetPartition p) : p_(std::move(p)) {}

    friend class Permutation;
    template <typename Int>
    friend NCPartition make_nc_unchecked(const std::vector<Int>& raw);

    SetPartition p_;
};

template <typename Int>
NCPartition make_nc_unchecked(const std::vector<Int>& raw) {
    return NCPartition(NCPartition::trusted, SetPartition::from_labels(raw));
}

/// A bijection of {1,...,k}. Products compose right to left: (a * b)(x) = a(b(x)).
class Permutation {
public:
    Permutation() = default;

    /// `images[j]` is the image of j+1 (1-based values).
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> hit(img_.size(), false);
        for (int v : img_) {
            if (v < 1 || v > size() || hit[static_cast<std::size_t>(v - 1)])
                throw invalid_argument("images do not form a bijection");
            hit[static_cast<std::size_t>(v - 1)] = true;
        }
    }

    static Permutation identity(int k) {
        std::vector<int> img(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) img[static_cast<std::size_t>(i)] = i + 1;
        return Permutation(std::move(img));
    }

    /// The full cycle 1 -> 2 -> ... -> k -> 1.
    static Permutation full_cycle(int k) {
        std::vector<int> img(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % k + 1;
        return Permutation(std::move(img));
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const {
        std::vector<int> inv(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) inv[static_cast<std::size_t>(img_[i] - 1)] = static_cast<int>(i) + 1;
        return Permutation(trusted_t{}, std::move(inv));
    }

    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.size() != b.size()) throw invalid_argument("permutation size mismatch");
        std::vector<int> img(b.img_.size());
        for (std::size_t i = 0; i < img.size(); ++i) img[i] = a(b.img_[i]);
        return Permutation(trusted_t{}, std::move(img));
    }

    /// The partition into orbits (cycles).
    SetPartition orbits() const {
        std::vector<int> raw(img_.size(), -1);
        int next = 0;
        for (std::size_t s = 0; s < img_.size(); ++s) {
            if (raw[s] != -1) continue;
            for (std::size_t j = s; raw[j] == -1; j = static_cast<std::size_t>(img_[j] - 1)) raw[j] = next;
            ++next;
        }
        return SetPartition::from_labels(raw);
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    struct trusted_t {};
    Permutation(trusted_t, std::vector<int> images) : img_(std::move(images)) {}
    std::vector<int> img_;
};

/// Each block {i1 < ... < im} becomes the cycle i1 -> i2 -> ... -> im -> i1.
inline Permutation perm_of(const NCPartition& pi) {
    std::vector<int> img(static_cast<std::size_t>(pi.size()));
    for (const auto& b : pi.blocks())
        for (std::size_t j = 0; j < b.size(); ++j)
            img[static_cast<std::size_t>(b[j] - 1)] = b[(j + 1) % b.size()];
    return Permutation(std::move(img));
}

/// Refinement order: every block of `pi` lies inside a block of `rho`.
inline bool leq(const NCPartition& pi, const NCPartition& rho) {
    if (pi.size() != rho.size()) throw invalid_argument("leq: ground-set sizes differ");
    std::vector<int> host(static_cast<std::size_t>(pi.block_count()), -1);
    for (int i = 1; i <= pi.size(); ++i) {
        int& h = host[static_cast<std::size_t>(pi.block_of(i))];
        if (h == -1)
            h = rho.block_of(i);
        else if (h != rho.block_of(i))
            return false;
    }
    return true;
}

/// Kreweras complement: the orbits of perm_of(pi)^{-1} * (1 2 ... k).
inline NCPartition kreweras(const NCPartition& pi) {
    const Permutation p = perm_of(pi).inverse() * Permutation::full_cycle(pi.size());
    const SetPartition orbits = p.orbits();
    return make_nc_unchecked(std::vector<int>(orbits.labels().begin(), orbits.labels().end()));
}

/// Kreweras complement of `pi` taken inside each block of `rho`. Requires pi <= rho.
inline NCPartition relative_kreweras(const NCPartition& pi, const NCPartition& rho) {
    if (!leq(pi, rho)) throw precondition_violation("relative_kreweras requires pi <= rho");
    std::vector<int> raw(static_cast<std::size_t>(pi.size()));
    int offset = 0;
    for (const auto& block : rho.blocks()) {
        std::vector<int> local;
        local.reserve(block.size());
        for (int e : block) local.push_back(pi.block_of(e));
        const NCPartition sub(SetPartition::from_labels(local));
        const NCPartition comp = kreweras(sub);
        for (std::size_t j = 0; j < block.size(); ++j)
            raw[static_cast<std::size_t>(block[j] - 1)] = offset + comp.block_of(static_cast<int>(j) + 1);
        offset += comp.block_count();
    }
    return make_nc_unchecked(raw);
}

/// `pi` on the even points {2,4,...,2k}, `rho` on the odd points {1,3,...,2k-1}.
inline SetPartition interleave(const NCPartition& pi, const NCPartition& rho) {
    if (pi.size() != rho.size()) throw invalid_argument("interleave: ground-set sizes differ");
    const int k = pi.size();
    std::vector<int> raw(static_cast<std::size_t>(2 * k));
    for (int i = 1; i <= k; ++i) {
        raw[static_cast<std::size_t>(2 * i - 2)] = rho.block_of(i);
        raw[static_cast<std::size_t>(2 * i - 1)] = rho.block_count() + pi.block_of(i);
    }
    return SetPartition::from_labels(raw);
}

/// Holds exactly when pi <= kreweras(rho).
inline bool interleave_is_noncrossing(const NCPartition& pi, const NCPartition& rho) {
    return is_noncrossing(interleave(pi, rho));
}

/// `rho` on the odd points and its complement on the even points; an element of NC(2k).
inline NCPartition twice(const NCPartition& rho) {
    return NCPartition(interleave(kreweras(rho), rho));
}

/// Moves element i to i + shift (mod k). kreweras applied twice equals rotate(pi, -1).
inline NCPartition rotate(const NCPartition& pi, int shift) {
    const int k = pi.size();
    std::vector<int> raw(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        const int j = (((i - 1 + shift) % k) + k) % k;
        raw[static_cast<std::size_t>(j)] = pi.block_of(i);
    }
    return make_nc_unchecked(raw);
}

inline constexpr int nc_enumeration_ceiling = 14;

namespace detail {

// All NC partitions of an interval of length `len`, as label vectors
// (not yet canonical), built by choosing the block of the first point and
// filling each gap independently.
inline void nc_interval(int len, std::vector<std::vector<int>>& out) {
    if (len == 0) {
        out.emplace_back();
        return;
    }
    const int others = len - 1;
    for (unsigned mask = 0; mask < (1u << others); ++mask) {
        std::vector<int> members{0};
        for (int j = 0; j < others; ++j)
            if (mask & (1u << j)) members.push_back(j + 1);
        std::vector<std::pair<int, int>> gaps;  // (start, length)
        for (std::size_t t = 0; t < members.size(); ++t) {
            const int start = members[t] + 1;
            const int stop = t + 1 < members.size() ? members[t + 1] : len;
            if (stop > start) gaps.emplace_back(start, stop - start);
        }
        std::vector<std::vector<std::vector<int>>> choices;
        for (auto [start, glen] : gaps) {
            choices.emplace_back();
            nc_interval(glen, choices.back());
        }
        std::vector<std::size_t> odo(gaps.size(), 0);
        while (true) {
            std::vector<int> lab(static_cast<std::size_t>(len), 0);
            int next = 1;
            for (std::size_t g = 0; g < gaps.size(); ++g) {
                const auto& sub = choices[g][odo[g]];
                int used = 0;
                for (std::size_t e = 0; e < sub.size(); ++e) {
                    lab[static_cast<std::size_t>(gaps[g].first) + e] = next + sub[e];
                    used = std::max(used, sub[e] + 1);
                }
                next += used;
            }
            out.push_back(std::move(lab));
            std::size_t g = 0;
            while (g < odo.size() && ++odo[g] == choices[g].size()) odo[g++] = 0;
            if (g == odo.size()) break;
        }
    }
}

} // namespace detail

/// All of NC(k) in lexicographic order of the label map. Results are cached
/// per k behind a mutex; the returned reference stays valid for the program's life.
inline const std::vector<NCPartition>& enumerate_nc(int k) {
    if (k < 1 || k > nc_enumeration_ceiling)
        throw invalid_argument("enumerate_nc: k must lie in 1.." + std::to_string(nc_enumeration_ceiling));
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const std::vector<NCPartition>>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[k];
    if (!slot) {
        std::vector<std::vector<int>> raw;
        detail::nc_interval(k, raw);
        std::vector<NCPartition> all;
        all.reserve(raw.size());
        for (const auto& r : raw) all.push_back(make_nc_unchecked(r));
        std::sort(all.begin(), all.end());
        slot = std::make_unique<const std::vector<NCPartition>>(std::move(all));
    }
    return *slot;
}

/// All non-crossing pairings of {1,...,m}, m even, in the same order as enumerate_nc.
inline std::vector<NCPartition> enumerate_ncp(int m) {
    if (m < 2 || m % 2 != 0 || m > 2 * nc_enumeration_ceiling)
        throw invalid_argument("enumerate_ncp: argument must be even and in 2.." + std::to_string(2 * nc_enumeration_ceiling));
    std::vector<std::vector<int>> pairings;
    // Pair the first open point with a partner leaving an even gap inside.
    auto rec = [&](auto&& self, std::vector<int>& lab, int next_label) -> void {
        auto first = std::find(lab.begin(), lab.end(), -1);
        if (first == lab.end()) {
            pairings.push_back(lab);
            return;
        }
        const auto i = static_cast<std::size_t>(first - lab.begin());
        for (std::size_t j = i + 1; j < lab.size(); j += 2) {
            if (lab[j] != -1) break;
            lab[i] = lab[j] = next_label;
            self(self, lab, next_label + 1);
            lab[i] = lab[j] = -1;
        }
    };
    std::vector<int> lab(static_cast<std::size_t>(m), -1);
    rec(rec, lab, 0);
    std::vector<NCPartition> out;
    out.reserve(pairings.size());
    for (const auto& p : pairings) out.push_back(make_nc_unchecked(p));
    std::sort(out.begin(), out.end());
    return out;
}

/// "1,4,8|2,3|5,6|7"
inline std::string format_partition(const SetPartition& p) {
    std::string s;
    for (const auto& b : p.blocks()) {
        if (!s.empty()) s += '|';
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (j) s += ',';
            s += std::to_string(b[j]);
        }
    }
    return s;
}
inline std::string format_partition(const NCPartition& p) { return format_partition(p.as_set_partition()); }

/// Parses the `|`/`,` text form of a partition of {1..k}.
inline SetPartition parse_set_partition(std::string_view text, int k) {
    std::vector<std::vector<int>> blocks;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto bar = std::min(text.find('|', pos), text.size());
        std::string_view chunk = text.substr(pos, bar - pos);
        std::vector<int> block;
        std::size_t q = 0;
        while (q <= chunk.size()) {
            const auto comma = std::min(chunk.find(',', q), chunk.size());
            std::string item(chunk.substr(q, comma - q));
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9)
                throw invalid_argument("malformed partition text: '" + std::string(text) + "'");
            block.push_back(std::stoi(item));
            q = comma + 1;
        }
        blocks.push_back(std::move(block));
        pos = bar + 1;
    }
    return SetPartition::from_blocks(k, blocks);
}

inline NCPartition parse_nc_partition(std::string_view text, int k) {
    return NCPartition(parse_set_partition(text, k));
}

} // namespace ncfree
