#pragma once

// Symmetric-group layer: permutations in one-line notation, length, left weak
// and strong Bruhat orders, weak-order joins, parabolic longest elements and
// reduced words.

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xtal/error.hpp"

namespace xtal {

/// Largest supported n for S_n.
inline constexpr int kMaxDegree = 12;

/// Element of S_n in one-line notation w(1) ... w(n).
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::span<const int> word) {
        const auto n = static_cast<int>(word.size());
        if (n > kMaxDegree) {
            throw std::invalid_argument("permutation degree " + std::to_string(n) +
                                        " exceeds the supported maximum of " +
                                        std::to_string(kMaxDegree));
        }
        std::array<bool, kMaxDegree + 1> seen{};
        word_.reserve(word.size());
        for (int x : word) {
            if (x < 1 || x > n || seen[x]) {
                throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
            }
            seen[x] = true;
            word_.push_back(static_cast<std::uint8_t>(x));
        }
    }

    Permutation(std::initializer_list<int> word)
        : Permutation(std::span<const int>(word.begin(), word.size())) {}

    static Permutation identity(int n) {
        std::vector<int> w(n);
        for (int k = 0; k < n; ++k) w[k] = k + 1;
        return Permutation(w);
    }

    /// The adjacent transposition s_i (1 <= i <= n-1).
    static Permutation simple_reflection(int i, int n) {
        if (i < 1 || i >= n) throw std::invalid_argument("simple reflection index out of range");
        auto w = identity(n);
        std::swap(w.word_[i - 1], w.word_[i]);
        return w;
    }

    int size() const noexcept { return static_cast<int>(word_.size()); }

    /// Value at 1-based position p.
    int operator()(int p) const { return word_[p - 1]; }

    std::vector<int> word() const { return {word_.begin(), word_.end()}; }

    /// 1-based position of value x.
    int position_of(int x) const {
        auto it = std::find(word_.begin(), word_.end(), static_cast<std::uint8_t>(x));
        return static_cast<int>(it - word_.begin()) + 1;
    }

    Permutation inverse() const {
        Permutation r = *this;
        for (int p = 0; p < size(); ++p) r.word_[word_[p] - 1] = static_cast<std::uint8_t>(p + 1);
        return r;
    }

    bool is_identity() const {
        for (int p = 0; p < size(); ++p)
            if (word_[p] != p + 1) return false;
        return true;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    friend Permutation left_multiply(int i, const Permutation& w);
    friend Permutation right_multiply(const Permutation& w, int i);

    std::vector<std::uint8_t> word_;
};

/// Subset J of the simple reflections {1, ..., n-1}, stored as a bitmask.
class ParabolicSet {
public:
    ParabolicSet() = default;
    ParabolicSet(std::initializer_list<int> indices) {
        for (int i : indices) insert(i);
    }
    static ParabolicSet from_mask(std::uint32_t mask) {
        ParabolicSet j;
        j.mask_ = mask;
        return j;
    }
    /// All of {1, ..., n-1}.
    static ParabolicSet full(int n) { return from_mask(n <= 1 ? 0u : ((1u << (n - 1)) - 1u) << 1); }

    void insert(int i) {
        if (i < 1 || i >= kMaxDegree) throw std::invalid_argument("parabolic index out of range");
        mask_ |= 1u << i;
    }
    bool contains(int i) const { return i >= 1 && i < 32 && ((mask_ >> i) & 1u); }
    bool empty() const { return mask_ == 0; }
    int size() const { return std::popcount(mask_); }
    std::uint32_t mask() const { return mask_; }
    bool subset_of(const ParabolicSet& other) const { return (mask_ & ~other.mask_) == 0; }
    int max_index() const { return mask_ == 0 ? 0 : 31 - std::countl_zero(mask_); }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = 1; i < 32; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    friend bool operator==(const ParabolicSet&, const ParabolicSet&) = default;
    friend auto operator<=>(const ParabolicSet&, const ParabolicSet&) = default;

private:
    std::uint32_t mask_ = 0;
};

/// Every subset of {1, ..., n-1}, in increasing mask order.
inline std::vector<ParabolicSet> all_parabolic_sets(int n) {
    std::vector<ParabolicSet> out;
    const std::uint32_t full = ParabolicSet::full(n).mask();
    for (std::uint32_t m = 0;; m = (m - full) & full) {  // subset enumeration
        out.push_back(ParabolicSet::from_mask(m));
        if (m == full) break;
    }
    std::sort(out.begin(), out.end(), [](auto a, auto b) { return a.mask() < b.mask(); });
    return out;
}

inline std::string to_string(const ParabolicSet& j) {
    std::string s = "{";
    bool first = true;
    for (int i : j.indices()) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

inline int length(const Permutation& w) {
    int inv = 0;
    for (int p = 1; p <= w.size(); ++p)
        for (int q = p + 1; q <= w.size(); ++q)
            if (w(p) > w(q)) ++inv;
    return inv;
}

/// s_i * w: swaps the values i and i+1 in the one-line word.
inline Permutation left_multiply(int i, const Permutation& w) {
    if (i < 1 || i >= w.size()) throw std::invalid_argument("color out of range for left_multiply");
    Permutation r = w;
    for (auto& x : r.word_) {
        if (x == i)
            x = static_cast<std::uint8_t>(i + 1);
        else if (x == i + 1)
            x = static_cast<std::uint8_t>(i);
    }
    return r;
}

/// w * s_i: swaps the entries at positions i and i+1.
inline Permutation right_multiply(const Permutation& w, int i) {
    if (i < 1 || i >= w.size()) throw std::invalid_argument("color out of range for right_multiply");
    Permutation r = w;
    std::swap(r.word_[i - 1], r.word_[i]);
    return r;
}

namespace detail {

// Position-inversion relation: bit q of row p set iff p < q and w(p) > w(q).
using InversionRows = std::array<std::uint16_t, kMaxDegree + 1>;

inline InversionRows inversion_rows(const Permutation& w) {
    InversionRows rows{};
    for (int p = 1; p <= w.size(); ++p)
        for (int q = p + 1; q <= w.size(); ++q)
            if (w(p) > w(q)) rows[p] |= static_cast<std::uint16_t>(1u << q);
    return rows;
}

inline void check_same_degree(const Permutation& u, const Permutation& w) {
    if (u.size() != w.size()) throw std::invalid_argument("permutations of different degree");
}

// Lehmer decoding: entry p is the (c_p + 1)-th smallest unused value.
inline Permutation from_inversion_rows(const InversionRows& rows, int n) {
    std::vector<int> unused(n);
    for (int k = 0; k < n; ++k) unused[k] = k + 1;
    std::vector<int> word;
    for (int p = 1; p <= n; ++p) {
        const int c = std::popcount(static_cast<unsigned>(rows[p]));
        word.push_back(unused.at(c));
        unused.erase(unused.begin() + c);
    }
    return Permutation(word);
}

}  // namespace detail

/// Position pairs (p, q), p < q, with w(p) > w(q). The left weak order is
/// containment of these sets.
inline std::vector<std::pair<int, int>> inversion_set(const Permutation& w) {
    std::vector<std::pair<int, int>> out;
    for (int p = 1; p <= w.size(); ++p)
        for (int q = p + 1; q <= w.size(); ++q)
            if (w(p) > w(q)) out.emplace_back(p, q);
    return out;
}

inline bool left_weak_leq(const Permutation& u, const Permutation& w) {
    detail::check_same_degree(u, w);
    const auto iu = detail::inversion_rows(u);
    const auto iw = detail::inversion_rows(w);
    for (int p = 1; p <= u.size(); ++p)
        if ((iu[p] & ~iw[p]) != 0) return false;
    return true;
}

/// Ehresmann tableau criterion: sorted prefixes of u are entrywise <= those of w.
inline bool strong_bruhat_leq(const Permutation& u, const Permutation& w) {
    detail::check_same_degree(u, w);
    const int n = u.size();
    std::vector<int> pu, pw;
    for (int k = 1; k <= n; ++k) {
        pu.insert(std::upper_bound(pu.begin(), pu.end(), u(k)), u(k));
        pw.insert(std::upper_bound(pw.begin(), pw.end(), w(k)), w(k));
        for (int t = 0; t < k; ++t)
            if (pu[t] > pw[t]) return false;
    }
    return true;
}

/// Least upper bound in left weak order: union of inversion sets, closed
/// under transitivity until stable, then decoded back to a permutation.
inline Permutation left_weak_join(std::span<const Permutation> ws) {
    if (ws.empty()) throw std::invalid_argument("left_weak_join of an empty set");
    const int n = ws.front().size();
    detail::InversionRows rows{};
    for (const auto& w : ws) {
        detail::check_same_degree(ws.front(), w);
        const auto r = detail::inversion_rows(w);
        for (int p = 1; p <= n; ++p) rows[p] |= r[p];
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (int p = 1; p <= n; ++p) {
            std::uint16_t closed = rows[p];
            for (int q = p + 1; q <= n; ++q)
                if ((rows[p] >> q) & 1u) closed |= rows[q];
            if (closed != rows[p]) {
                rows[p] = closed;
                changed = true;
            }
        }
    }
    auto join = detail::from_inversion_rows(rows, n);
    if (detail::inversion_rows(join) != rows)
        throw InvariantViolation("transitive closure is not an inversion set");
    return join;
}

inline Permutation left_weak_join(std::initializer_list<Permutation> ws) {
    return left_weak_join(std::span<const Permutation>(ws.begin(), ws.size()));
}

/// w_o(J): reverses each maximal run of consecutive positions joined by J.
inline Permutation longest_parabolic(const ParabolicSet& j, int n) {
    if (n < 1 || n > kMaxDegree) throw std::invalid_argument("degree out of range");
    if (j.max_index() >= n) throw std::invalid_argument("parabolic index out of range for S_n");
    std::vector<int> word(n);
    int start = 1;
    while (start <= n) {
        int end = start;
        while (end < n && j.contains(end)) ++end;
        for (int p = start; p <= end; ++p) word[p - 1] = start + end - p;
        start = end + 1;
    }
    return Permutation(word);
}

/// Positions i with w(i) > w(i+1); equivalently the atoms s_i below w in left weak order.
inline ParabolicSet right_descents(const Permutation& w) {
    ParabolicSet d;
    for (int i = 1; i < w.size(); ++i)
        if (w(i) > w(i + 1)) d.insert(i);
    return d;
}

/// Values i with i+1 occurring before i; equivalently l(s_i w) < l(w).
inline ParabolicSet left_descents(const Permutation& w) {
    ParabolicSet d;
    for (int i = 1; i < w.size(); ++i)
        if (w.position_of(i + 1) < w.position_of(i)) d.insert(i);
    return d;
}

/// J with w = w_o(J), if any.
inline std::optional<ParabolicSet> classify_longest_parabolic(const Permutation& w) {
    const auto j = right_descents(w);
    if (longest_parabolic(j, w.size()) == w) return j;
    return std::nullopt;
}

/// All reduced words (i_1, ..., i_l) with s_{i_1} ... s_{i_l} = w, sorted.
inline std::vector<std::vector<int>> reduced_words(const Permutation& w) {
    if (length(w) == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int i : left_descents(w).indices()) {
        for (auto& tail : reduced_words(left_multiply(i, w))) {
            tail.insert(tail.begin(), i);
            out.push_back(std::move(tail));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Digits for n <= 9 ("2413"), comma-separated otherwise.
inline std::string to_string(const Permutation& w) {
    std::string s;
    for (int p = 1; p <= w.size(); ++p) {
        if (w.size() > 9 && p > 1) s += ',';
        s += std::to_string(w(p));
    }
    return s;
}

inline Permutation parse_permutation(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty permutation literal");
    std::vector<int> word;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find(',', start);
            if (end == std::string_view::npos) end = text.size();
            const auto tok = text.substr(start, end - start);
            if (tok.empty()) throw std::invalid_argument("empty entry in permutation literal");
            int value = 0;
            for (char c : tok) {
                if (c < '0' || c > '9') throw std::invalid_argument("bad permutation literal");
                value = value * 10 + (c - '0');
            }
            word.push_back(value);
            start = end + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad permutation literal");
            word.push_back(c - '0');
        }
    }
    return Permutation(word);
}

}  // namespace xtal
