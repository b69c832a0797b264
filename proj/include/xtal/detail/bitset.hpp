#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace xtal::detail {

// Fixed-width dynamic bitset; just enough for down-set bookkeeping.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : words_((bits + 63) / 64, 0) {}

    void set(std::size_t k) { words_[k >> 6] |= std::uint64_t{1} << (k & 63); }
    bool test(std::size_t k) const { return (words_[k >> 6] >> (k & 63)) & 1u; }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
        return *this;
    }

    template <class F>
    void for_each(F&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1)
                fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        }
    }

private:
    std::vector<std::uint64_t> words_;
};

// Disjoint-set forest with path halving.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        for (std::size_t k = 0; k < n; ++k) parent_[k] = k;
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;  // smaller index becomes the root
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace xtal::detail
