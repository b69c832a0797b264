#pragma once

// The key map computed from the crystal graph alone, its axioms, fibers,
// Demazure subsets and fiber minima.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xtal/crystal.hpp"
#include "xtal/detail/bitset.hpp"
#include "xtal/poset.hpp"
#include "xtal/weyl.hpp"

namespace xtal {

/// kappa(b) for every vertex of one crystal.
class KeyTable {
public:
    KeyTable() = default;
    explicit KeyTable(std::vector<Permutation> keys) : keys_(std::move(keys)) {}
    const Permutation& operator[](VertexId v) const { return keys_.at(v); }
    Permutation& operator[](VertexId v) { return keys_.at(v); }
    std::size_t size() const { return keys_.size(); }
    const std::vector<Permutation>& keys() const { return keys_; }
    friend bool operator==(const KeyTable&, const KeyTable&) = default;

private:
    std::vector<Permutation> keys_;
};

/// Vertices sorted by rank, ties broken by id.
template <FiniteCrystal G>
std::vector<VertexId> rank_order(const G& g) {
    std::vector<VertexId> order(g.size());
    for (VertexId v = 0; v < order.size(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return g.rank(a) < g.rank(b); });
    return order;
}

/// Keys by the five rank-order rules, visiting vertices in the given order,
/// which must be rank-monotone.
template <FiniteCrystal G>
KeyTable compute_keys(const G& g, const std::vector<VertexId>& order) {
    const int n = g.colors() + 1;
    if (order.size() != g.size()) throw std::invalid_argument("order must list every vertex once");
    std::vector<char> done(g.size(), 0);
    for (std::size_t k = 1; k < order.size(); ++k)
        if (g.rank(order[k - 1]) > g.rank(order[k])) throw std::invalid_argument("order is not rank-monotone");

    std::vector<Permutation> keys(g.size());
    for (VertexId v : order) {
        if (v >= g.size() || done[v]) throw std::invalid_argument("order must list every vertex once");
        done[v] = 1;
        if (v == g.bottom()) {
            keys[v] = Permutation::identity(n);
            continue;
        }
        std::vector<std::pair<VertexId, int>> lower;
        for (int i = 1; i <= g.colors(); ++i)
            if (auto u = g.e(v, i)) lower.emplace_back(*u, i);
        if (lower.empty()) throw InvariantViolation("vertex other than the minimum has no lower cover");
        if (lower.size() >= 2) {
            std::vector<Permutation> below;
            for (auto [u, i] : lower) below.push_back(keys[u]);
            keys[v] = left_weak_join(below);
            continue;
        }
        const auto [u, i] = lower.front();
        if (u == g.bottom())
            keys[v] = Permutation::simple_reflection(i, n);
        else if (g.e(u, i))
            keys[v] = keys[u];
        else
            keys[v] = left_multiply(i, keys[u]);
    }
    return KeyTable(std::move(keys));
}

template <FiniteCrystal G>
KeyTable compute_keys(const G& g) {
    return compute_keys(g, rank_order(g));
}

/// K = { k : lambda_k = lambda_{k+1} }, lambda padded with zeros to length n.
inline ParabolicSet stabilizer_indices(const Shape& shape, int n) {
    const auto p = shape.padded(n);
    ParabolicSet k;
    for (int i = 1; i < n; ++i)
        if (p[i - 1] == p[i]) k.insert(i);
    return k;
}

/// The same set read off the graph: colors with no edge out of the minimum.
template <FiniteCrystal G>
ParabolicSet stabilizer_indices(const G& g) {
    ParabolicSet k;
    for (int i = 1; i <= g.colors(); ++i)
        if (!g.f(g.bottom(), i)) k.insert(i);
    return k;
}

struct KeyViolation {
    VertexId vertex = 0;
    int color = 0;
    std::string rule;
    std::string detail;
};

struct KeyReport {
    bool passed = true;
    std::optional<KeyViolation> violation;
};

/// firstkey: e_p(b) absent implies l(s_p kappa(b)) > l(kappa(b)).
/// changekey: kappa(f_p b) is kappa(b), or s_p kappa(b) when b starts its p-string.
/// Also kappa(bottom) = id, kappa monotone in left weak order, and kappa(b)
/// a lowest coset representative mod W_K.
template <FiniteCrystal G>
KeyReport check_key_axioms(const G& g, const KeyTable& keys) {
    auto fail = [](VertexId v, int p, std::string rule, std::string detail) {
        return KeyReport{false, KeyViolation{v, p, std::move(rule), std::move(detail)}};
    };
    if (keys.size() != g.size()) return fail(0, 0, "size", "key table does not match the graph");
    if (!keys[g.bottom()].is_identity()) return fail(g.bottom(), 0, "bottom", "key of the minimum is not the identity");
    const auto stab = stabilizer_indices(g);
    for (VertexId b = 0; b < g.size(); ++b) {
        const auto& kb = keys[b];
        const int lk = length(kb);
        for (int k : stab.indices())
            if (length(right_multiply(kb, k)) < lk) return fail(b, k, "coset", "key is not a lowest coset representative");
        for (int p = 1; p <= g.colors(); ++p) {
            const bool string_bottom = !g.e(b, p);
            if (string_bottom && length(left_multiply(p, kb)) <= lk)
                return fail(b, p, "firstkey", "s_p kappa(b) is not longer than kappa(b)");
            const auto up = g.f(b, p);
            if (!up) continue;
            const auto& ku = keys[*up];
            if (ku != kb) {
                if (ku != left_multiply(p, kb))
                    return fail(b, p, "changekey", "key of f_p(b) is neither kappa(b) nor s_p kappa(b)");
                if (!string_bottom) return fail(b, p, "changekey", "key changes away from a string bottom");
            }
            if (!left_weak_leq(kb, ku)) return fail(b, p, "monotone", "key decreases along an edge");
        }
    }
    return {};
}

/// Greedy e-strings along every reduced word of kappa(b) end at the minimum.
template <FiniteCrystal G>
bool adapted_string_check(const G& g, const KeyTable& keys, VertexId b) {
    for (const auto& word : reduced_words(keys[b])) {
        VertexId x = b;
        for (int i : word)
            while (auto y = g.e(x, i)) x = *y;
        if (x != g.bottom()) return false;
    }
    return true;
}

struct Fiber {
    Permutation key;
    std::vector<VertexId> elements;
    /// Covers of the induced order; color 0 when the cover is not a crystal edge.
    std::vector<Edge> covers;
    /// Comparability components, each sorted, ordered by first element.
    std::vector<std::vector<VertexId>> components;
};

template <FiniteCrystal G>
Fiber fiber(const G& g, const KeyTable& keys, const Permutation& w) {
    Fiber out;
    out.key = w;
    for (VertexId v = 0; v < g.size(); ++v)
        if (keys[v] == w) out.elements.push_back(v);
    const auto m = out.elements.size();
    std::vector<std::vector<char>> less(m, std::vector<char>(m, 0));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (a != b && g.rank(out.elements[a]) < g.rank(out.elements[b]))
                less[a][b] = leq(g, out.elements[a], out.elements[b]);
    detail::UnionFind uf(m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (!less[a][b]) continue;
            uf.unite(a, b);
            bool cover = true;
            for (std::size_t c = 0; c < m && cover; ++c)
                if (less[a][c] && less[c][b]) cover = false;
            if (!cover) continue;
            int color = 0;
            for (int i = 1; i <= g.colors(); ++i)
                if (g.f(out.elements[a], i) == std::optional<VertexId>(out.elements[b])) color = i;
            out.covers.push_back({out.elements[a], out.elements[b], color});
        }
    std::map<std::size_t, std::size_t> slot;
    for (std::size_t a = 0; a < m; ++a) {
        auto [it, fresh] = slot.emplace(uf.find(a), out.components.size());
        if (fresh) out.components.emplace_back();
        out.components[it->second].push_back(out.elements[a]);
    }
    return out;
}

/// (minimum, maximum) of the fiber at w_o(J), or nullopt if it is empty.
/// Throws InvariantViolation if either extreme is not unique.
template <FiniteCrystal G>
std::optional<std::pair<VertexId, VertexId>> fiber_extremes(const G& g, const KeyTable& keys, const ParabolicSet& j) {
    const auto f = fiber(g, keys, longest_parabolic(j, g.colors() + 1));
    if (f.elements.empty()) return std::nullopt;
    std::vector<VertexId> minima, maxima;
    for (auto x : f.elements) {
        bool has_below = false, has_above = false;
        for (auto y : f.elements) {
            if (x == y) continue;
            if (g.rank(y) < g.rank(x) && leq(g, y, x)) has_below = true;
            if (g.rank(y) > g.rank(x) && leq(g, x, y)) has_above = true;
        }
        if (!has_below) minima.push_back(x);
        if (!has_above) maxima.push_back(x);
    }
    if (minima.size() != 1 || maxima.size() != 1)
        throw InvariantViolation("fiber at w_o(" + to_string(j) + ") lacks a unique minimum or maximum");
    return std::make_pair(minima.front(), maxima.front());
}

/// { b : kappa(b) <= w in strong Bruhat order }.
template <FiniteCrystal G>
std::vector<VertexId> demazure(const G& g, const KeyTable& keys, const Permutation& w) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.size(); ++v)
        if (strong_bruhat_leq(keys[v], w)) out.push_back(v);
    return out;
}

/// J -> minimum of the fiber at w_o(J), for every J with a nonempty fiber.
template <FiniteCrystal G>
std::map<ParabolicSet, VertexId> minimal_fiber_elements(const G& g, const KeyTable& keys) {
    std::map<ParabolicSet, VertexId> out;
    for (const auto& j : all_parabolic_sets(g.colors() + 1))
        if (auto ext = fiber_extremes(g, keys, j)) out.emplace(j, ext->first);
    return out;
}

}  // namespace xtal
