#pragma once

// Graded-poset analytics over any crystal source: interval extraction by
// color budget, Moebius function, chain enumeration, Stembridge-move
// connectivity, minimal upper bounds and witnesses of non-local relations.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "xtal/crystal.hpp"
#include "xtal/detail/bitset.hpp"
#include "xtal/error.hpp"

namespace xtal {

using LocalId = std::uint32_t;
inline constexpr LocalId kNoLocal = static_cast<LocalId>(-1);

/// Cover structure of a closed interval, on local ids 0..size()-1. Ids are
/// rank-monotone; 0 is the bottom and size()-1 the top.
class IntervalGraph {
public:
    int colors() const { return colors_; }
    std::size_t size() const { return rank_.size(); }
    LocalId bottom() const { return 0; }
    LocalId top() const { return static_cast<LocalId>(size() - 1); }
    /// Rank relative to the bottom.
    int rank(LocalId k) const { return rank_[k]; }
    int span() const { return rank_.back(); }
    LocalId up(LocalId k, int i) const { return up_[slot(k, i)]; }
    LocalId down(LocalId k, int i) const { return down_[slot(k, i)]; }
    /// m_i: how many i-colored edges every maximal chain carries.
    const std::vector<int>& budget() const { return budget_; }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (LocalId k = 0; k < size(); ++k)
            for (int i = 1; i <= colors_; ++i)
                if (up(k, i) != kNoLocal) out.push_back({k, up(k, i), i});
        return out;
    }

    std::vector<std::size_t> rank_sizes() const {
        std::vector<std::size_t> out(span() + 1, 0);
        for (int r : rank_) ++out[r];
        return out;
    }

protected:
    std::size_t slot(LocalId k, int i) const {
        return static_cast<std::size_t>(k) * static_cast<std::size_t>(colors_) + static_cast<std::size_t>(i - 1);
    }

    int colors_ = 0;
    std::vector<int> rank_;
    std::vector<LocalId> up_;
    std::vector<LocalId> down_;
    std::vector<int> budget_;
};

template <class V>
class Interval : public IntervalGraph {
public:
    const V& vertex(LocalId k) const { return members_[k]; }
    const std::vector<V>& members() const { return members_; }
    std::optional<LocalId> local(const V& x) const {
        auto it = index_.find(x);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    template <CrystalSource S>
    friend std::optional<Interval<typename S::vertex_type>> extract_interval(const S&, const typename S::vertex_type&,
                                                                             const typename S::vertex_type&);

private:
    std::vector<V> members_;
    std::unordered_map<V, LocalId> index_;
};

namespace detail {

template <class C>
std::vector<int> to_vector(const C& c) {
    return std::vector<int>(c.begin(), c.end());
}

// Color budget m_j = sum_{k<=j} (c_k(u) - c_k(v)); absent if some m_j < 0.
template <CrystalSource S>
std::optional<std::vector<int>> color_budget(const S& src, const typename S::vertex_type& u,
                                             const typename S::vertex_type& v) {
    const auto cu = to_vector(src.content(u));
    const auto cv = to_vector(src.content(v));
    std::vector<int> m(src.colors());
    int partial = 0;
    for (int j = 0; j < src.colors(); ++j) {
        partial += cu[j] - cv[j];
        if (partial < 0) return std::nullopt;
        m[j] = partial;
    }
    if (partial + cu.back() - cv.back() != 0) return std::nullopt;
    return m;
}

// True iff z spends no more than the budget m from u, color by color.
template <CrystalSource S>
bool within_budget(const S& src, const std::vector<int>& cu, const std::vector<int>& m,
                   const typename S::vertex_type& z) {
    const auto& cz = src.content(z);
    int partial = 0;
    for (std::size_t j = 0; j < m.size(); ++j) {
        partial += cu[j] - cz[j];
        if (partial < 0 || partial > m[j]) return false;
    }
    return true;
}

}  // namespace detail

/// The closed interval [u, v], or nullopt if u is not below v. Upward BFS from
/// u and downward BFS from v, both confined to the color budget, intersected.
template <CrystalSource S>
std::optional<Interval<typename S::vertex_type>> extract_interval(const S& src, const typename S::vertex_type& u,
                                                                  const typename S::vertex_type& v) {
    using V = typename S::vertex_type;
    const auto m = detail::color_budget(src, u, v);
    if (!m) return std::nullopt;
    const auto cu = detail::to_vector(src.content(u));
    const int r = src.colors();

    std::vector<V> order{u};
    std::unordered_set<V> seen{u};
    for (std::size_t k = 0; k < order.size(); ++k) {
        for (int i = 1; i <= r; ++i) {
            auto w = src.f(order[k], i);
            if (w && detail::within_budget(src, cu, *m, *w) && seen.insert(*w).second) order.push_back(*w);
        }
    }
    if (!seen.count(v)) return std::nullopt;

    std::unordered_set<V> below{v};
    std::vector<V> stack{v};
    while (!stack.empty()) {
        const V x = stack.back();
        stack.pop_back();
        for (int i = 1; i <= r; ++i) {
            auto w = src.e(x, i);
            if (w && detail::within_budget(src, cu, *m, *w) && below.insert(*w).second) stack.push_back(*w);
        }
    }

    Interval<V> out;
    out.colors_ = r;
    out.budget_ = *m;
    const int base_rank = src.rank(u);
    for (const auto& x : order) {
        if (!below.count(x)) continue;
        out.index_.emplace(x, static_cast<LocalId>(out.members_.size()));
        out.members_.push_back(x);
        out.rank_.push_back(src.rank(x) - base_rank);
    }
    out.up_.assign(out.members_.size() * r, kNoLocal);
    out.down_.assign(out.members_.size() * r, kNoLocal);
    for (LocalId k = 0; k < out.members_.size(); ++k) {
        for (int i = 1; i <= r; ++i) {
            auto w = src.f(out.members_[k], i);
            if (!w) continue;
            if (auto t = out.local(*w)) {
                out.up_[out.slot(k, i)] = *t;
                out.down_[out.slot(*t, i)] = k;
            }
        }
    }
    if (out.members_.back() != v) throw InvariantViolation("interval top is not the last vertex in rank order");
    return out;
}

/// u <= v, by budgeted upward search only.
template <CrystalSource S>
bool leq(const S& src, const typename S::vertex_type& u, const typename S::vertex_type& v) {
    using V = typename S::vertex_type;
    if (u == v) return true;
    const auto m = detail::color_budget(src, u, v);
    if (!m) return false;
    const auto cu = detail::to_vector(src.content(u));
    const int target = src.rank(v);
    std::vector<V> frontier{u};
    std::unordered_set<V> seen{u};
    while (!frontier.empty()) {
        std::vector<V> next;
        for (const auto& x : frontier)
            for (int i = 1; i <= src.colors(); ++i) {
                auto w = src.f(x, i);
                if (!w || !detail::within_budget(src, cu, *m, *w) || !seen.insert(*w).second) continue;
                if (*w == v) return true;
                if (src.rank(*w) < target) next.push_back(*w);
            }
        frontier = std::move(next);
    }
    return false;
}

namespace detail {

// below[k] = strict down-set of k inside the interval.
inline std::vector<Bitset> strict_downsets(const IntervalGraph& I) {
    std::vector<Bitset> below(I.size(), Bitset(I.size()));
    for (LocalId k = 0; k < I.size(); ++k)
        for (int i = 1; i <= I.colors(); ++i) {
            const auto y = I.down(k, i);
            if (y == kNoLocal) continue;
            below[k] |= below[y];
            below[k].set(y);
        }
    return below;
}

}  // namespace detail

/// mu(bottom, z) for every z of the interval, by the defining recursion.
inline std::vector<std::int64_t> mobius_from_bottom(const IntervalGraph& I) {
    const auto below = detail::strict_downsets(I);
    std::vector<std::int64_t> mu(I.size(), 0);
    mu[0] = 1;
    for (LocalId z = 1; z < I.size(); ++z) {
        std::int64_t s = 0;
        below[z].for_each([&](std::size_t y) { s += mu[y]; });
        mu[z] = -s;
    }
    return mu;
}

/// Memo of mu(u, z), filled one whole interval at a time.
template <class V>
class MobiusCache {
public:
    std::optional<std::int64_t> get(const V& u, const V& v) const {
        auto it = table_.find(u);
        if (it == table_.end()) return std::nullopt;
        auto jt = it->second.find(v);
        if (jt == it->second.end()) return std::nullopt;
        return jt->second;
    }
    void put(const V& u, const V& v, std::int64_t value) { table_[u][v] = value; }
    std::size_t size() const {
        std::size_t s = 0;
        for (const auto& [u, row] : table_) s += row.size();
        return s;
    }

private:
    std::unordered_map<V, std::unordered_map<V, std::int64_t>> table_;
};

template <CrystalSource S>
std::int64_t mobius(const S& src, const typename S::vertex_type& u, const typename S::vertex_type& v,
                    MobiusCache<typename S::vertex_type>& cache) {
    if (auto hit = cache.get(u, v)) return *hit;
    auto I = extract_interval(src, u, v);
    if (!I) throw std::invalid_argument("mobius: u is not below v");
    const auto mu = mobius_from_bottom(*I);
    for (LocalId k = 0; k < I->size(); ++k) cache.put(u, I->vertex(k), mu[k]);
    return mu.back();
}

template <CrystalSource S>
std::int64_t mobius(const S& src, const typename S::vertex_type& u, const typename S::vertex_type& v) {
    MobiusCache<typename S::vertex_type> cache;
    return mobius(src, u, v, cache);
}

/// Reduced Euler characteristic of the order complex of the open interval,
/// from the number of k-element chains for each k.
inline std::int64_t euler_mobius(const IntervalGraph& I) {
    if (I.size() < 2) throw std::invalid_argument("euler_mobius needs an interval of positive rank");
    const auto below = detail::strict_downsets(I);
    const std::size_t n = I.size();
    auto add = [](std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r)) throw Error("chain count overflows 64 bits");
        return r;
    };
    // cur[z]: chains of the current cardinality inside (bottom, top) with maximum z.
    std::vector<std::int64_t> cur(n, 0);
    for (std::size_t z = 1; z + 1 < n; ++z) cur[z] = 1;
    std::int64_t chi = -1;
    for (int k = 1;; ++k) {
        std::int64_t count = 0;
        for (std::size_t z = 1; z + 1 < n; ++z) count = add(count, cur[z]);
        if (count == 0) break;
        chi = add(chi, (k % 2 == 1) ? count : -count);
        std::vector<std::int64_t> next(n, 0);
        for (std::size_t z = 1; z + 1 < n; ++z)
            below[z].for_each([&](std::size_t y) {
                if (y != 0) next[z] = add(next[z], cur[y]);
            });
        cur = std::move(next);
    }
    return chi;
}

struct SaturatedChain {
    std::vector<LocalId> vertices;
    std::vector<int> labels;
    friend bool operator==(const SaturatedChain&, const SaturatedChain&) = default;
};

inline constexpr std::size_t kDefaultChainCap = 10'000'000;

/// All maximal chains, depth first with colors tried in increasing order.
inline std::vector<SaturatedChain> saturated_chains(const IntervalGraph& I, std::size_t cap = kDefaultChainCap) {
    std::vector<SaturatedChain> out;
    SaturatedChain path{{0}, {}};
    std::vector<int> next_color{1};
    while (!path.vertices.empty()) {
        const LocalId x = path.vertices.back();
        if (x == I.top()) {
            if (out.size() >= cap)
                throw CapExceeded("saturated chains exceed the cap of " + std::to_string(cap));
            out.push_back(path);
            path.vertices.pop_back();
            next_color.pop_back();
            if (!path.labels.empty()) path.labels.pop_back();
            continue;
        }
        int& c = next_color.back();
        while (c <= I.colors() && I.up(x, c) == kNoLocal) ++c;
        if (c > I.colors()) {
            path.vertices.pop_back();
            next_color.pop_back();
            if (!path.labels.empty()) path.labels.pop_back();
            continue;
        }
        const int color = c++;
        path.vertices.push_back(I.up(x, color));
        path.labels.push_back(color);
        next_color.push_back(1);
    }
    return out;
}

/// True iff c is a maximal chain of I.
inline bool is_maximal_chain(const IntervalGraph& I, const SaturatedChain& c) {
    if (c.vertices.empty() || c.vertices.front() != I.bottom() || c.vertices.back() != I.top()) return false;
    if (c.labels.size() + 1 != c.vertices.size()) return false;
    for (std::size_t p = 0; p < c.labels.size(); ++p)
        if (c.labels[p] < 1 || c.labels[p] > I.colors() || I.up(c.vertices[p], c.labels[p]) != c.vertices[p + 1])
            return false;
    return true;
}

struct Move {
    std::size_t position = 0;  // index of the first replaced edge
    int length = 0;            // 2 or 4
    SaturatedChain result;
};

namespace detail {

inline std::optional<std::vector<LocalId>> walk(const IntervalGraph& I, LocalId from, std::initializer_list<int> colors) {
    std::vector<LocalId> out;
    for (int c : colors) {
        from = I.up(from, c);
        if (from == kNoLocal) return std::nullopt;
        out.push_back(from);
    }
    return out;
}

}  // namespace detail

/// Every chain one Stembridge move away from c: a segment labeled (b, a) is
/// replaced by (a, b), or (b, a, a, b) by (a, b, b, a), whenever the new
/// path exists and ends at the same vertex.
inline std::vector<Move> stembridge_moves(const SaturatedChain& c, const IntervalGraph& I) {
    std::vector<Move> out;
    const auto& z = c.vertices;
    const auto& l = c.labels;
    for (std::size_t p = 0; p + 1 < l.size(); ++p) {
        const int a = l[p], b = l[p + 1];
        if (a == b) continue;
        if (auto w = detail::walk(I, z[p], {b, a}); w && w->back() == z[p + 2]) {
            Move m{p, 2, c};
            m.result.vertices[p + 1] = (*w)[0];
            std::swap(m.result.labels[p], m.result.labels[p + 1]);
            out.push_back(std::move(m));
        }
        if (p + 3 < l.size() && l[p + 2] == b && l[p + 3] == a) {
            if (auto w = detail::walk(I, z[p], {b, a, a, b}); w && w->back() == z[p + 4]) {
                Move m{p, 4, c};
                for (int t = 0; t < 3; ++t) m.result.vertices[p + 1 + t] = (*w)[t];
                m.result.labels[p] = b;
                m.result.labels[p + 1] = a;
                m.result.labels[p + 2] = a;
                m.result.labels[p + 3] = b;
                out.push_back(std::move(m));
            }
        }
    }
    return out;
}

namespace detail {

struct SequenceHash {
    std::size_t operator()(const std::vector<LocalId>& s) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : s) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

}  // namespace detail

struct ChainComponents {
    std::vector<SaturatedChain> chains;
    /// Chain indices per component; each sorted, components ordered by first index.
    std::vector<std::vector<std::size_t>> components;

    std::size_t component_of(std::size_t chain) const {
        for (std::size_t k = 0; k < components.size(); ++k)
            if (std::binary_search(components[k].begin(), components[k].end(), chain)) return k;
        throw std::out_of_range("chain index out of range");
    }
    std::optional<std::size_t> index_of(const SaturatedChain& c) const {
        for (std::size_t k = 0; k < chains.size(); ++k)
            if (chains[k].vertices == c.vertices) return k;
        return std::nullopt;
    }
};

/// Connected components of the Stembridge-move graph on all maximal chains.
inline ChainComponents stembridge_components(const IntervalGraph& I, std::size_t cap = kDefaultChainCap) {
    ChainComponents out;
    out.chains = saturated_chains(I, cap);
    std::unordered_map<std::vector<LocalId>, std::size_t, detail::SequenceHash> index;
    index.reserve(out.chains.size());
    for (std::size_t k = 0; k < out.chains.size(); ++k) index.emplace(out.chains[k].vertices, k);
    detail::UnionFind uf(out.chains.size());
    for (std::size_t k = 0; k < out.chains.size(); ++k)
        for (const auto& m : stembridge_moves(out.chains[k], I)) {
            auto it = index.find(m.result.vertices);
            if (it == index.end()) throw InvariantViolation("move produced a chain outside the interval");
            uf.unite(k, it->second);
        }
    std::unordered_map<std::size_t, std::size_t> slot;
    for (std::size_t k = 0; k < out.chains.size(); ++k) {
        const auto root = uf.find(k);
        auto [it, fresh] = slot.emplace(root, out.components.size());
        if (fresh) out.components.emplace_back();
        out.components[it->second].push_back(k);
    }
    return out;
}

/// A shortest sequence of moves turning c1 into c2, or nullopt if the two
/// chains lie in different components.
inline std::optional<std::vector<Move>> find_move_path(const IntervalGraph& I, const SaturatedChain& c1,
                                                       const SaturatedChain& c2, std::size_t cap = kDefaultChainCap) {
    if (!is_maximal_chain(I, c1) || !is_maximal_chain(I, c2))
        throw std::invalid_argument("find_move_path: argument is not a maximal chain of the interval");
    struct Node {
        SaturatedChain chain;
        std::size_t parent;
        Move via;
    };
    std::vector<Node> nodes{{c1, 0, {}}};
    std::unordered_set<std::vector<LocalId>, detail::SequenceHash> seen{c1.vertices};
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (nodes[k].chain.vertices == c2.vertices) {
            std::vector<Move> path;
            for (std::size_t x = k; x != 0; x = nodes[x].parent) path.push_back(nodes[x].via);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (auto& m : stembridge_moves(nodes[k].chain, I)) {
            if (!seen.insert(m.result.vertices).second) continue;
            if (nodes.size() >= cap) throw CapExceeded("move search exceeds the cap of " + std::to_string(cap));
            auto next = m.result;
            nodes.push_back({std::move(next), k, std::move(m)});
        }
    }
    return std::nullopt;
}

namespace detail {

template <CrystalSource S>
std::vector<typename S::vertex_type> upset(const S& src, const typename S::vertex_type& a,
                                           std::optional<int> rank_limit) {
    using V = typename S::vertex_type;
    std::vector<V> order{a};
    std::unordered_set<V> seen{a};
    for (std::size_t k = 0; k < order.size(); ++k)
        for (int i = 1; i <= src.colors(); ++i) {
            auto w = src.f(order[k], i);
            if (!w || (rank_limit && src.rank(*w) > *rank_limit)) continue;
            if (seen.insert(*w).second) order.push_back(*w);
        }
    return order;
}

}  // namespace detail

/// Minimal elements of the common upper bounds of a and b, optionally only
/// among vertices of rank <= rank_limit. Returned in BFS order from a.
template <CrystalSource S>
std::vector<typename S::vertex_type> minimal_upper_bounds(const S& src, const typename S::vertex_type& a,
                                                          const typename S::vertex_type& b,
                                                          std::optional<int> rank_limit = std::nullopt) {
    using V = typename S::vertex_type;
    const auto ua = detail::upset(src, a, rank_limit);
    const auto ub = detail::upset(src, b, rank_limit);
    const std::unordered_set<V> in_b(ub.begin(), ub.end());
    std::unordered_set<V> common;
    for (const auto& x : ua)
        if (in_b.count(x)) common.insert(x);
    std::vector<V> out;
    for (const auto& x : ua) {
        if (!common.count(x)) continue;
        bool minimal = true;
        for (int i = 1; i <= src.colors() && minimal; ++i)
            if (auto y = src.e(x, i); y && common.count(*y)) minimal = false;
        if (minimal) out.push_back(x);
    }
    return out;
}

/// Minimal common upper bounds of two elements, computed inside I only.
inline std::vector<LocalId> interval_minimal_upper_bounds(const IntervalGraph& I, LocalId a, LocalId b) {
    auto reach = [&](LocalId s) {
        std::vector<char> mark(I.size(), 0);
        mark[s] = 1;
        for (LocalId k = s; k < I.size(); ++k) {  // ids are rank-monotone
            if (!mark[k]) continue;
            for (int i = 1; i <= I.colors(); ++i)
                if (I.up(k, i) != kNoLocal) mark[I.up(k, i)] = 1;
        }
        return mark;
    };
    const auto ma = reach(a), mb = reach(b);
    std::vector<LocalId> out;
    for (LocalId k = 0; k < I.size(); ++k) {
        if (!ma[k] || !mb[k]) continue;
        bool minimal = true;
        for (int i = 1; i <= I.colors() && minimal; ++i) {
            const auto y = I.down(k, i);
            if (y != kNoLocal && ma[y] && mb[y]) minimal = false;
        }
        if (minimal) out.push_back(k);
    }
    return out;
}

enum class WitnessKind {
    /// The two covers have several minimal upper bounds inside the interval.
    NoUniqueBoundInInterval,
    /// Their least upper bound inside the interval exists but is not the
    /// Stembridge local bound, so the crystal has two minimal upper bounds.
    NonLocalLeastBound,
};

inline const char* to_string(WitnessKind k) {
    return k == WitnessKind::NoUniqueBoundInInterval ? "no-unique-bound-in-interval" : "non-local-least-bound";
}

template <class V>
struct StembridgeWitness {
    WitnessKind kind{};
    V base{};
    V cover_i{};
    V cover_j{};
    int i = 0;
    int j = 0;
    std::vector<V> interval_bounds;
    V local_bound{};
    bool local_degree4 = false;
    std::vector<V> crystal_bounds;
};

/// Searches I for an element with two covers in I whose least upper bound
/// is not the one forced by the Stembridge local relations. The first hit in
/// (element, color pair) order is returned.
template <CrystalSource S>
std::optional<StembridgeWitness<typename S::vertex_type>> non_stembridge_witness(
    const S& src, const Interval<typename S::vertex_type>& I) {
    using V = typename S::vertex_type;
    for (LocalId k = 0; k < I.size(); ++k) {
        for (int i = 1; i <= I.colors(); ++i) {
            const auto a1 = I.up(k, i);
            if (a1 == kNoLocal) continue;
            for (int j = i + 1; j <= I.colors(); ++j) {
                const auto a2 = I.up(k, j);
                if (a2 == kNoLocal) continue;
                const auto bounds = interval_minimal_upper_bounds(I, a1, a2);
                const auto local = local_structure(src, I.vertex(k), i, j);
                StembridgeWitness<V> w;
                w.base = I.vertex(k);
                w.cover_i = I.vertex(a1);
                w.cover_j = I.vertex(a2);
                w.i = i;
                w.j = j;
                for (auto b : bounds) w.interval_bounds.push_back(I.vertex(b));
                w.local_bound = local.top;
                w.local_degree4 = local.degree4;
                if (bounds.size() != 1) {
                    w.kind = WitnessKind::NoUniqueBoundInInterval;
                    return w;
                }
                if (!(I.vertex(bounds.front()) == local.top)) {
                    w.kind = WitnessKind::NonLocalLeastBound;
                    const int limit = std::max(src.rank(w.interval_bounds.front()), src.rank(local.top));
                    w.crystal_bounds = minimal_upper_bounds(src, w.cover_i, w.cover_j, limit);
                    return w;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace xtal
