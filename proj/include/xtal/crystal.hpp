#pragma once

// Explicit crystal graphs B(lambda), the reversed (dual) view, an implicit
// tableau crystal for intervals too large to generate whole, string
// statistics and the P1-P6 axiom checker.

#include <concepts>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "xtal/error.hpp"
#include "xtal/tableau.hpp"

namespace xtal {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

struct Edge {
    VertexId source = 0;
    VertexId target = 0;
    int color = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Plain vertex/edge lists, as exported and imported.
struct CrystalData {
    Shape shape;
    int n = 0;
    std::vector<Tableau> vertices;
    std::vector<Edge> edges;
};

/// Anything that can answer f_i, e_i, content and rank for its vertices.
template <class S>
concept CrystalSource = requires(const S& s, const typename S::vertex_type& v, int i) {
    typename S::vertex_type;
    { s.colors() } -> std::convertible_to<int>;
    { s.f(v, i) } -> std::same_as<std::optional<typename S::vertex_type>>;
    { s.e(v, i) } -> std::same_as<std::optional<typename S::vertex_type>>;
    { s.content(v)[0] } -> std::convertible_to<int>;
    { s.rank(v) } -> std::convertible_to<int>;
    { s.bottom() } -> std::convertible_to<typename S::vertex_type>;
};

/// A crystal with vertices 0..size()-1 and a known maximum.
template <class S>
concept FiniteCrystal = CrystalSource<S> && std::same_as<typename S::vertex_type, VertexId> &&
                        requires(const S& s) {
                            { s.size() } -> std::convertible_to<std::size_t>;
                            { s.top() } -> std::convertible_to<VertexId>;
                            { s.max_rank() } -> std::convertible_to<int>;
                        };

class CrystalGraph {
public:
    using vertex_type = VertexId;

    int n() const { return n_; }
    int colors() const { return n_ - 1; }
    const Shape& shape() const { return shape_; }
    std::size_t size() const { return tableaux_.size(); }
    VertexId bottom() const { return bottom_; }
    VertexId top() const { return top_; }
    int max_rank() const { return max_rank_; }

    std::optional<VertexId> f(VertexId v, int i) const { return wrap(up_[slot(v, i)]); }
    std::optional<VertexId> e(VertexId v, int i) const { return wrap(down_[slot(v, i)]); }
    /// Raw adjacency, kNoVertex when absent.
    VertexId up(VertexId v, int i) const { return up_[slot(v, i)]; }
    VertexId down(VertexId v, int i) const { return down_[slot(v, i)]; }

    int rank(VertexId v) const { return rank_[v]; }
    std::span<const int> content(VertexId v) const {
        return {content_.data() + static_cast<std::size_t>(v) * n_, static_cast<std::size_t>(n_)};
    }
    const Tableau& tableau(VertexId v) const { return tableaux_[v]; }
    std::optional<VertexId> find(const Tableau& t) const {
        auto it = index_.find(t);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    /// Edges in generation order.
    const std::vector<Edge>& edges() const { return edges_; }

    CrystalData to_data() const { return {shape_, n_, tableaux_, edges_}; }

    /// Rebuilds a graph from vertex and edge lists. Throws InvariantViolation if
    /// a vertex has two edges of one color in the same direction, if there is
    /// not exactly one source and one sink, or if edges do not raise rank by one.
    static CrystalGraph from_data(const CrystalData& data) {
        CrystalGraph g;
        g.shape_ = data.shape;
        g.n_ = data.n;
        if (g.n_ < 1) throw std::invalid_argument("alphabet size must be positive");
        const auto nv = data.vertices.size();
        if (nv == 0) throw std::invalid_argument("crystal has no vertices");
        for (const auto& t : data.vertices) g.add_vertex(t);
        if (g.index_.size() != nv) throw InvariantViolation("duplicate vertex in crystal data");
        for (const auto& e : data.edges) {
            if (e.source >= nv || e.target >= nv || e.color < 1 || e.color >= g.n_)
                throw std::invalid_argument("edge out of range");
            g.link(e.source, e.target, e.color);
        }
        std::vector<VertexId> sources, sinks;
        for (VertexId v = 0; v < nv; ++v) {
            bool has_in = false, has_out = false;
            for (int i = 1; i < g.n_; ++i) {
                has_in = has_in || g.down(v, i) != kNoVertex;
                has_out = has_out || g.up(v, i) != kNoVertex;
            }
            if (!has_in) sources.push_back(v);
            if (!has_out) sinks.push_back(v);
        }
        if (sources.size() != 1 || sinks.size() != 1)
            throw InvariantViolation("crystal must have exactly one minimum and one maximum");
        g.bottom_ = sources.front();
        g.top_ = sinks.front();
        g.assign_ranks();
        return g;
    }

    friend CrystalGraph generate(const Shape& shape, int n, std::size_t cap);

private:
    static std::optional<VertexId> wrap(VertexId v) {
        if (v == kNoVertex) return std::nullopt;
        return v;
    }
    std::size_t slot(VertexId v, int i) const {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(n_ - 1) + static_cast<std::size_t>(i - 1);
    }

    VertexId add_vertex(const Tableau& t) {
        const auto id = static_cast<VertexId>(tableaux_.size());
        index_.emplace(t, id);
        tableaux_.push_back(t);
        auto w = weight(t, n_);
        content_.insert(content_.end(), w.content.begin(), w.content.end());
        up_.resize(up_.size() + (n_ - 1), kNoVertex);
        down_.resize(down_.size() + (n_ - 1), kNoVertex);
        rank_.push_back(-1);
        return id;
    }

    void link(VertexId s, VertexId t, int i) {
        auto& out = up_[slot(s, i)];
        auto& in = down_[slot(t, i)];
        if (out != kNoVertex || in != kNoVertex)
            throw InvariantViolation("two edges of color " + std::to_string(i) + " at one vertex");
        out = t;
        in = s;
        edges_.push_back({s, t, i});
    }

    // Ranks by BFS from the bottom; every edge must then raise rank by exactly one.
    void assign_ranks() {
        std::deque<VertexId> queue{bottom_};
        rank_.assign(size(), -1);
        rank_[bottom_] = 0;
        while (!queue.empty()) {
            const auto v = queue.front();
            queue.pop_front();
            for (int i = 1; i < n_; ++i) {
                const auto w = up(v, i);
                if (w != kNoVertex && rank_[w] < 0) {
                    rank_[w] = rank_[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        max_rank_ = 0;
        for (VertexId v = 0; v < size(); ++v) {
            if (rank_[v] < 0) throw InvariantViolation("vertex unreachable from the minimum");
            max_rank_ = std::max(max_rank_, rank_[v]);
        }
        for (const auto& e : edges_)
            if (rank_[e.target] != rank_[e.source] + 1)
                throw InvariantViolation("edge does not raise rank by one");
        if (rank_[top_] != max_rank_) throw InvariantViolation("maximum is not of top rank");
    }

    Shape shape_;
    int n_ = 0;
    std::vector<Tableau> tableaux_;
    std::unordered_map<Tableau, VertexId> index_;
    std::vector<int> content_;
    std::vector<VertexId> up_;
    std::vector<VertexId> down_;
    std::vector<int> rank_;
    std::vector<Edge> edges_;
    VertexId bottom_ = 0;
    VertexId top_ = 0;
    int max_rank_ = 0;
};

inline constexpr std::size_t kDefaultVertexCap = 2'000'000;

/// Breadth-first closure of the highest tableau under all f_i, colors tried
/// in increasing order. Vertex ids follow discovery order.
inline CrystalGraph generate(const Shape& shape, int n, std::size_t cap = kDefaultVertexCap) {
    if (n < 1 || n > 255) throw std::invalid_argument("alphabet size out of range");
    CrystalGraph g;
    g.shape_ = shape;
    g.n_ = n;
    g.bottom_ = g.add_vertex(highest(shape, n));
    g.rank_[0] = 0;
    for (VertexId v = 0; v < g.size(); ++v) {
        for (int i = 1; i < n; ++i) {
            auto next = apply_f(g.tableaux_[v], i);
            if (!next) continue;
            if (!next->is_semistandard()) throw InvariantViolation("f_i produced a non-semistandard filling");
            VertexId w;
            if (auto found = g.find(*next)) {
                w = *found;
            } else {
                if (g.size() >= cap)
                    throw CapExceeded("crystal exceeds the vertex cap of " + std::to_string(cap));
                w = g.add_vertex(*next);
                g.rank_[w] = g.rank_[v] + 1;
            }
            if (g.rank_[w] != g.rank_[v] + 1) throw InvariantViolation("generated edge does not raise rank by one");
            g.link(v, w, i);
        }
    }
    g.max_rank_ = 0;
    for (VertexId v = 0; v < g.size(); ++v) {
        g.max_rank_ = std::max(g.max_rank_, g.rank_[v]);
        bool sink = true;
        for (int i = 1; i < n && sink; ++i) sink = g.up(v, i) == kNoVertex;
        if (sink) g.top_ = v;
    }
    return g;
}

/// The dual poset of a finite crystal: edges reversed and colors relabeled
/// i -> r+1-i (r = number of colors), content reversed. In type A this is
/// again the crystal B(lambda), so every crystal algorithm applies to it.
template <FiniteCrystal G>
class ReversedView {
public:
    using vertex_type = VertexId;

    explicit ReversedView(const G& base) : base_(&base) {}

    int colors() const { return base_->colors(); }
    std::size_t size() const { return base_->size(); }
    VertexId bottom() const { return base_->top(); }
    VertexId top() const { return base_->bottom(); }
    int max_rank() const { return base_->max_rank(); }
    int rank(VertexId v) const { return base_->max_rank() - base_->rank(v); }
    std::optional<VertexId> f(VertexId v, int i) const { return base_->e(v, colors() + 1 - i); }
    std::optional<VertexId> e(VertexId v, int i) const { return base_->f(v, colors() + 1 - i); }
    std::vector<int> content(VertexId v) const {
        const auto c = base_->content(v);
        return std::vector<int>(c.rbegin(), c.rend());
    }
    const G& base() const { return *base_; }

private:
    const G* base_;
};

/// B(lambda) without materializing it: vertices are tableaux and the rank is
/// read off the content.
class TableauCrystal {
public:
    using vertex_type = Tableau;

    TableauCrystal(Shape shape, int n) : shape_(std::move(shape)), n_(n), lambda_(shape_.padded(n)) {
        if (shape_.rows() > n) throw std::invalid_argument("shape has more rows than the alphabet size");
    }

    int colors() const { return n_ - 1; }
    int n() const { return n_; }
    const Shape& shape() const { return shape_; }
    Tableau bottom() const { return highest(shape_, n_); }
    std::optional<Tableau> f(const Tableau& t, int i) const { return apply_f(t, i); }
    std::optional<Tableau> e(const Tableau& t, int i) const { return apply_e(t, i); }
    std::vector<int> content(const Tableau& t) const { return weight(t, n_).content; }

    /// Sum over j < n of sum_{k <= j} (lambda_k - c_k(T)).
    int rank(const Tableau& t) const {
        const auto c = content(t);
        int r = 0, partial = 0;
        for (int j = 0; j + 1 < n_; ++j) {
            partial += lambda_[j] - c[j];
            r += partial;
        }
        return r;
    }

private:
    Shape shape_;
    int n_;
    std::vector<int> lambda_;
};

struct StringStats {
    int rise = 0;   // epsilon(b, i) >= 0
    int depth = 0;  // delta(b, i) <= 0
};

template <CrystalSource S>
StringStats string_stats(const S& src, const typename S::vertex_type& b, int i) {
    StringStats s;
    for (auto x = src.f(b, i); x; x = src.f(*x, i)) ++s.rise;
    for (auto x = src.e(b, i); x; x = src.e(*x, i)) --s.depth;
    return s;
}

struct AxiomViolation {
    VertexId vertex = 0;
    int i = 0;
    int j = 0;
    std::string axiom;
    std::string detail;
};

struct AxiomReport {
    bool passed = true;
    std::optional<AxiomViolation> violation;
};

namespace detail {

template <FiniteCrystal G>
std::optional<VertexId> compose_e(const G& g, std::optional<VertexId> b, std::initializer_list<int> colors_right_to_left) {
    // Applies the operators right to left, as in e_i e_j (b) = e_i(e_j(b)).
    std::vector<int> seq(colors_right_to_left);
    for (auto it = seq.rbegin(); it != seq.rend() && b; ++it) b = g.e(*b, *it);
    return b;
}

}  // namespace detail

/// Checks P1-P6 at every vertex and color pair, using string walks only.
template <FiniteCrystal G>
AxiomReport check_stembridge_axioms(const G& g) {
    const int r = g.colors();
    const auto nv = static_cast<VertexId>(g.size());
    auto fail = [](VertexId v, int i, int j, std::string ax, std::string detail) {
        return AxiomReport{false, AxiomViolation{v, i, j, std::move(ax), std::move(detail)}};
    };

    // P1, together with rank consistency: f_i strings never revisit a vertex.
    for (VertexId v = 0; v < nv; ++v) {
        for (int i = 1; i <= r; ++i) {
            if (auto w = g.f(v, i)) {
                if (g.rank(*w) != g.rank(v) + 1) return fail(v, i, i, "rank", "edge does not raise rank by one");
                if (g.e(*w, i) != std::optional<VertexId>(v))
                    return fail(v, i, i, "P2", "e_i is not inverse to f_i");
            }
            std::size_t steps = 0;
            for (auto x = g.f(v, i); x; x = g.f(*x, i))
                if (++steps > g.size()) return fail(v, i, i, "P1", "monochromatic circuit");
        }
    }

    std::vector<StringStats> stats(static_cast<std::size_t>(nv) * r);
    for (VertexId v = 0; v < nv; ++v)
        for (int i = 1; i <= r; ++i) stats[static_cast<std::size_t>(v) * r + (i - 1)] = string_stats(g, v, i);
    auto st = [&](VertexId v, int i) { return stats[static_cast<std::size_t>(v) * r + (i - 1)]; };

    for (VertexId b = 0; b < nv; ++b) {
        for (int i = 1; i <= r; ++i) {
            const auto bi = g.e(b, i);
            if (!bi) continue;
            for (int j = 1; j <= r; ++j) {
                const int dd = st(*bi, j).depth - st(b, j).depth;
                const int de = st(*bi, j).rise - st(b, j).rise;
                if (dd + de != cartan(i, j))
                    return fail(b, i, j, "P3", "Delta delta + Delta epsilon = " + std::to_string(dd + de));
                if (i != j && (dd > 0 || de > 0)) return fail(b, i, j, "P4", "positive Delta");
                if (i == j || !g.e(b, j)) continue;

                if (dd == 0) {
                    const auto x = detail::compose_e(g, b, {i, j});
                    const auto y = detail::compose_e(g, b, {j, i});
                    if (!x || x != y) return fail(b, i, j, "P5", "e_i e_j(b) != e_j e_i(b)");
                    const auto fx = g.f(*x, j);
                    if (!fx || st(*x, i).rise - st(*fx, i).rise != 0)
                        return fail(b, i, j, "P5", "nabla_j epsilon(b', i) != 0");
                }
                const auto bj = g.e(b, j);
                const int dd_ji = st(*bj, i).depth - st(b, i).depth;
                if (dd == -1 && dd_ji == -1) {
                    const auto x = detail::compose_e(g, b, {i, j, j, i});
                    const auto y = detail::compose_e(g, b, {j, i, i, j});
                    if (!x || x != y) return fail(b, i, j, "P6", "e_i e_j^2 e_i(b) != e_j e_i^2 e_j(b)");
                    const auto fi = g.f(*x, i);
                    const auto fj = g.f(*x, j);
                    if (!fi || !fj || st(*x, j).rise - st(*fi, j).rise != -1 ||
                        st(*x, i).rise - st(*fj, i).rise != -1)
                        return fail(b, i, j, "P6", "nabla epsilon at b' != -1");
                }
            }
        }
    }
    return {};
}

/// Axiom check on raw data: P2 and rank structure are checked on the edge
/// list first, since a graph violating them cannot be built.
inline AxiomReport check_stembridge_axioms(const CrystalData& data) {
    const auto nv = data.vertices.size();
    std::unordered_map<std::uint64_t, VertexId> out, in;
    for (const auto& e : data.edges) {
        if (e.source >= nv || e.target >= nv || e.color < 1 || e.color >= data.n)
            return {false, AxiomViolation{e.source, e.color, e.color, "range", "edge out of range"}};
        const auto ko = (static_cast<std::uint64_t>(e.source) << 8) | static_cast<std::uint64_t>(e.color);
        const auto ki = (static_cast<std::uint64_t>(e.target) << 8) | static_cast<std::uint64_t>(e.color);
        if (!out.emplace(ko, e.target).second)
            return {false, AxiomViolation{e.source, e.color, e.color, "P2", "two outgoing edges of one color"}};
        if (!in.emplace(ki, e.source).second)
            return {false, AxiomViolation{e.target, e.color, e.color, "P2", "two incoming edges of one color"}};
    }
    try {
        return check_stembridge_axioms(CrystalGraph::from_data(data));
    } catch (const InvariantViolation& ex) {
        return {false, AxiomViolation{0, 0, 0, "rank", ex.what()}};
    }
}

/// Local closing structure of the two covers f_i(u) and f_j(u).
template <class Src>
struct LocalStructure {
    using V = typename Src::vertex_type;
    bool degree4 = false;
    V top{};
    std::vector<V> path_i;  // u, f_i u, ..., top
    std::vector<V> path_j;  // u, f_j u, ..., top
};

namespace detail {

// Vertices reachable from start using only colors i and j, at most `steps` edges.
template <CrystalSource S>
std::vector<typename S::vertex_type> restricted_upset(const S& src, const typename S::vertex_type& start, int i, int j,
                                                      int steps) {
    std::vector<typename S::vertex_type> frontier{start}, all{start};
    for (int s = 0; s < steps; ++s) {
        std::vector<typename S::vertex_type> next;
        for (const auto& x : frontier)
            for (int c : {i, j})
                if (auto y = src.f(x, c)) {
                    if (std::find(next.begin(), next.end(), *y) == next.end()) next.push_back(*y);
                }
        for (const auto& y : next) all.push_back(y);
        frontier = std::move(next);
    }
    return all;
}

}  // namespace detail

/// Degree2 if f_j f_i u = f_i f_j u; Degree4 if f_i f_j^2 f_i u = f_j f_i^2 f_j u and
/// f_i u, f_j u have no {i,j}-colored common upper bound below that rank.
/// Throws InvariantViolation when neither holds.
template <CrystalSource S>
LocalStructure<S> local_structure(const S& src, const typename S::vertex_type& u, int i, int j) {
    if (i == j) throw std::invalid_argument("local_structure needs two distinct colors");
    const auto v = src.f(u, i);
    const auto w = src.f(u, j);
    if (!v || !w) throw std::invalid_argument("u lacks an outgoing edge of a requested color");
    LocalStructure<S> out;
    const auto a = src.f(*v, j);
    const auto b = src.f(*w, i);
    if (a && b && *a == *b) {
        out.top = *a;
        out.path_i = {u, *v, *a};
        out.path_j = {u, *w, *b};
        return out;
    }
    std::vector<typename S::vertex_type> pi{u, *v}, pj{u, *w};
    for (int c : {j, j, i})
        if (auto x = src.f(pi.back(), c)) pi.push_back(*x);
    for (int c : {i, i, j})
        if (auto x = src.f(pj.back(), c)) pj.push_back(*x);
    if (pi.size() != 5 || pj.size() != 5 || pi.back() != pj.back())
        throw InvariantViolation("covers close neither as a square nor as a degree-4 relation");
    // Nothing of rank(u)+2 or rank(u)+3 may already close the pair.
    const auto up_v = detail::restricted_upset(src, *v, i, j, 2);
    const auto up_w = detail::restricted_upset(src, *w, i, j, 2);
    for (const auto& x : up_v)
        if (std::find(up_w.begin(), up_w.end(), x) != up_w.end())
            throw InvariantViolation("degree-4 configuration closes early");
    out.degree4 = true;
    out.top = pi.back();
    out.path_i = std::move(pi);
    out.path_j = std::move(pj);
    return out;
}

}  // namespace xtal
