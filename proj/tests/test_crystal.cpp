#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "xtal/crystal.hpp"

using namespace xtal;

namespace {

const std::vector<std::pair<Shape, int>> kMatrix = {
    {Shape{2, 1}, 3}, {Shape{3, 2}, 4}, {Shape{4, 3}, 4}, {Shape{2, 2}, 4}};

// Partitions of m with at most max_rows parts.
void partitions(int m, int max_part, int max_rows, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (m == 0) {
        out.push_back(cur);
        return;
    }
    if (static_cast<int>(cur.size()) == max_rows) return;
    for (int p = std::min(m, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(m - p, p, max_rows, cur, out);
        cur.pop_back();
    }
}

}  // namespace

TEST(Generate, VertexSetIsAllSsytUpToEightCells) {
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= 8; ++m) {
            std::vector<std::vector<int>> parts;
            std::vector<int> cur;
            partitions(m, m, n, cur, parts);
            for (const auto& p : parts) {
                const auto expected = oracle::ssyt(p, n);
                const auto g = generate(Shape(p), n);
                ASSERT_EQ(g.size(), expected.size()) << to_string(Shape(p)) << " n=" << n;
                for (const auto& rows : expected) EXPECT_TRUE(g.find(Tableau::from_rows(rows)));
            }
        }
}

TEST(Generate, RandomShapesMatchDimensionFormula) {
    std::mt19937 rng(20240611);
    int tested = 0;
    while (tested < 8) {
        const int n = std::uniform_int_distribution<int>(2, 6)(rng);
        std::vector<int> p;
        int remaining = std::uniform_int_distribution<int>(9, 40)(rng);
        for (int r = 0; r < n && remaining > 0; ++r) {
            const int cap = p.empty() ? remaining : std::min(p.back(), remaining);
            const int part = std::uniform_int_distribution<int>(1, cap)(rng);
            p.push_back(part);
            remaining -= part;
        }
        const auto dim = oracle::weyl_dimension(p, n);
        if (dim > 200'000) continue;
        ++tested;
        EXPECT_EQ(static_cast<std::int64_t>(generate(Shape(p), n).size()), dim) << to_string(Shape(p)) << " n=" << n;
    }
}

TEST(Generate, EdgesAreTheTableauOperators) {
    for (const auto& [shape, n] : kMatrix) {
        const auto g = generate(shape, n);
        std::size_t count = 0;
        for (VertexId v = 0; v < g.size(); ++v)
            for (int i = 1; i < n; ++i) {
                const auto f = apply_f(g.tableau(v), i);
                ASSERT_EQ(f.has_value(), g.f(v, i).has_value());
                if (f) {
                    EXPECT_EQ(g.tableau(*g.f(v, i)), *f);
                    EXPECT_EQ(g.e(*g.f(v, i), i), v);
                    ++count;
                }
            }
        EXPECT_EQ(count, g.edges().size());
    }
}

TEST(Generate, RanksAreDistancesFromTheMinimum) {
    for (const auto& [shape, n] : kMatrix) {
        const auto g = generate(shape, n);
        const auto d = oracle::to_digraph(g);
        std::vector<int> dist(g.size(), -1);
        std::vector<int> queue{static_cast<int>(g.bottom())};
        dist[g.bottom()] = 0;
        for (std::size_t k = 0; k < queue.size(); ++k)
            for (auto [y, c] : d.out[queue[k]])
                if (dist[y] < 0) {
                    dist[y] = dist[queue[k]] + 1;
                    queue.push_back(y);
                }
        for (VertexId v = 0; v < g.size(); ++v) {
            EXPECT_EQ(g.rank(v), dist[v]);
            for (auto [y, c] : d.out[v]) EXPECT_EQ(dist[y], dist[v] + 1);
        }
        EXPECT_EQ(g.rank(g.top()), g.max_rank());
        EXPECT_EQ(g.tableau(g.bottom()), highest(shape, n));
    }
    EXPECT_EQ(generate(Shape{4, 3}, 4).size(), 140u);
    EXPECT_EQ(generate(Shape{4, 3}, 4).max_rank(), 15);
}

TEST(Generate, CapAndShapeErrors) {
    EXPECT_THROW(generate(Shape{4, 3}, 4, 100), CapExceeded);
    EXPECT_THROW(generate(Shape{1, 1, 1}, 2), std::invalid_argument);
}

TEST(TableauCrystal, AgreesWithGeneratedGraph) {
    const auto g = generate(Shape{3, 2}, 4);
    const TableauCrystal tc(Shape{3, 2}, 4);
    EXPECT_EQ(tc.bottom(), g.tableau(g.bottom()));
    for (VertexId v = 0; v < g.size(); ++v) {
        const auto& t = g.tableau(v);
        EXPECT_EQ(tc.rank(t), g.rank(v));
        for (int i = 1; i < 4; ++i) {
            auto f = tc.f(t, i);
            ASSERT_EQ(f.has_value(), g.f(v, i).has_value());
            if (f) {
                EXPECT_EQ(*f, g.tableau(*g.f(v, i)));
            }
        }
    }
}

TEST(StringStats, MatchSignatureCounts) {
    const auto g = generate(Shape{3, 2, 1}, 4);
    for (VertexId v = 0; v < g.size(); ++v)
        for (int i = 1; i < 4; ++i) {
            const auto s = string_stats(g, v, i);
            const auto sig = i_signature(g.tableau(v), i);
            EXPECT_EQ(s.rise, sig.x());
            EXPECT_EQ(s.depth, -sig.y());
        }
}

TEST(Axioms, HoldOnTheMatrixAndItsDuals) {
    for (const auto& [shape, n] : kMatrix) {
        const auto g = generate(shape, n);
        EXPECT_TRUE(check_stembridge_axioms(g).passed) << to_string(shape);
        EXPECT_TRUE(check_stembridge_axioms(ReversedView(g)).passed) << to_string(shape);
        EXPECT_TRUE(check_stembridge_axioms(g.to_data()).passed) << to_string(shape);
    }
    EXPECT_TRUE(check_stembridge_axioms(generate(Shape{3, 2, 1}, 4)).passed);
    EXPECT_TRUE(check_stembridge_axioms(generate(Shape{2, 1, 1}, 5)).passed);
}

TEST(Axioms, DetectRecoloredEdge) {
    const auto g = generate(Shape{3, 2}, 4);
    int caught = 0;
    for (std::size_t k = 0; k < g.edges().size(); k += 7) {
        auto data = g.to_data();
        auto& e = data.edges[k];
        e.color = e.color == 1 ? 3 : 1;
        const auto report = check_stembridge_axioms(data);
        EXPECT_FALSE(report.passed) << "edge " << k;
        if (!report.passed) ++caught;
    }
    EXPECT_GT(caught, 0);
}

TEST(Axioms, DetectDuplicateAndDroppedEdges) {
    const auto g = generate(Shape{2, 1}, 3);
    auto dup = g.to_data();
    const auto e0 = dup.edges[0];
    dup.edges.push_back({e0.source, static_cast<VertexId>((e0.target + 1) % g.size()), e0.color});
    const auto r1 = check_stembridge_axioms(dup);
    ASSERT_FALSE(r1.passed);
    EXPECT_EQ(r1.violation->axiom, "P2");

    for (std::size_t k = 0; k < g.edges().size(); ++k) {
        auto drop = g.to_data();
        drop.edges.erase(drop.edges.begin() + k);
        EXPECT_FALSE(check_stembridge_axioms(drop).passed) << "dropped edge " << k;
    }
}

TEST(ReversedView, IsTheDualCrystal) {
    const auto g = generate(Shape{4, 3}, 4);
    const ReversedView r(g);
    EXPECT_EQ(r.bottom(), g.top());
    EXPECT_EQ(r.rank(g.bottom()), g.max_rank());
    for (VertexId v = 0; v < g.size(); ++v) {
        auto c = g.content(v);
        auto rc = r.content(v);
        for (int k = 0; k < 4; ++k) EXPECT_EQ(rc[k], c[3 - k]);
        for (int i = 1; i < 4; ++i) EXPECT_EQ(r.f(v, i), g.e(v, 4 - i));
    }
}

TEST(LocalStructure, DegreeFourOnlyForAdjacentColors) {
    for (const auto& [shape, n] : kMatrix) {
        const auto g = generate(shape, n);
        for (VertexId u = 0; u < g.size(); ++u)
            for (int i = 1; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if (!g.f(u, i) || !g.f(u, j)) continue;
                    const auto ls = local_structure(g, u, i, j);
                    if (ls.degree4) {
                        EXPECT_EQ(j, i + 1);
                    }
                    EXPECT_EQ(ls.path_i.front(), u);
                    EXPECT_EQ(ls.path_i.back(), ls.top);
                    EXPECT_EQ(ls.path_j.back(), ls.top);
                    EXPECT_EQ(g.rank(ls.top), g.rank(u) + (ls.degree4 ? 4 : 2));
                }
    }
}
