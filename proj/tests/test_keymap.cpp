#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "xtal/keymap.hpp"

using namespace xtal;

namespace {

const std::vector<std::pair<Shape, int>> kShapes = {{Shape{2, 1}, 3}, {Shape{3, 2}, 4}, {Shape{4, 3}, 4},
                                                    {Shape{2, 2}, 4}, {Shape{3, 2, 1}, 4}, {Shape{2, 1, 1}, 4},
                                                    {Shape{2, 1}, 5}};

}  // namespace

// {b : key(b) <= w} must be the Demazure subset built from f-strings along a
// reduced word of w.
TEST(Keys, DemazureSubsetsMatchOperatorConstruction) {
    for (const auto& [shape, n] : kShapes) {
        const auto g = generate(shape, n);
        const auto keys = compute_keys(g);
        auto f = [&](int x, int i) -> std::optional<int> {
            if (auto y = g.f(static_cast<VertexId>(x), i)) return static_cast<int>(*y);
            return std::nullopt;
        };
        for (const auto& p : oracle::all_perms(n)) {
            const auto expected = oracle::demazure_by_operators(static_cast<int>(g.bottom()), p, f);
            const auto got = demazure(g, keys, Permutation(p));
            EXPECT_EQ(std::set<int>(got.begin(), got.end()), expected) << to_string(shape) << " " << to_string(Permutation(p));
        }
    }
}

TEST(Keys, AxiomsAndAdaptedStrings) {
    for (const auto& [shape, n] : kShapes) {
        const auto g = generate(shape, n);
        const auto keys = compute_keys(g);
        EXPECT_TRUE(check_key_axioms(g, keys).passed) << to_string(shape);
        for (VertexId b = 0; b < g.size(); ++b) EXPECT_TRUE(adapted_string_check(g, keys, b));

        const ReversedView r(g);
        const auto rkeys = compute_keys(r);
        EXPECT_TRUE(check_key_axioms(r, rkeys).passed) << to_string(shape);
        EXPECT_EQ(stabilizer_indices(r), stabilizer_indices(g));
    }
}

TEST(Keys, KnownValues) {
    const auto g = generate(Shape{4, 3}, 4);
    const auto keys = compute_keys(g);
    EXPECT_TRUE(keys[g.bottom()].is_identity());
    EXPECT_EQ(to_string(keys[g.top()]), "4312");
    EXPECT_EQ(stabilizer_indices(g), stabilizer_indices(Shape{4, 3}, 4));
    EXPECT_EQ(stabilizer_indices(Shape{4, 3}, 4), (ParabolicSet{3}));
    EXPECT_EQ(stabilizer_indices(Shape{2, 2}, 4), (ParabolicSet{1, 3}));
}

TEST(Keys, IndependentOfTieBreakingWithinRanks) {
    const auto g = generate(Shape{4, 3}, 4);
    const auto base = compute_keys(g);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<std::vector<VertexId>> by_rank(g.max_rank() + 1);
        for (VertexId v = 0; v < g.size(); ++v) by_rank[g.rank(v)].push_back(v);
        std::vector<VertexId> order;
        for (auto& level : by_rank) {
            std::shuffle(level.begin(), level.end(), rng);
            order.insert(order.end(), level.begin(), level.end());
        }
        EXPECT_EQ(compute_keys(g, order), base);
    }
    auto bad = rank_order(g);
    std::reverse(bad.begin(), bad.end());
    EXPECT_THROW(compute_keys(g, bad), std::invalid_argument);
}

TEST(Keys, PerturbedTableIsRejected) {
    const auto g = generate(Shape{3, 2}, 4);
    const auto keys = compute_keys(g);
    for (VertexId v = 0; v < g.size(); ++v) {
        for (int i = 1; i < 4; ++i) {
            auto bad = keys;
            bad[v] = left_multiply(i, keys[v]);
            EXPECT_FALSE(check_key_axioms(g, bad).passed) << v << " s" << i;
        }
    }
    EXPECT_FALSE(check_key_axioms(g, KeyTable{}).passed);
}

TEST(Fibers, DisconnectedFiberAt2413) {
    const auto g = generate(Shape{3, 2}, 4);
    const auto keys = compute_keys(g);
    const auto f = fiber(g, keys, parse_permutation("2413"));
    EXPECT_EQ(f.elements.size(), 8u);
    std::multiset<std::size_t> sizes;
    for (const auto& c : f.components) sizes.insert(c.size());
    EXPECT_EQ(sizes, (std::multiset<std::size_t>{2, 6}));
    for (const auto& e : f.covers) EXPECT_TRUE(leq(g, e.source, e.target));
}

TEST(Fibers, IdentityFiberIsTheMinimum) {
    for (const auto& [shape, n] : kShapes) {
        const auto g = generate(shape, n);
        const auto f = fiber(g, compute_keys(g), Permutation::identity(n));
        EXPECT_EQ(f.elements, std::vector<VertexId>{g.bottom()});
        EXPECT_EQ(demazure(g, compute_keys(g), longest_parabolic(ParabolicSet::full(n), n)).size(), g.size());
    }
}

TEST(Fibers, ExtremesExistExactlyWhenJAvoidsK) {
    for (const auto& [shape, n] : kShapes) {
        const auto g = generate(shape, n);
        const auto keys = compute_keys(g);
        const auto k = stabilizer_indices(shape, n);
        const auto minima = minimal_fiber_elements(g, keys);
        for (const auto& j : all_parabolic_sets(n)) {
            const bool avoids = (j.mask() & k.mask()) == 0;
            const auto ext = fiber_extremes(g, keys, j);
            EXPECT_EQ(ext.has_value(), avoids) << to_string(shape) << " " << to_string(j);
            EXPECT_EQ(minima.count(j) > 0, avoids);
            if (ext) {
                EXPECT_EQ(keys[ext->first], longest_parabolic(j, n));
                EXPECT_TRUE(leq(g, ext->first, ext->second));
            }
        }
    }
}
