#include <gtest/gtest.h>

#include "oracles.hpp"
#include "xtal/weyl.hpp"

using namespace xtal;

namespace {

std::vector<Permutation> all_of_degree(int n) {
    std::vector<Permutation> out;
    for (const auto& p : oracle::all_perms(n)) out.emplace_back(p);
    return out;
}

}  // namespace

TEST(Permutation, RejectsBadWords) {
    EXPECT_THROW(Permutation(std::vector<int>{1, 1, 2}), std::invalid_argument);
    EXPECT_THROW(Permutation(std::vector<int>{0, 1}), std::invalid_argument);
    EXPECT_THROW(Permutation(std::vector<int>(13, 1)), std::invalid_argument);
    EXPECT_THROW(parse_permutation("12a"), std::invalid_argument);
    EXPECT_THROW(parse_permutation(""), std::invalid_argument);
}

TEST(Permutation, ParseRoundTrip) {
    for (const auto& w : all_of_degree(4)) EXPECT_EQ(parse_permutation(to_string(w)), w);
    const auto big = parse_permutation("2,1,3,4,5,6,7,8,9,10,12,11");
    EXPECT_EQ(big.size(), 12);
    EXPECT_EQ(parse_permutation(to_string(big)), big);
    EXPECT_EQ(length(big), 2);
}

TEST(Permutation, LengthIsInversionCount) {
    for (const auto& p : oracle::all_perms(5)) EXPECT_EQ(length(Permutation(p)), oracle::inversions(p));
}

TEST(Permutation, MultiplicationConventions) {
    const auto w = parse_permutation("2413");
    EXPECT_EQ(to_string(left_multiply(1, w)), "1423");   // values 1 and 2 exchanged
    EXPECT_EQ(to_string(right_multiply(w, 1)), "4213");  // positions 1 and 2 exchanged
    EXPECT_EQ(left_multiply(2, left_multiply(2, w)), w);
    EXPECT_EQ(w.inverse().inverse(), w);
    EXPECT_EQ(inversion_set(w).size(), 3u);
}

TEST(WeakOrder, MatchesBfsOracleOnS4) {
    const auto perms = oracle::all_perms(4);
    for (const auto& u : perms) {
        const auto up = oracle::weak_upset(u);
        for (const auto& w : perms)
            EXPECT_EQ(left_weak_leq(Permutation(u), Permutation(w)), up.count(w) > 0)
                << to_string(Permutation(u)) << " " << to_string(Permutation(w));
    }
}

TEST(WeakOrder, JoinMatchesBruteForceOnAllPairsOfS4) {
    const auto perms = oracle::all_perms(4);
    for (const auto& a : perms)
        for (const auto& b : perms) {
            const auto expected = oracle::brute_join({a, b}, 4);
            ASSERT_TRUE(expected);
            EXPECT_EQ(left_weak_join({Permutation(a), Permutation(b)}), Permutation(*expected));
        }
}

TEST(WeakOrder, JoinOfTriplesInS4) {
    const auto perms = oracle::all_perms(4);
    for (std::size_t a = 0; a < perms.size(); a += 5)
        for (std::size_t b = 1; b < perms.size(); b += 7)
            for (std::size_t c = 2; c < perms.size(); c += 3) {
                const auto expected = oracle::brute_join({perms[a], perms[b], perms[c]}, 4);
                EXPECT_EQ(left_weak_join({Permutation(perms[a]), Permutation(perms[b]), Permutation(perms[c])}),
                          Permutation(*expected));
            }
}

TEST(WeakOrder, JoinRejectsMixedDegrees) {
    EXPECT_THROW(left_weak_join({parse_permutation("21"), parse_permutation("213")}), std::invalid_argument);
}

TEST(Bruhat, MatchesTranspositionClosureOnS4) {
    const auto perms = oracle::all_perms(4);
    for (const auto& u : perms)
        for (const auto& w : perms)
            EXPECT_EQ(strong_bruhat_leq(Permutation(u), Permutation(w)), oracle::bruhat_leq(u, w))
                << to_string(Permutation(u)) << " " << to_string(Permutation(w));
}

TEST(Bruhat, ContainsWeakOrder) {
    for (const auto& u : all_of_degree(4))
        for (const auto& w : all_of_degree(4))
            if (left_weak_leq(u, w)) {
                EXPECT_TRUE(strong_bruhat_leq(u, w));
            }
}

TEST(Parabolic, LongestElements) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& j : all_parabolic_sets(n)) {
            const auto w = longest_parabolic(j, n);
            auto idx = j.indices();
            EXPECT_EQ(w.word(), oracle::longest_parabolic(std::set<int>(idx.begin(), idx.end()), n));
            EXPECT_EQ(classify_longest_parabolic(w), j);
            EXPECT_EQ(right_descents(w), j);
            EXPECT_EQ(left_descents(w), j);
        }
    EXPECT_EQ(all_parabolic_sets(4).size(), 8u);
    EXPECT_FALSE(classify_longest_parabolic(parse_permutation("2413")));
    EXPECT_EQ(to_string(ParabolicSet{1, 3}), "{1,3}");
}

TEST(ReducedWords, CountsAndValidity) {
    // 16 reduced words for the longest element of S_4, 768 for S_5.
    EXPECT_EQ(reduced_words(longest_parabolic(ParabolicSet::full(4), 4)).size(), 16u);
    EXPECT_EQ(reduced_words(longest_parabolic(ParabolicSet::full(5), 5)).size(), 768u);
    for (const auto& w : all_of_degree(4))
        for (const auto& word : reduced_words(w)) {
            ASSERT_EQ(static_cast<int>(word.size()), length(w));
            auto p = Permutation::identity(4);
            for (auto it = word.rbegin(); it != word.rend(); ++it) p = left_multiply(*it, p);
            EXPECT_EQ(p, w);
        }
}
