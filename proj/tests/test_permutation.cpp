#include <gtest/gtest.h>

#include <random>

#include "bdes/genfun.hpp"
#include "bdes/permutation.hpp"

using namespace bdes;
using K = StatName::Kind;

TEST(Permutation, ParseAndPrint) {
    EXPECT_EQ(Permutation::parse("2413").to_string(), "2413");
    EXPECT_EQ(Permutation::parse("10,1,2,3,4,5,6,7,8,9").to_string(), "10,1,2,3,4,5,6,7,8,9");
    EXPECT_EQ(Permutation::parse("").size(), 0);
    EXPECT_THROW(Permutation::parse("1224"), InvalidInput);
    EXPECT_THROW(Permutation::parse("134"), InvalidInput);
}

TEST(Permutation, Standardize) {
    const std::vector<int> w{5, 7, 1, 8};
    EXPECT_EQ(standardize(w).to_string(), "2314");
    const std::vector<int> a{1, 2, 3}, b{9, 7, 5};
    EXPECT_EQ(standardize(a).to_string(), "123");
    EXPECT_EQ(standardize(b).to_string(), "321");
}

TEST(Permutation, Symmetries) {
    const auto p = Permutation::parse("1425736");
    EXPECT_EQ(symmetry(p, Symmetry::reverse).to_string(), "6375241");
    EXPECT_EQ(symmetry(p, Symmetry::complement).to_string(), "7463152");
    EXPECT_EQ(symmetry(p, Symmetry::reverse_complement).to_string(), "2513647");
}

TEST(Permutation, Containment) {
    const auto s213 = Permutation::parse("213");
    EXPECT_TRUE(contains(Permutation::parse("1523764"), s213));
    EXPECT_FALSE(contains(Permutation::parse("7612543"), s213));
    EXPECT_FALSE(contains(Permutation::parse("12"), s213));
    EXPECT_TRUE(contains(Permutation::parse("35142"), Permutation::parse("2413")));
}

TEST(Permutation, ContainmentMatchesSubsetScan) {
    std::mt19937 rng(7);
    const auto pat = Permutation::parse("2413");
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> v(7);
        std::iota(v.begin(), v.end(), 1);
        std::shuffle(v.begin(), v.end(), rng);
        bool found = false;
        for (int mask = 0; mask < (1 << 7) && !found; ++mask) {
            if (__builtin_popcount(mask) != 4) continue;
            std::vector<int> sub;
            for (int i = 0; i < 7; ++i)
                if (mask >> i & 1) sub.push_back(v[i]);
            found = standardize(sub) == pat;
        }
        EXPECT_EQ(contains(Permutation(v), pat), found);
    }
}

TEST(Avoiders, Counts) {
    EXPECT_EQ(enumerate_avoiders(3, PatternSet::parse("123")).size(), 5u);
    EXPECT_TRUE(enumerate_avoiders(5, PatternSet::parse("123,321")).empty());
    EXPECT_EQ(enumerate_avoiders(4, PatternSet::parse("231,312")).size(), 8u);
    for (const char* s : {"123", "132", "213", "231", "312", "321"})
        for (int n = 0; n <= 10; ++n)
            EXPECT_EQ(mpz_class(static_cast<unsigned long>(enumerate_avoiders(n, PatternSet::parse(s)).size())), catalan(n))
                << s << " n=" << n;
}

TEST(Avoiders, LexOrderAndAgreesWithFilter) {
    const auto ps = PatternSet::parse("132,4321");
    auto fast = enumerate_avoiders(6, ps);
    EXPECT_TRUE(std::is_sorted(fast.begin(), fast.end(),
                               [](const Permutation& a, const Permutation& b) { return a.letters() < b.letters(); }));
    std::vector<Permutation> slow;
    std::vector<int> v{1, 2, 3, 4, 5, 6};
    do {
        Permutation p(v);
        if (!contains(p, Permutation::parse("132")) && !contains(p, Permutation::parse("4321"))) slow.push_back(p);
    } while (std::next_permutation(v.begin(), v.end()));
    EXPECT_EQ(fast, slow);
}

TEST(Statistics, Examples) {
    const auto p = Permutation::parse("7421365");
    EXPECT_EQ(statistic(p, StatName::des_r(0)), 4);
    EXPECT_EQ(statistic(p, StatName::des_r(1)), 2);
    EXPECT_EQ(statistic(p, StatName::des_r(2)), 1);
    const auto q = Permutation::parse("214863975");
    EXPECT_EQ(statistic(q, K::sdes), 1);
    EXPECT_EQ(statistic(q, K::lddes), 3);
    EXPECT_EQ(statistic(q, K::pk), 2);
    const auto w = Permutation::parse("2413756");
    EXPECT_EQ(statistic(w, K::hibasc), 2);
    EXPECT_EQ(statistic(w, K::lobasc), 1);
}

TEST(Statistics, EmptyAndSingleton) {
    for (auto k : {K::des, K::bdes, K::sdes, K::lddes, K::pk, K::rbdes, K::basc, K::lbasc, K::hibasc, K::lobasc}) {
        EXPECT_EQ(statistic(Permutation::parse(""), k), 0);
    }
    EXPECT_EQ(statistic(Permutation::parse("1"), K::rbdes), 0);
}

TEST(Statistics, Sets) {
    EXPECT_EQ(statistic_set(Permutation::parse("2745361"), StatSet::rlmax), (std::vector<int>{1, 6, 7}));
    EXPECT_EQ(statistic_set(Permutation::parse("7421365"), StatSet::bdes), (std::vector<int>{1, 2}));
    EXPECT_TRUE(statistic_set(Permutation::identity(6), StatSet::bdes).empty());
    for (int n = 0; n <= 6; ++n)
        for_each_avoider(n, PatternSet{}, [](const Permutation& p) {
            std::vector<int> big;
            for (int k = 1; k < p.size(); ++k)
                if (p.letters()[k - 1] > p.letters()[k] + 1) big.push_back(k);
            ASSERT_EQ(statistic_set(p, StatSet::bdes), big) << p.to_string();
        });
}

TEST(Statistics, Names) {
    EXPECT_EQ(StatName::parse("des_r(3)").to_string(), "des_r(3)");
    EXPECT_EQ(StatName::parse("des_r(1)"), StatName(K::bdes));
    EXPECT_THROW(StatName::parse("foo"), InvalidInput);
}

TEST(Statistics, Identities) {
    for (int n = 0; n <= 7; ++n)
        for_each_avoider(n, PatternSet{}, [&](const Permutation& p) {
            for (int r = 0; r < 4; ++r) ASSERT_LE(des_r(p, r + 1), des_r(p, r));
            ASSERT_EQ(statistic(p, K::des), statistic(p, K::bdes) + statistic(p, K::sdes));
            ASSERT_EQ(statistic(p, K::des), statistic(p, K::pk) + statistic(p, K::lddes));
            ASSERT_EQ(statistic(p, K::bdes), statistic(symmetry(p, Symmetry::reverse_complement), K::bdes));
            // rbdes is bdes of the word with 0 appended
            std::vector<int> w = p.letters();
            w.push_back(0);
            int big = 0;
            for (std::size_t i = 0; i + 1 < w.size(); ++i) big += w[i] > w[i + 1] + 1;
            ASSERT_EQ(statistic(p, K::rbdes), big);
        });
}

TEST(Distribution, TableRows) {
    EXPECT_EQ(distribution_table(5, PatternSet::parse("132"), K::bdes).counts, (std::vector<std::uint64_t>{5, 25, 12, 0, 0, 0}));
    EXPECT_EQ(distribution_table(6, PatternSet::parse("321"), K::bdes).counts,
              (std::vector<std::uint64_t>{13, 72, 45, 2, 0, 0, 0}));
    EXPECT_EQ(distribution_table(7, PatternSet::parse("213,231"), K::bdes).counts,
              (std::vector<std::uint64_t>{7, 35, 21, 1, 0, 0, 0, 0}));
}

TEST(Distribution, SdesLddesOver231) {
    for (int n = 0; n <= 9; ++n)
        EXPECT_EQ(distribution_table(n, PatternSet::parse("231"), K::sdes).counts,
                  distribution_table(n, PatternSet::parse("231"), K::lddes).counts);
}

TEST(Distribution, Guards) {
    EXPECT_THROW(distribution_table(12, PatternSet{}, K::bdes), ResourceGuard);
    EXPECT_THROW(distribution_table(15, PatternSet::parse("123"), K::bdes), ResourceGuard);
    Guards relaxed{4, 4};
    EXPECT_THROW(distribution_table(5, PatternSet::parse("123"), K::bdes, relaxed), ResourceGuard);
}

TEST(PatternSetTest, Parse) {
    EXPECT_TRUE(PatternSet::parse("").empty());
    EXPECT_EQ(PatternSet::parse("231,213").to_string(), "213,231");
    EXPECT_THROW(PatternSet::parse("12a"), InvalidInput);
}
