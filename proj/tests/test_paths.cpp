#include <gtest/gtest.h>

#include "bdes/genfun.hpp"
#include "bdes/paths.hpp"

using namespace bdes;

namespace {

// con by the literal index scan of its definition
int con_oracle(const DyckPath& p) {
    std::vector<int> u, d;
    for (int i = 0; i < static_cast<int>(p.steps.size()); ++i) (p.steps[i] == 'U' ? u : d).push_back(i);
    int c = 0;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) c += d[i + 1] == d[i] + 1 && u[i + 1] != u[i] + 1;
    return c;
}

}  // namespace

TEST(Paths, FactorOccurrences) {
    const auto mu = parse_dyck("UUUDDUDDUDUUDD");
    EXPECT_EQ(occ_factor(mu, "UD"), 4);
    EXPECT_EQ(occ_factor(mu, "UD", true), 1);
    EXPECT_EQ(occ_factor(parse_binary("10110001011"), "011"), 2);
    EXPECT_EQ(occ_factor(parse_dyck("UDUD"), "DU"), 1);
    EXPECT_EQ(occ_factor(std::string_view("DUDU"), "DU"), 2);
}

TEST(Paths, ReturnDecompositions) {
    const auto mu = parse_dyck("UUUDDUDDUDUUDD");
    auto [a, b] = return_decompose(mu, ReturnKind::first);
    EXPECT_EQ(a.steps, "UUDDUD");
    EXPECT_EQ(b.steps, "UDUUDD");
    auto [c, d] = return_decompose(mu, ReturnKind::last);
    EXPECT_EQ(c.steps, "UUUDDUDDUD");
    EXPECT_EQ(d.steps, "UD");
    auto [e, f] = return_decompose(parse_dyck("UD"), ReturnKind::first);
    EXPECT_TRUE(e.empty());
    EXPECT_TRUE(f.empty());
    EXPECT_THROW(return_decompose(DyckPath{}, ReturnKind::first), InvalidInput);
}

TEST(Paths, ReturnDecompositionRoundTrip) {
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : all_dyck_paths(n)) {
            auto [a, b] = return_decompose(p, ReturnKind::first);
            ASSERT_EQ("U" + a.steps + "D" + b.steps, p.steps);
            auto [c, d] = return_decompose(p, ReturnKind::last);
            ASSERT_EQ(c.steps + "U" + d.steps + "D", p.steps);
        }
}

TEST(Paths, Statistics) {
    EXPECT_EQ(path_statistic(parse_dyck("UDUUDUUUDUDDUDDD"), PathStat::pk), 5);
    EXPECT_EQ(path_statistic(parse_dyck("UD"), PathStat::ini_UU), 0);
    EXPECT_EQ(path_statistic(parse_dyck("UUDD"), PathStat::ini_UU), 1);
    EXPECT_EQ(path_statistic(parse_dyck("UUDD"), PathStat::con), 0);
    EXPECT_EQ(path_statistic(parse_dyck("UUDUDD"), PathStat::con), 1);
    EXPECT_EQ(path_statistic(parse_dyck("UDUDUD"), PathStat::returns), 3);
}

TEST(Paths, PropertiesUpToEight) {
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : all_dyck_paths(n)) {
            ASSERT_LE(occ_factor(p, "UD", true), occ_factor(p, "UD"));
            if (n > 0) ASSERT_GE(path_statistic(p, PathStat::pk), 1);
            ASSERT_EQ(path_statistic(p, PathStat::con), con_oracle(p)) << p.steps;
            ASSERT_LE(path_statistic(p, PathStat::con), path_statistic(p, PathStat::pk));
        }
}

TEST(Paths, Generators) {
    for (int n = 0; n <= 9; ++n) EXPECT_EQ(mpz_class(static_cast<unsigned long>(all_dyck_paths(n).size())), catalan(n));
    // 2-Motzkin paths of length m-1 are counted by Catalan(m)
    for (int m = 1; m <= 9; ++m)
        EXPECT_EQ(mpz_class(static_cast<unsigned long>(all_two_motzkin_paths(m - 1).size())), catalan(m));
    EXPECT_EQ(all_binary_words(5).size(), 32u);
}

TEST(Paths, RunCount) {
    EXPECT_EQ(run_count(parse_binary("0000110111001"), 2), 2);
    EXPECT_EQ(run_count(parse_binary("1111"), 1), 0);
    EXPECT_EQ(run_count(parse_binary("000"), 2), 1);
}

TEST(Paths, Validation) {
    EXPECT_TRUE(validate(DyckPath{"UUDD"}));
    EXPECT_FALSE(validate(DyckPath{"UDD"}));
    EXPECT_FALSE(validate(DyckPath{"DU"}));
    EXPECT_TRUE(validate(parse_motzkin("h1 u d")));
    EXPECT_THROW(parse_motzkin("d u"), InvalidInput);
    EXPECT_THROW(parse_binary("0120"), InvalidInput);
    EXPECT_EQ(to_string(parse_motzkin("h1 u h1 h0 u d d")), "h1 u h1 h0 u d d");
}
