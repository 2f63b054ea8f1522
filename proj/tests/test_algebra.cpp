#include <gtest/gtest.h>

#include <random>

#include "bdes/genfun.hpp"
#include "bdes/series.hpp"

using namespace bdes;

namespace {

const MultiPoly t = MultiPoly::var(Var::t);
const MultiPoly one(1L);

Series from(std::initializer_list<MultiPoly> c, int N) { return detail::poly_in_x(c, N); }

Series random_series(std::mt19937& rng, int N, bool unit) {
    std::uniform_int_distribution<long> coef(-3, 3);
    Series s(N);
    for (int n = 0; n <= N; ++n) s[n] = MultiPoly(coef(rng)) + MultiPoly(coef(rng)) * t;
    if (unit) s[0] = MultiPoly(coef(rng) == 0 ? 1L : 2L);
    return s;
}

}  // namespace

TEST(MultiPolyTest, Basics) {
    const auto p = MultiPoly::parse("4+9t+t^2");
    EXPECT_EQ(p.derivative(Var::t).to_string(), "9+2t");
    EXPECT_EQ(MultiPoly::parse("1+2t+t^2").evaluate(Var::t, 1), Rational(4));
    EXPECT_EQ((one - t).pow(2).to_string(), "1-2t+t^2");
    EXPECT_EQ(MultiPoly(make_rational(1, 2)) * t, MultiPoly::parse("(1/2)t"));
    EXPECT_EQ(MultiPoly::parse("2st^2-s+1").to_string(), "1-s+2t^2s");
    EXPECT_THROW(MultiPoly::parse("3q"), InvalidInput);
    EXPECT_THROW(MultiPoly::parse("t").evaluate({}), InvalidInput);
    EXPECT_THROW(make_rational(1, 0), InvalidInput);
}

TEST(MultiPolyTest, ParsePrintRoundTrip) {
    for (const char* s : {"0", "1", "-t", "5+25t+12t^2", "(1/3)-(2/5)t^3", "1+u+v^2w-z"})
        EXPECT_EQ(MultiPoly::parse(MultiPoly::parse(s).to_string()), MultiPoly::parse(s)) << s;
}

TEST(MultiPolyTest, DivideExact) {
    const auto a = MultiPoly::parse("2t+2t^2s");
    EXPECT_EQ(a.divide_exact(MultiPoly::parse("2t"))->to_string(), "1+ts");
    EXPECT_FALSE(MultiPoly(1L).divide_exact(t).has_value());
}

TEST(SeriesTest, Arithmetic) {
    const int N = 8;
    auto geo = from({one}, N) / from({one, -1L}, N);
    for (int n = 0; n <= N; ++n) EXPECT_EQ(geo[n], one);
    auto prod = from({one, one}, N) * from({one, -1L}, N);
    EXPECT_EQ(prod, from({one, 0L, -1L}, N));
    auto b = from({one, -1L}, N) / from({one, -2L, 0L, one - t}, N);
    EXPECT_EQ(b[3].to_string(), "3+t");
    EXPECT_THROW(from({one}, N) / from({0L, one}, N), NonInvertible);
}

TEST(SeriesTest, Sqrt) {
    const int N = 6;
    auto r = sqrt(from({one, -4L}, N));
    EXPECT_EQ(r, from({one, -2L, -2L, -4L, -10L, -28L, -84L}, N));
    EXPECT_EQ(sqrt(from({one}, N)), from({one}, N));
    auto radical = detail::catalan_radical(N).substitute(Var::t, Rational(1));
    EXPECT_EQ(radical, r);
    EXPECT_THROW(sqrt(from({MultiPoly(4L)}, N)), InvalidInput);
}

TEST(SeriesTest, ExactDiv) {
    const int N = 5;
    auto q = exact_div(from({0L, 2L * t, 2L * t * t}, N), 1, 2L * t);
    EXPECT_EQ(q.order(), N - 1);
    EXPECT_EQ(q, from({one, t}, N - 1));
    EXPECT_THROW(exact_div(from({0L, 0L, one}, N), 1, t), InexactDivision);
    try {
        exact_div(from({0L, 0L, one}, N), 1, t);
    } catch (const InexactDivision& e) {
        EXPECT_EQ(e.x_power(), 2);
    }
    EXPECT_EQ(expand(GfKind::B132, 5)[5].to_string(), "5+25t+12t^2");
}

TEST(SeriesTest, Compose) {
    const int N = 6;
    auto inner = Series::x(N) / from({one, -1L}, N);
    auto c = compose(Series::x(N), {}, inner);
    EXPECT_EQ(c[0], MultiPoly());
    for (int n = 1; n <= N; ++n) EXPECT_EQ(c[n], one);
    auto geo = from({one}, N) / from({one, -1L}, N);
    auto fib = compose(geo, {}, from({0L, one, one}, N));
    EXPECT_EQ(fib, from({1L, 1L, 2L, 3L, 5L, 8L, 13L}, N));
    EXPECT_THROW(compose(geo, {}, from({one, one}, N)), DivergentComposition);
}

TEST(SeriesTest, RandomisedIdentities) {
    std::mt19937 rng(20240611);
    const int N = 6;
    for (int trial = 0; trial < 25; ++trial) {
        auto a = random_series(rng, N, false);
        auto b = random_series(rng, N, true);
        EXPECT_EQ((a * b) / b, a);
        auto u = from({one}, N) + random_series(rng, N, false).shift(1);
        auto r = sqrt(u);
        EXPECT_EQ(r * r, u);
        // composition is a ring map in the outer series
        auto inner = random_series(rng, N, false).shift(1);
        auto c = random_series(rng, N, false);
        EXPECT_EQ(compose(a + c, {}, inner), compose(a, {}, inner) + compose(c, {}, inner));
        EXPECT_EQ(compose(a * c, {}, inner), compose(a, {}, inner) * compose(c, {}, inner));
    }
}

TEST(SeriesTest, CatalanAtTEqualsOne) {
    for (auto k : {GfKind::B132, GfKind::B321, GfKind::B123}) {
        auto s = expand(k, 10).substitute(Var::t, Rational(1));
        for (int n = 0; n <= 10; ++n) EXPECT_EQ(s[n], MultiPoly(Rational(catalan(n)))) << n;
    }
    EXPECT_EQ(expand(GfKind::B132, 5)[5].evaluate(Var::t, 1), Rational(42));
}
