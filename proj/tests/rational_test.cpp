#include <g3hyp/rational.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace g3hyp;

namespace {

constexpr int kIterations = 1000;

Rational random_rational(std::mt19937_64& eng, long span = 200) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    return Rational(num(eng), den(eng));
}

}  // namespace

TEST(Rational, CanonicalForm) {
    Rational r(6, -4);
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(Rational(0, 7), Rational(0));
    EXPECT_EQ(Rational(0).denominator(), 1);
    EXPECT_THROW(Rational(1, 0), precondition_error);
}

TEST(Rational, ExactInverse) {
    std::mt19937_64 eng(42);
    for (int i = 0; i < kIterations; ++i) {
        Rational r = random_rational(eng);
        if (r.is_zero()) continue;
        EXPECT_EQ(r * r.inverse(), Rational(1));
    }
}

TEST(Rational, FieldAxioms) {
    std::mt19937_64 eng(7);
    for (int i = 0; i < kIterations; ++i) {
        Rational a = random_rational(eng), b = random_rational(eng), c = random_rational(eng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + (-a), Rational(0));
        if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    }
}

TEST(Rational, Parse) {
    EXPECT_EQ(Rational::parse("3/4"), Rational(3, 4));
    EXPECT_EQ(Rational::parse("-15435/8"), Rational(-15435, 8));
    EXPECT_EQ(Rational::parse("42"), Rational(42));
    EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
    EXPECT_THROW(Rational::parse("1.5"), parse_error);
    EXPECT_THROW(Rational::parse("1/-2"), parse_error);
    EXPECT_THROW(Rational::parse("1/0"), parse_error);
    EXPECT_THROW(Rational::parse(""), parse_error);
    EXPECT_THROW(Rational::parse("2/"), parse_error);
}

TEST(Rational, Serialization) {
    EXPECT_EQ(Rational(-3, 2).str(), "-3/2");
    EXPECT_EQ(Rational(5).str(), "5");
    EXPECT_EQ(Rational(0).str(), "0");
    std::mt19937_64 eng(3);
    for (int i = 0; i < 200; ++i) {
        Rational r = random_rational(eng);
        EXPECT_EQ(Rational::parse(r.str()), r);
    }
}

TEST(SquarefreePart, Examples) {
    auto [s1, r1] = squarefree_part(Rational(4));
    EXPECT_EQ(s1, 1);
    EXPECT_EQ(r1, Rational(2));

    auto [s2, r2] = squarefree_part(Rational(-12));
    EXPECT_EQ(s2, -3);
    EXPECT_EQ(r2, Rational(2));

    auto [s3, r3] = squarefree_part(Rational(9, 25));
    EXPECT_EQ(s3, 1);
    EXPECT_EQ(r3, Rational(3, 5));

    EXPECT_THROW(squarefree_part(Rational(0)), precondition_error);
}

TEST(SquarefreePart, RoundTrip) {
    std::mt19937_64 eng(11);
    for (int i = 0; i < kIterations; ++i) {
        Rational q = random_rational(eng, 5000);
        if (q.is_zero()) continue;
        auto [s, r] = squarefree_part(q);
        EXPECT_EQ(Rational(s) * r * r, q) << q.str();
        EXPECT_GT(r, Rational(0));
        // s squarefree: no prime square divides it
        for (auto& [p, e] : detail::factor(Integer(abs(s)))) EXPECT_EQ(e, 1u) << s.get_str();
    }
}

TEST(RationalSqrt, Examples) {
    EXPECT_EQ(rational_sqrt(Rational(49, 4)), Rational(7, 2));
    EXPECT_EQ(rational_sqrt(Rational(2)), std::nullopt);
    EXPECT_EQ(rational_sqrt(Rational(0)), Rational(0));
    EXPECT_EQ(rational_sqrt(Rational(-9)), std::nullopt);
    std::mt19937_64 eng(5);
    for (int i = 0; i < 300; ++i) {
        Rational r = random_rational(eng).abs();
        auto root = rational_sqrt(r * r);
        ASSERT_TRUE(root.has_value());
        EXPECT_EQ(*root, r);
    }
}
