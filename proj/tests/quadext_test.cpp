#include <g3hyp/quadext.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace g3hyp;

namespace {

QuadExt random_elt(std::mt19937_64& eng, const Rational& d) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 6);
    return QuadExt(Rational(num(eng), den(eng)), Rational(num(eng), den(eng)), d);
}

}  // namespace

TEST(QuadExt, NormForm) {
    QuadExt a(Rational(1), Rational(1), Rational(2));    // 1 + sqrt(2)
    QuadExt b(Rational(1), Rational(-1), Rational(2));   // 1 - sqrt(2)
    EXPECT_EQ(a * b, QuadExt(Rational(-1)));
    EXPECT_EQ(a.norm(), Rational(-1));
}

TEST(QuadExt, EmbedsRationals) {
    QuadExt a(Rational(3), Rational(0), Rational(5));
    QuadExt b(Rational(2), Rational(0), Rational(5));
    EXPECT_EQ(a + b, QuadExt(Rational(5)));
    EXPECT_TRUE((a + b).is_rational());
    // zero coefficient combines with any radicand
    QuadExt c(Rational(1), Rational(1), Rational(7));
    EXPECT_EQ((a + c).radicand(), 7);
}

TEST(QuadExt, InverseOfOnePlusSqrt2) {
    // 1/(1 + sqrt 2) = -1 + sqrt 2, checked by the product
    QuadExt a(Rational(1), Rational(1), Rational(2));
    QuadExt inv = a.inverse();
    EXPECT_EQ(inv, QuadExt(Rational(-1), Rational(1), Rational(2)));
    EXPECT_EQ(a * inv, QuadExt(Rational(1)));
}

TEST(QuadExt, RadicandNormalization) {
    // sqrt(8) = 2 sqrt(2), sqrt(9/25) collapses into Q
    QuadExt a(Rational(0), Rational(1), Rational(8));
    EXPECT_EQ(a.radicand(), 2);
    EXPECT_EQ(a.coeff(), Rational(2));
    QuadExt b(Rational(1), Rational(5), Rational(9, 25));
    EXPECT_TRUE(b.is_rational());
    EXPECT_EQ(b.rational_value(), Rational(4));
    // -12 = -3 * 2^2
    QuadExt c(Rational(0), Rational(1), Rational(-12));
    EXPECT_EQ(c.radicand(), -3);
    EXPECT_EQ(c.coeff(), Rational(2));
}

TEST(QuadExt, MismatchedRadicands) {
    QuadExt a(Rational(1), Rational(1), Rational(2));
    QuadExt b(Rational(1), Rational(1), Rational(3));
    EXPECT_THROW(a + b, precondition_error);
    EXPECT_THROW(a * b, precondition_error);
    EXPECT_THROW(QuadExt(Rational(0)).inverse(), precondition_error);
}

TEST(QuadExt, FieldAxioms) {
    std::mt19937_64 eng(19);
    const Rational d(5);
    for (int i = 0; i < 1000; ++i) {
        QuadExt a = random_elt(eng, d), b = random_elt(eng, d), c = random_elt(eng, d);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    }
}

TEST(QuadExt, Dispatcher) {
    QuadExt a(Rational(1), Rational(1), Rational(2));
    EXPECT_EQ(quadext_arithmetic(a, a, QuadExtOp::sub), QuadExt(Rational(0)));
    EXPECT_EQ(quadext_arithmetic(a, a, QuadExtOp::div), QuadExt(Rational(1)));
}
