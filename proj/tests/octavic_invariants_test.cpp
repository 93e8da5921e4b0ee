#include <g3hyp/octavic_invariants.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace g3hyp;

namespace {

using Form = BinaryForm<Rational>;

Form octavic_of(std::vector<long> ascending) {
    std::vector<Rational> cs;
    for (long v : ascending) cs.emplace_back(v);
    return Form::from_univariate(8, cs);
}

// y^2 = x^8 + 14 x^4 + 1 (the octahedral curve)
Form s4_curve() { return octavic_of({1, 0, 0, 0, 14, 0, 0, 0, 1}); }
// y^2 = x(x^6 - 1)
Form u6_curve() { return octavic_of({0, -1, 0, 0, 0, 0, 0, 1}); }
// y^2 = x^8 - 1
Form v8_curve() { return octavic_of({-1, 0, 0, 0, 0, 0, 0, 0, 1}); }
// y^2 = x^7 - 1
Form x7_curve() { return octavic_of({-1, 0, 0, 0, 0, 0, 0, 1}); }

Form random_octavic(std::mt19937_64& eng) {
    std::uniform_int_distribution<long> c(-5, 5);
    while (true) {
        std::vector<Rational> cs(9);
        for (auto& x : cs) x = Rational(c(eng));
        Form f(8, std::move(cs));
        if (!f.is_zero() && is_squarefree(f)) return f;
    }
}

}  // namespace

TEST(Covariants, Degrees) {
    auto cov = covariants(s4_curve());
    EXPECT_EQ(cov.g.degree(), 8);
    EXPECT_EQ(cov.k.degree(), 4);
    EXPECT_EQ(cov.h.degree(), 4);
    EXPECT_EQ(cov.m.degree(), 4);
    EXPECT_EQ(cov.n.degree(), 4);
    EXPECT_EQ(cov.p.degree(), 4);
    EXPECT_EQ(cov.q.degree(), 4);
    EXPECT_FALSE(cov.h.is_zero());
    EXPECT_THROW(covariants(Form(6)), precondition_error);
}

TEST(Covariants, ZeroForm) {
    auto cov = covariants(Form(8));
    EXPECT_TRUE(cov.g.is_zero());
    EXPECT_TRUE(cov.k.is_zero());
    EXPECT_TRUE(cov.h.is_zero());
    EXPECT_TRUE(cov.q.is_zero());
}

TEST(Shioda, GoldenVectors) {
    auto S = shioda_invariants(s4_curve());
    EXPECT_EQ(S[2], Rational(672));
    EXPECT_EQ(S[3], Rational(87808));
    for (int w = 4; w <= 10; ++w) EXPECT_TRUE(S[w].is_zero()) << w;

    auto U = shioda_invariants(u6_curve());
    EXPECT_EQ(U[2], Rational(35));
    EXPECT_EQ(U[4], Rational(2401));
    EXPECT_EQ(U[6], Rational(-117649));
    EXPECT_EQ(U[8], Rational(86472015));
    EXPECT_EQ(U[10], Rational::parse("-4237128735"));
    EXPECT_TRUE(U[3].is_zero() && U[5].is_zero() && U[7].is_zero() && U[9].is_zero());

    auto V = shioda_invariants(v8_curve());
    EXPECT_EQ(V[2], Rational(-280));
    EXPECT_EQ(V[4], Rational(2458624));
    EXPECT_EQ(V[6], Rational::parse("3855122432"));
    EXPECT_EQ(V[8], Rational::parse("-15112079933440"));

    // curve a=1, b=2, c=3
    auto J = shioda_invariants(octavic_of({1, 0, 3, 0, 2, 0, 1, 0, 1}));
    EXPECT_EQ(J[2], Rational(318));
    EXPECT_EQ(J[3], Rational(17776));
    EXPECT_EQ(J[4], Rational(2509056));
    EXPECT_EQ(J[5], Rational(13491712));
    EXPECT_EQ(J[6], Rational::parse("-1978159104"));
    EXPECT_EQ(J[7], Rational::parse("10089480192"));
    EXPECT_EQ(J[8], Rational::parse("-5140769857536"));
    EXPECT_EQ(J[9], Rational::parse("21144233705472"));
    EXPECT_EQ(J[10], Rational::parse("10266121898164224"));
}

TEST(Shioda, X7Degeneration) {
    auto S = shioda_invariants(x7_curve());
    for (int w = 2; w <= 6; ++w) EXPECT_TRUE(S[w].is_zero()) << w;
    EXPECT_EQ(S[7], Rational::parse("-395300640"));
    EXPECT_EQ(moduli_point(S).branch, ModuliBranch::X7);
}

TEST(Shioda, SquarefreeNeverAllZero) {
    std::mt19937_64 eng(9);
    for (int i = 0; i < 60; ++i) {
        auto S = shioda_invariants(random_octavic(eng));
        bool some = false;
        for (int w = 2; w <= 7; ++w) some = some || !S[w].is_zero();
        EXPECT_TRUE(some);
    }
}

TEST(ModuliPoint, Branches) {
    auto t = moduli_point(shioda_invariants(octavic_of({1, 0, 3, 0, 2, 0, 1, 0, 1})));
    EXPECT_EQ(t.branch, ModuliBranch::T);
    ASSERT_EQ(t.values.size(), 6u);
    EXPECT_EQ(t.values[0], Rational::parse("39498272/4019679"));
    EXPECT_EQ(t.values[1], Rational::parse("69696/2809"));
    EXPECT_EQ(t.values[2], Rational::parse("421616/176649"));
    EXPECT_EQ(t.values[3], Rational::parse("-143096/57717"));
    EXPECT_EQ(t.values[4], Rational::parse("3284336/1396603"));
    EXPECT_EQ(t.values[5], Rational::parse("-107099372032/213042987"));

    auto i = moduli_point(shioda_invariants(u6_curve()));
    EXPECT_EQ(i.branch, ModuliBranch::I);
    EXPECT_TRUE(i.values[0].is_zero() && i.values[2].is_zero() && i.values[4].is_zero());
    EXPECT_EQ(i.values[1], Rational(49, 25));
    EXPECT_EQ(i.values[3], Rational(-343, 125));
    EXPECT_EQ(i.values[5], Rational(7203, 125));

    auto v = moduli_point(shioda_invariants(v8_curve()));
    EXPECT_EQ(v.branch, ModuliBranch::I);
    EXPECT_EQ(v.values[1], Rational(784, 25));
    EXPECT_EQ(v.values[3], Rational(-21952, 125));
    EXPECT_EQ(v.values[5], Rational(-307328, 125));

    // all invariants vanish only for forms with a repeated root
    Form x8(8);
    x8[8] = Rational(1);
    EXPECT_THROW(moduli_point(shioda_invariants(x8)), precondition_error);
}

TEST(ModuliPoint, DispatcherTotality) {
    std::mt19937_64 eng(31);
    for (int i = 0; i < 40; ++i) {
        auto p = moduli_point(shioda_invariants(random_octavic(eng)));
        EXPECT_FALSE(p.values.empty() && p.branch != ModuliBranch::X7);
    }
}

TEST(WeightLaw, DirectionRegression) {
    // J_i(f o M) = det(M)^{4 i} J_i(f); pinned once with a concrete matrix
    Form f = octavic_of({5, -1, 0, 7, 1, 0, -2, 3, 1});
    MoebiusMatrix<Rational> M{Rational(2), Rational(3), Rational(1), Rational(4)};
    auto Sf = shioda_invariants(f);
    auto Sg = shioda_invariants(moebius_act(f, M));
    Rational lambda = M.det().pow(4);
    for (int w = 2; w <= 10; ++w) EXPECT_EQ(Sg[w], lambda.pow(w) * Sf[w]) << w;
}

TEST(Isomorphic, MoebiusTwistAndScaling) {
    std::mt19937_64 eng(17);
    std::uniform_int_distribution<long> ent(-4, 4);
    for (int i = 0; i < 25; ++i) {
        Form f = random_octavic(eng);
        MoebiusMatrix<Rational> M{Rational(ent(eng)), Rational(ent(eng)), Rational(ent(eng)),
                                  Rational(ent(eng))};
        if (M.det().is_zero()) continue;
        EXPECT_TRUE(isomorphic(f, moebius_act(f, M)).isomorphic);
        EXPECT_TRUE(isomorphic(f, Rational(3) * f).isomorphic);
        EXPECT_TRUE(isomorphic(f, f).isomorphic);
    }
}

TEST(Isomorphic, DistinguishesCurves) {
    auto r = isomorphic(s4_curve(), v8_curve());
    EXPECT_FALSE(r.isomorphic);
    EXPECT_FALSE(r.witnesses.empty());
    // symmetric
    EXPECT_FALSE(isomorphic(v8_curve(), s4_curve()).isomorphic);
    // singular inputs rejected
    Form sing = octavic_of({1, 0, 1, 0, 0, 0, 1, 0, 1});
    EXPECT_THROW(isomorphic(sing, v8_curve()), precondition_error);
}
