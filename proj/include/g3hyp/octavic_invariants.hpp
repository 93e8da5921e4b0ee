/**
 * @file octavic_invariants.hpp
 * @brief The invariant tower for binary octavics: covariants g,k,h,m,n,p,q,
 *        the invariants J2..J10, absolute-invariant moduli points with the
 *        full degeneration ladder, and isomorphism testing.
 */
#pragma once

#include <g3hyp/binary_form.hpp>

#include <array>
#include <string>
#include <vector>

namespace g3hyp {

template <class K>
struct Covariants {
    BinaryForm<K> g, k, h, m, n, p, q;
};

/// g=(f,f)^4, k=(f,f)^6, h=(k,k)^2, m=(f,k)^4, n=(f,h)^4, p=(g,k)^4, q=(g,h)^4.
template <class K>
Covariants<K> covariants(const BinaryForm<K>& f) {
    if (f.degree() != 8) throw precondition_error("covariants: octavic required");
    BinaryForm<K> g = transvectant(f, f, 4);
    BinaryForm<K> k = transvectant(f, f, 6);
    BinaryForm<K> h = transvectant(k, k, 2);
    return Covariants<K>{g,
                         k,
                         h,
                         transvectant(f, k, 4),
                         transvectant(f, h, 4),
                         transvectant(g, k, 4),
                         transvectant(g, h, 4)};
}

/// J2..J10 with weights 2..10; J[i] stores J_{i+2}.
template <class K>
struct ShiodaVector {
    std::array<K, 9> J;

    const K& operator[](int weight) const { return J[static_cast<std::size_t>(weight - 2)]; }
    K& operator[](int weight) { return J[static_cast<std::size_t>(weight - 2)]; }
};

namespace detail {
template <class K>
K scalar_of(const BinaryForm<K>& f) {
    if (f.degree() != 0) throw precondition_error("expected a degree-0 form");
    return f[0];
}
}  // namespace detail

template <class K>
ShiodaVector<K> shioda_invariants(const BinaryForm<K>& f) {
    if (f.degree() != 8) throw precondition_error("shioda_invariants: octavic required");
    auto cov = covariants(f);
    auto sc = [](const BinaryForm<K>& v) { return detail::scalar_of(v); };
    ShiodaVector<K> out;
    out[2] = K(Rational(140)) * sc(transvectant(f, f, 8));
    out[3] = K(Rational(137200, 3)) * sc(transvectant(f, cov.g, 8));
    out[4] = K(Rational(3687936)) * sc(transvectant(cov.k, cov.k, 4));
    out[5] = K(Rational(43025920)) * sc(transvectant(cov.m, cov.k, 4));
    out[6] = K(Rational(2) .pow(14) * Rational(9) * Rational(117649)) *
             sc(transvectant(cov.k, cov.h, 4));
    out[7] = K(Rational(2).pow(14) * Rational(15) * Rational(823543)) *
             sc(transvectant(cov.m, cov.h, 4));
    out[8] = K(Rational(2).pow(17) * Rational(75) * Rational(40353607)) *
             sc(transvectant(cov.p, cov.h, 4));
    out[9] = K(Rational(2).pow(19) * Rational(45) * Rational(40353607)) *
             sc(transvectant(cov.n, cov.h, 4));
    out[10] = K(Rational(2).pow(22) * Rational(225) * Rational(1977326743)) *
              sc(transvectant(cov.q, cov.h, 4));
    return out;
}

enum class ModuliBranch { T, I, H, Jv, K, Tau, X7 };

inline std::string branch_name(ModuliBranch b) {
    switch (b) {
        case ModuliBranch::T: return "T";
        case ModuliBranch::I: return "I";
        case ModuliBranch::H: return "H";
        case ModuliBranch::Jv: return "J";
        case ModuliBranch::K: return "K";
        case ModuliBranch::Tau: return "TAU";
        case ModuliBranch::X7: return "X7";
    }
    return "?";
}

/// Absolute-invariant point with the branch tag of the degeneration ladder.
struct ModuliPoint {
    ModuliBranch branch;
    std::vector<Rational> values;

    friend bool operator==(const ModuliPoint& a, const ModuliPoint& b) {
        return a.branch == b.branch && a.values == b.values;
    }
    friend bool operator!=(const ModuliPoint& a, const ModuliPoint& b) { return !(a == b); }
};

/**
 * Dispatch a Shioda vector to its absolute-invariant system. Branches:
 *   T   J2,J3,J4,J5 all nonzero: t1..t6
 *   I   J2 != 0, some of J3,J4,J5 zero: i1..i6
 *   H   J2 = 0, J3 != 0: h1..h5
 *   J   J2 = J3 = 0, J4 != 0: j1..j4
 *   K   J2 = J3 = J4 = 0, J5 != 0: k1..k3
 *   TAU J2 = .. = J5 = 0, J6 != 0: tau1, tau2
 *   X7  J2 = .. = J6 = 0 (single curve y^2 = x^7 - 1)
 */
inline ModuliPoint moduli_point(const ShiodaVector<Rational>& S) {
    const Rational &J2 = S[2], &J3 = S[3], &J4 = S[4], &J5 = S[5], &J6 = S[6], &J7 = S[7],
                   &J8 = S[8];
    bool all_zero = J2.is_zero() && J3.is_zero() && J4.is_zero() && J5.is_zero() &&
                    J6.is_zero() && J7.is_zero();
    if (all_zero)
        throw precondition_error("moduli_point: singular octavic (J2..J7 all vanish)");
    if (!J2.is_zero()) {
        if (!J3.is_zero() && !J4.is_zero() && !J5.is_zero()) {
            return {ModuliBranch::T,
                    {J3.pow(2) / J2.pow(3), J4 / J2.pow(2), J5 / (J2 * J3), J6 / (J2 * J4),
                     J7 / (J2 * J5), J8 / J2.pow(4)}};
        }
        return {ModuliBranch::I,
                {J3.pow(2) / J2.pow(3), J4 / J2.pow(2), J5.pow(2) / J2.pow(5), J6 / J2.pow(3),
                 J7.pow(2) / J2.pow(7), J8 / J2.pow(4)}};
    }
    if (!J3.is_zero()) {
        return {ModuliBranch::H,
                {J4.pow(3) / J3.pow(4), J5.pow(3) / J3.pow(5), J6 / J3.pow(2),
                 J7.pow(3) / J3.pow(7), J8.pow(3) / J3.pow(8)}};
    }
    if (!J4.is_zero()) {
        return {ModuliBranch::Jv,
                {J5.pow(4) / J4.pow(5), J6.pow(2) / J4.pow(3), J7.pow(4) / J4.pow(7),
                 J8 / J4.pow(2)}};
    }
    if (!J5.is_zero()) {
        return {ModuliBranch::K,
                {J6.pow(5) / J5.pow(6), J7.pow(5) / J5.pow(7), J8.pow(5) / J5.pow(8)}};
    }
    if (!J6.is_zero()) {
        return {ModuliBranch::Tau, {J7.pow(6) / J6.pow(7), J8.pow(3) / J6.pow(4)}};
    }
    return {ModuliBranch::X7, {}};
}

struct IsomorphismResult {
    bool isomorphic;
    std::vector<std::string> witnesses;

    explicit operator bool() const { return isomorphic; }
};

/**
 * Equivalence over the algebraic closure, decided without root extraction:
 * the zero patterns of (J2..J10) must agree, and for every pair of weights
 * i, j with both invariants nonzero, Ji(f1)^j * Jj(f2)^i = Jj(f1)^i * Ji(f2)^j.
 */
template <class K>
IsomorphismResult isomorphic(const BinaryForm<K>& f1, const BinaryForm<K>& f2) {
    if (!is_squarefree(f1) || !is_squarefree(f2))
        throw precondition_error("isomorphic: singular input octavic");
    ShiodaVector<K> a = shioda_invariants(f1), b = shioda_invariants(f2);
    IsomorphismResult res{true, {}};
    for (int i = 2; i <= 10; ++i) {
        if (a[i].is_zero() != b[i].is_zero()) {
            res.isomorphic = false;
            res.witnesses.push_back("zero pattern differs at J" + std::to_string(i));
            return res;
        }
    }
    for (int i = 2; i <= 10; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = i + 1; j <= 10; ++j) {
            if (a[j].is_zero()) continue;
            K lhs(1), rhs(1);
            for (int e = 0; e < j; ++e) lhs *= a[i];
            for (int e = 0; e < i; ++e) lhs *= b[j];
            for (int e = 0; e < i; ++e) rhs *= a[j];
            for (int e = 0; e < j; ++e) rhs *= b[i];
            if (lhs != rhs) {
                res.isomorphic = false;
                res.witnesses.push_back("cross-ratio J" + std::to_string(i) + "/J" +
                                        std::to_string(j) + " differs");
                return res;
            }
            res.witnesses.push_back("cross-ratio J" + std::to_string(i) + "/J" +
                                    std::to_string(j) + " consistent");
        }
    }
    return res;
}

}  // namespace g3hyp
