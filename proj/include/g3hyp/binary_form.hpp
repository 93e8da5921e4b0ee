/**
 * @file binary_form.hpp
 * @brief Homogeneous binary forms over an exact field: construction, Moebius
 *        action, differentiation, transvectants, resultants, discriminants.
 *
 * The scalar type K is Rational or QuadExt (anything with exact field
 * arithmetic, is_zero(), and construction from Rational works).
 */
#pragma once

#include <g3hyp/rational.hpp>

#include <algorithm>
#include <vector>

namespace g3hyp {

template <class K>
class BinaryForm {
public:
    /// Zero form of the given degree.
    explicit BinaryForm(int degree) : coeffs_(static_cast<std::size_t>(degree) + 1, K(0)) {
        if (degree < 0) throw precondition_error("BinaryForm: negative degree");
    }

    /// coeffs[i] is the coefficient of X^i * Y^(degree - i).
    BinaryForm(int degree, std::vector<K> coeffs) : coeffs_(std::move(coeffs)) {
        if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(degree) + 1)
            throw precondition_error("BinaryForm: coefficient count must be degree + 1");
    }

    /// Homogenize a univariate polynomial p(x) = c[0] + c[1] x + ... into a
    /// form of the given degree (roots at infinity appear when deg p < degree).
    static BinaryForm from_univariate(int degree, const std::vector<K>& ascending) {
        if (static_cast<int>(ascending.size()) > degree + 1)
            throw precondition_error("BinaryForm: polynomial degree exceeds form degree");
        BinaryForm f(degree);
        for (std::size_t i = 0; i < ascending.size(); ++i) f.coeffs_[i] = ascending[i];
        return f;
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const K& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    K& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }
    const std::vector<K>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const K& c) { return c.is_zero(); });
    }

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
        if (a.degree() != b.degree())
            throw precondition_error("BinaryForm: degree mismatch in addition");
        BinaryForm r(a.degree());
        for (int i = 0; i <= a.degree(); ++i) r[i] = a[i] + b[i];
        return r;
    }
    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
        if (a.degree() != b.degree())
            throw precondition_error("BinaryForm: degree mismatch in subtraction");
        BinaryForm r(a.degree());
        for (int i = 0; i <= a.degree(); ++i) r[i] = a[i] - b[i];
        return r;
    }
    friend BinaryForm operator*(const K& s, const BinaryForm& f) {
        BinaryForm r(f.degree());
        for (int i = 0; i <= f.degree(); ++i) r[i] = s * f[i];
        return r;
    }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        BinaryForm r(a.degree() + b.degree());
        for (int i = 0; i <= a.degree(); ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; j <= b.degree(); ++j) r[i + j] += a[i] * b[j];
        }
        return r;
    }

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

    K evaluate(const K& x, const K& y) const {
        // Horner in X with running powers of Y.
        K r(0), ypow(1);
        std::vector<K> xp(coeffs_.size(), K(1));
        for (std::size_t i = 1; i < xp.size(); ++i) xp[i] = xp[i - 1] * x;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            std::size_t yi = coeffs_.size() - 1 - i;
            K term = coeffs_[i] * xp[i];
            K yb(1);
            for (std::size_t k = 0; k < yi; ++k) yb *= y;
            r += term * yb;
        }
        return r;
    }

    /// Dehomogenization f(x, 1) as ascending coefficients.
    std::vector<K> dehomogenize() const { return coeffs_; }

private:
    std::vector<K> coeffs_;
    template <class K2>
    friend BinaryForm<K2> diff_x(const BinaryForm<K2>&);
    template <class K2>
    friend BinaryForm<K2> diff_y(const BinaryForm<K2>&);
};

template <class K>
BinaryForm<K> diff_x(const BinaryForm<K>& f) {
    int n = f.degree();
    if (n == 0) return BinaryForm<K>(0);
    BinaryForm<K> r(n - 1);
    for (int i = 1; i <= n; ++i) r[i - 1] = K(Rational(i)) * f[i];
    return r;
}

template <class K>
BinaryForm<K> diff_y(const BinaryForm<K>& f) {
    int n = f.degree();
    if (n == 0) return BinaryForm<K>(0);
    BinaryForm<K> r(n - 1);
    for (int i = 0; i < n; ++i) r[i] = K(Rational(n - i)) * f[i];
    return r;
}

enum class Var { X, Y };

template <class K>
BinaryForm<K> differentiate(const BinaryForm<K>& f, Var v) {
    return v == Var::X ? diff_x(f) : diff_y(f);
}

/**
 * Classical r-th transvectant with factorial normalization:
 *   (f,g)^r = (m-r)!(n-r)!/(m! n!) * sum_i (-1)^i C(r,i)
 *             d^r f/dX^{r-i}dY^i * d^r g/dX^i dY^{r-i}
 * Result degree is m + n - 2r.
 */
template <class K>
BinaryForm<K> transvectant(const BinaryForm<K>& f, const BinaryForm<K>& g, int r) {
    int m = f.degree(), n = g.degree();
    if (r < 0 || r > m || r > n)
        throw precondition_error("transvectant: order exceeds a degree");
    // partials of f: pf[i] = d^r f / dX^{r-i} dY^i, same for g reversed
    std::vector<BinaryForm<K>> pf, pg;
    pf.reserve(r + 1);
    pg.reserve(r + 1);
    for (int i = 0; i <= r; ++i) {
        BinaryForm<K> df = f;
        for (int k = 0; k < r - i; ++k) df = diff_x(df);
        for (int k = 0; k < i; ++k) df = diff_y(df);
        pf.push_back(df);
        BinaryForm<K> dg = g;
        for (int k = 0; k < i; ++k) dg = diff_x(dg);
        for (int k = 0; k < r - i; ++k) dg = diff_y(dg);
        pg.push_back(dg);
    }
    BinaryForm<K> acc(m + n - 2 * r);
    Rational binom(1);
    for (int i = 0; i <= r; ++i) {
        Rational sign((i % 2 == 0) ? 1 : -1);
        acc = acc + K(sign * binom) * (pf[i] * pg[i]);
        binom = binom * Rational(r - i) / Rational(i + 1);
    }
    Rational pre(1);
    for (int k = m - r + 1; k <= m; ++k) pre /= Rational(k);
    for (int k = n - r + 1; k <= n; ++k) pre /= Rational(k);
    return K(pre) * acc;
}

template <class K>
struct MoebiusMatrix {
    K a, b, c, d;  // acts by X -> aX + bY, Y -> cX + dY

    K det() const { return a * d - b * c; }
};

template <class K>
BinaryForm<K> moebius_act(const BinaryForm<K>& f, const MoebiusMatrix<K>& M) {
    if (M.det().is_zero()) throw precondition_error("moebius_act: singular matrix");
    int n = f.degree();
    // powers of (aX + bY) and (cX + dY)
    std::vector<BinaryForm<K>> pu, pv;
    BinaryForm<K> u(1, {M.b, M.a});  // index i = coeff of X^i: u = aX + bY
    BinaryForm<K> v(1, {M.d, M.c});
    BinaryForm<K> one(0, {K(1)});
    pu.push_back(one);
    pv.push_back(one);
    for (int i = 1; i <= n; ++i) {
        pu.push_back(pu.back() * u);
        pv.push_back(pv.back() * v);
    }
    BinaryForm<K> r(n);
    for (int i = 0; i <= n; ++i) {
        if (f[i].is_zero()) continue;
        r = r + f[i] * (pu[i] * pv[n - i]);
    }
    return r;
}

namespace detail {

template <class K>
int poly_degree(const std::vector<K>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}

template <class K>
std::vector<K> poly_trim(std::vector<K> p) {
    p.resize(static_cast<std::size_t>(poly_degree(p) + 1));
    return p;
}

template <class K>
std::vector<K> poly_rem(std::vector<K> a, const std::vector<K>& b) {
    int db = poly_degree(b);
    int da = poly_degree(a);
    while (da >= db && da >= 0) {
        K q = a[da] / b[db];
        for (int i = 0; i <= db; ++i) a[da - db + i] -= q * b[i];
        a[da] = K(0);  // kill rounding-free residue exactly
        da = poly_degree(a);
    }
    return poly_trim(std::move(a));
}

/// Resultant of two univariate polynomials over a field, by the Euclidean
/// pseudo-remainder recursion.
template <class K>
K poly_resultant(std::vector<K> a, std::vector<K> b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    int da = poly_degree(a), db = poly_degree(b);
    if (da < 0 || db < 0) return K(0);
    K acc(1);
    bool negate = false;
    while (true) {
        da = poly_degree(a);
        db = poly_degree(b);
        if (db == 0) {
            K r = b[0];
            K rp(1);
            for (int i = 0; i < da; ++i) rp *= r;
            K res = acc * rp;
            return negate ? -res : res;
        }
        if (da < db) {
            std::swap(a, b);
            if ((da % 2 == 1) && (db % 2 == 1)) negate = !negate;
            continue;
        }
        std::vector<K> r = poly_rem(a, b);
        int dr = poly_degree(r);
        if (dr < 0) return K(0);
        K lb = b[db];
        K lp(1);
        for (int i = 0; i < da - dr; ++i) lp *= lb;
        acc *= lp;
        if ((da % 2 == 1) && (db % 2 == 1)) negate = !negate;
        a = std::move(b);
        b = std::move(r);
    }
}

/// Monic gcd over a field; {} for gcd of zero polynomials.
template <class K>
std::vector<K> poly_gcd(std::vector<K> a, std::vector<K> b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (poly_degree(b) >= 0) {
        std::vector<K> r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    int d = poly_degree(a);
    if (d >= 0) {
        K lead = a[d];
        for (auto& c : a) c = c / lead;
    }
    return a;
}

}  // namespace detail

/**
 * Discriminant of a binary form of degree n >= 2, normalized as the standard
 * univariate discriminant (-1)^{n(n-1)/2} Res(p, p')/lc(p) of p = f(X, 1)
 * when the X^n coefficient is nonzero. Forms with a root at infinity are
 * handled by an exact unimodular shear, which preserves the value, so the
 * Moebius covariance disc(f o M) = det(M)^{n(n-1)} disc(f) holds everywhere.
 */
template <class K>
K discriminant(const BinaryForm<K>& f) {
    int n = f.degree();
    if (n < 2) throw precondition_error("discriminant: degree must be >= 2");
    if (f.is_zero()) throw precondition_error("discriminant: zero form");
    BinaryForm<K> g = f;
    if (g[n].is_zero()) {
        // shear Y -> cX + Y (det 1) until the leading coefficient is nonzero;
        // f has at most n roots, so some small c works
        long cshift = 0;
        K c(0);
        do {
            ++cshift;
            c = K(Rational(cshift));
            if (f.evaluate(K(1), c).is_zero()) c = K(Rational(-cshift));
        } while (f.evaluate(K(1), c).is_zero());
        g = moebius_act(f, MoebiusMatrix<K>{K(1), K(0), c, K(1)});
    }
    std::vector<K> p = g.dehomogenize();
    std::vector<K> dp(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) dp[i - 1] = K(Rational(static_cast<long>(i))) * p[i];
    K res = detail::poly_resultant(p, dp);
    K disc = res / g[n];
    if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) disc = -disc;
    return disc;
}

/// A binary form is squarefree iff its discriminant is nonzero.
template <class K>
bool is_squarefree(const BinaryForm<K>& f) {
    return !discriminant(f).is_zero();
}

/// Nonconstant common factor of f(X,1) and its X-derivative (exact gcd test).
template <class K>
bool has_repeated_affine_root(const BinaryForm<K>& f) {
    std::vector<K> p = f.dehomogenize();
    std::vector<K> dp(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) dp[i - 1] = K(Rational(static_cast<long>(i))) * p[i];
    return detail::poly_degree(detail::poly_gcd(p, dp)) > 0;
}

}  // namespace g3hyp
