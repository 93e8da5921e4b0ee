/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rational arithmetic (GMP-backed).
 *
 * Rational is the base scalar of the whole library. Values are always kept
 * in lowest terms with a positive denominator; all arithmetic is exact.
 * Serialization is the string "p/q" (or "p" when q = 1), base 10.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace g3hyp {

/// Thrown when a mathematical precondition of an operation is violated.
class precondition_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown when an input string cannot be parsed.
class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Integer = mpz_class;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                      // NOLINT(google-explicit-constructor)
    Rational(const Integer& n) : v_(n) {}            // NOLINT(google-explicit-constructor)
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw precondition_error("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw precondition_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parse "p/q" or "p" (base 10, optional leading '-', no whitespace).
    static Rational parse(std::string_view s);

    const mpq_class& raw() const { return v_; }
    Integer numerator() const { return Integer(v_.get_num()); }
    Integer denominator() const { return Integer(v_.get_den()); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw precondition_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw precondition_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        mpq_class r(1), base = v_;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return Rational(std::move(r));
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    mpq_class v_;
};

inline Rational Rational::parse(std::string_view s) {
    auto check_int = [](std::string_view t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = (slash == std::string_view::npos) ? "1" : s.substr(slash + 1);
    if (!check_int(num) || !check_int(den) || den[0] == '-')
        throw parse_error("Rational: bad literal '" + std::string(s) + "'");
    Integer n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw parse_error("Rational: zero denominator in '" + std::string(s) + "'");
    return Rational(n, d);
}

namespace detail {

/// Pollard-Brent rho; returns a nontrivial factor of composite odd n > 1.
inline Integer pollard_rho(const Integer& n, unsigned long seed) {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(seed);
    while (true) {
        Integer y = rng.get_z_range(n - 3) + 2;
        Integer c = rng.get_z_range(n - 1) + 1;
        Integer x = y, d = 1, q = 1, ys = y;
        const unsigned long m = 128;
        unsigned long r = 1;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = q * ((x > y) ? x - y : y - x) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r <<= 1;
        }
        if (d == n) {
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                Integer diff = (x > ys) ? x - ys : ys - x;
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (d != n) return d;
    }
}

inline void factor_into(Integer n, std::vector<std::pair<Integer, unsigned long>>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
        for (auto& [p, e] : out)
            if (p == n) { ++e; return; }
        out.emplace_back(n, 1);
        return;
    }
    // strip a perfect power first; keeps rho off squares
    unsigned long k = 2;
    for (; k <= 64; ++k) {
        Integer root;
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
            std::vector<std::pair<Integer, unsigned long>> sub;
            factor_into(root, sub);
            for (auto& [p, e] : sub) {
                bool found = false;
                for (auto& [q, f] : out)
                    if (q == p) { f += e * k; found = true; break; }
                if (!found) out.emplace_back(p, e * k);
            }
            return;
        }
        if (mpz_sizeinbase(n.get_mpz_t(), 2) / k < 2) break;
    }
    Integer d = pollard_rho(n, 0x9e3779b97f4a7c15UL + mpz_get_ui(n.get_mpz_t()));
    factor_into(d, out);
    factor_into(n / d, out);
}

/// Prime factorization of n >= 1 (small trial division, then Pollard-Brent).
inline std::vector<std::pair<Integer, unsigned long>> factor(Integer n) {
    std::vector<std::pair<Integer, unsigned long>> out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L,
                   53L, 59L, 61L, 67L, 71L, 73L, 79L, 83L, 89L, 97L}) {
        if (n == 1) return out;
        unsigned long e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(Integer(p), e);
    }
    if (n > 1) factor_into(n, out);
    return out;
}

}  // namespace detail

struct SquarefreeDecomposition {
    Integer squarefree;   ///< squarefree integer s
    Rational root;        ///< positive rational r with q = s * r^2
};

/// Decompose q != 0 as q = s * r^2 with s a squarefree integer and r > 0 rational.
inline SquarefreeDecomposition squarefree_part(const Rational& q) {
    if (q.is_zero()) throw precondition_error("squarefree_part: zero input");
    // q = n/d = (n*d) / d^2, so only the squarefree split of n*d matters.
    Integer nd = q.numerator() * q.denominator();
    int sign = sgn(nd);
    Integer s = (sign < 0) ? Integer(-1) : Integer(1);
    Integer rnum = 1;
    for (auto& [p, e] : detail::factor(Integer(abs(nd)))) {
        if (e & 1) s *= p;
        for (unsigned long i = 0; i < e / 2; ++i) rnum *= p;
    }
    return {s, Rational(rnum, q.denominator())};
}

/// Exact square root when q is a square in Q; nullopt otherwise (negatives included).
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q.sign() < 0) return std::nullopt;
    if (q.is_zero()) return Rational(0);
    Integer n = q.numerator(), d = q.denominator();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0)
        return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

}  // namespace g3hyp
