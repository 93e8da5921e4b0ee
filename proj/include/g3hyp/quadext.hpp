/**
 * @file quadext.hpp
 * @brief Elements x + y*sqrt(d) of a real quadratic extension of Q.
 *
 * The radicand is canonicalized to a squarefree integer, so equality and
 * combinability are decidable by component comparison. Pure rationals embed
 * with coeff = 0 and combine with any radicand.
 */
#pragma once

#include <g3hyp/rational.hpp>

#include <string>

namespace g3hyp {

class QuadExt {
public:
    QuadExt() : base_(0), coeff_(0), rad_(0) {}
    QuadExt(Rational r) : base_(std::move(r)), coeff_(0), rad_(0) {}  // NOLINT
    QuadExt(long n) : base_(n), coeff_(0), rad_(0) {}                 // NOLINT

    /// Build base + coeff*sqrt(radicand); the radicand is normalized to its
    /// squarefree integer part (a square radicand collapses to a rational).
    QuadExt(Rational base, Rational coeff, const Rational& radicand)
        : base_(std::move(base)), coeff_(std::move(coeff)), rad_(0) {
        if (coeff_.is_zero()) return;
        if (radicand.is_zero()) throw precondition_error("QuadExt: zero radicand");
        auto [s, r] = squarefree_part(radicand);
        if (s == 1) {  // perfect square: collapses into Q
            base_ += coeff_ * r;
            coeff_ = Rational(0);
            return;
        }
        rad_ = s;
        coeff_ *= r;
    }

    const Rational& base() const { return base_; }
    const Rational& coeff() const { return coeff_; }
    /// Canonical squarefree radicand; 0 for pure rationals.
    const Integer& radicand() const { return rad_; }

    bool is_rational() const { return coeff_.is_zero(); }
    bool is_zero() const { return base_.is_zero() && coeff_.is_zero(); }
    const Rational& rational_value() const {
        if (!is_rational()) throw precondition_error("QuadExt: not a rational value");
        return base_;
    }

    QuadExt conjugate() const { return raw(base_, -coeff_, rad_); }

    /// Field norm (x+y*sqrt(d))(x-y*sqrt(d)) = x^2 - d*y^2.
    Rational norm() const { return base_ * base_ - Rational(rad_) * coeff_ * coeff_; }

    QuadExt operator-() const { return raw(-base_, -coeff_, rad_); }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        Integer d = merge_radicand(a, b);
        return raw(a.base_ + b.base_, a.coeff_ + b.coeff_, d);
    }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) { return a + (-b); }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        Integer d = merge_radicand(a, b);
        return raw(a.base_ * b.base_ + Rational(d) * a.coeff_ * b.coeff_,
                   a.base_ * b.coeff_ + a.coeff_ * b.base_, d);
    }
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b) { return a * b.inverse(); }

    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    QuadExt inverse() const {
        if (is_zero()) throw precondition_error("QuadExt: division by zero");
        Rational n = norm();  // nonzero: d squarefree != 1 can't be a rational square
        return raw(base_ / n, -coeff_ / n, rad_);
    }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        return a.base_ == b.base_ && a.coeff_ == b.coeff_ &&
               (a.coeff_.is_zero() || a.rad_ == b.rad_);
    }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

    std::string str() const {
        if (is_rational()) return base_.str();
        return base_.str() + " + " + coeff_.str() + "*sqrt(" + rad_.get_str() + ")";
    }

private:
    static QuadExt raw(Rational base, Rational coeff, Integer rad) {
        QuadExt e;
        e.base_ = std::move(base);
        e.coeff_ = std::move(coeff);
        e.rad_ = e.coeff_.is_zero() ? Integer(0) : std::move(rad);
        return e;
    }

    static Integer merge_radicand(const QuadExt& a, const QuadExt& b) {
        if (a.coeff_.is_zero()) return b.rad_;
        if (b.coeff_.is_zero()) return a.rad_;
        if (a.rad_ != b.rad_)
            throw precondition_error("QuadExt: mismatched radicands " + a.rad_.get_str() +
                                     " vs " + b.rad_.get_str());
        return a.rad_;
    }

    Rational base_, coeff_;
    Integer rad_;
};

enum class QuadExtOp { add, sub, mul, div };

/// Spec-facing dispatcher over the four field operations.
inline QuadExt quadext_arithmetic(const QuadExt& lhs, const QuadExt& rhs, QuadExtOp op) {
    switch (op) {
        case QuadExtOp::add: return lhs + rhs;
        case QuadExtOp::sub: return lhs - rhs;
        case QuadExtOp::mul: return lhs * rhs;
        case QuadExtOp::div: return lhs / rhs;
    }
    throw precondition_error("quadext_arithmetic: bad op");
}

}  // namespace g3hyp
