#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dsp {

using Rational = mpq_class;

// Gaussian rational re + im*i. Both parts are kept canonical by GMP.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}
    Scalar(int v) : re_(v) {}
    Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar frac(long num, long den);
    static Scalar gauss(long re, long im) { return Scalar(Rational(re), Rational(im)); }
    // Accepts "p/q", "p", "a+bi" style strings ("3/2-1/4i", "i", "-2i").
    static Scalar parse(const std::string& text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    Scalar inverse() const;
    Scalar pow(long e) const;

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Total order used only for canonical sorting in reports.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        return a.re_ != b.re_ ? a.re_ < b.re_ : a.im_ < b.im_;
    }

    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::string rational_str(const Rational& q);
Rational parse_rational(const std::string& text);

}  // namespace dsp
