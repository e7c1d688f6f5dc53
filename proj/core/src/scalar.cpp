#include "dsp/scalar.hpp"

#include <cctype>

namespace dsp {

Scalar Scalar::frac(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    if (sgn(im_) == 0) return Scalar(Rational(1) / re_);
    Rational n = norm();
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (sgn(o.im_) == 0) {
        if (sgn(o.re_) == 0) throw std::domain_error("division by zero scalar");
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result(1), base(*this);
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::string rational_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    for (char c : text)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw std::invalid_argument("bad rational: " + text);
    std::string t = text[0] == '+' ? text.substr(1) : text;
    Rational q;
    if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string Scalar::str() const {
    if (sgn(im_) == 0) return rational_str(re_);
    std::string imag;
    if (im_ == 1) imag = "i";
    else if (im_ == -1) imag = "-i";
    else imag = rational_str(im_) + "i";
    if (sgn(re_) == 0) return imag;
    return rational_str(re_) + (sgn(im_) > 0 ? "+" : "") + imag;
}

Scalar Scalar::parse(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty scalar");
    if (s.back() != 'i') return Scalar(parse_rational(s));
    std::string body = s.substr(0, s.size() - 1);
    // split at the last sign that is not leading and not inside "p/q"
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    std::string re_part = split == std::string::npos ? "" : body.substr(0, split);
    std::string im_part = split == std::string::npos ? body : body.substr(split);
    Rational im;
    if (im_part.empty() || im_part == "+") im = 1;
    else if (im_part == "-") im = -1;
    else im = parse_rational(im_part);
    Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
    return Scalar(re, im);
}

}  // namespace dsp
