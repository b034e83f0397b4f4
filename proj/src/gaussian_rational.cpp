#include "szego/gaussian_rational.hpp"

#include <ostream>
#include <stdexcept>

namespace szego {

namespace mp = boost::multiprecision;

std::string to_string(const Rational& r) {
    const Integer num = mp::numerator(r);
    const Integer den = mp::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

/// Boost reads a leading 0 as an octal prefix.
Integer decimal_integer(std::string_view digits) {
    while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
    return Integer{std::string(digits)};
}

}  // namespace

Integer parse_decimal_integer(std::string_view digits) {
    if (!all_digits(digits)) throw std::invalid_argument("malformed integer '" + std::string(digits) + "'");
    return decimal_integer(digits);
}

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text =
        slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    const Integer num = decimal_integer(num_text);
    const Integer den = decimal_integer(den_text);
    if (den.is_zero()) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

std::size_t bit_size(const Rational& r) {
    const Integer num = mp::numerator(r);
    const Integer den = mp::denominator(r);
    std::size_t bits = den == 1 ? 0 : mp::msb(den) + 1;
    if (!num.is_zero()) bits += mp::msb(mp::abs(num)) + 1;
    return bits;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero Gaussian rational");
    const Rational n = norm();
    return {re_ / n, -im_ / n};
}

std::complex<double> GaussianRational::to_complex() const {
    return {re_.convert_to<double>(), im_.convert_to<double>()};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.im_.is_zero()) {
        if (o.re_.is_zero()) throw std::domain_error("division by zero Gaussian rational");
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string to_string(const GaussianRational& c) {
    std::string out = "(" + to_string(c.real());
    if (c.imag() < 0)
        out += "-" + to_string(Rational(-c.imag()));
    else
        out += "+" + to_string(c.imag());
    return out + "i)";
}

std::string to_compact_string(const GaussianRational& c) {
    if (c.is_real()) return "(" + to_string(c.real()) + ")";
    const std::string im = to_string(c.imag()) + "i";
    if (c.real().is_zero()) return "(" + im + ")";
    const std::string sep = c.imag() < 0 ? "" : "+";
    return "(" + to_string(c.real()) + sep + im + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& c) { return os << to_compact_string(c); }

std::size_t GaussianInteger::bit_size() const {
    std::size_t bits = 0;
    if (!re.is_zero()) bits += mp::msb(mp::abs(re)) + 1;
    if (!im.is_zero()) bits += mp::msb(mp::abs(im)) + 1;
    return bits;
}

GaussianInteger divide_exactly(const GaussianInteger& a, const GaussianInteger& b) {
    if (b.im.is_zero()) {
        GaussianInteger q{a.re / b.re, a.im / b.re};
        if (q.re * b.re != a.re || q.im * b.re != a.im)
            throw std::logic_error("inexact Gaussian integer division");
        return q;
    }
    const Integer n = b.re * b.re + b.im * b.im;
    const Integer re = a.re * b.re + a.im * b.im;
    const Integer im = a.im * b.re - a.re * b.im;
    GaussianInteger q{re / n, im / n};
    if (q.re * n != re || q.im * n != im) throw std::logic_error("inexact Gaussian integer division");
    return q;
}

}  // namespace szego
