#pragma once

// Exact scalars: arbitrary precision rationals, Gaussian rationals Q(i) and
// Gaussian integers Z[i]. All arithmetic is exact.

#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace szego {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Canonical text for a rational: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& r);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Parses a string of decimal digits (leading zeros allowed).
Integer parse_decimal_integer(std::string_view digits);

/// Bit size of numerator plus denominator; used as a pivot magnitude.
std::size_t bit_size(const Rational& r);

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    /// Throws std::domain_error on zero.
    GaussianRational inverse() const;

    std::complex<double> to_complex() const;
    std::size_t bit_size() const { return szego::bit_size(re_) + szego::bit_size(im_); }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    Rational re_;
    Rational im_;
};

/// Text form "(re+imi)" / "(re-imi)" used by the canonical polynomial format.
std::string to_string(const GaussianRational& c);
/// Compact form: "(3/5)", "(2i)", "(1/2-1/3i)".
std::string to_compact_string(const GaussianRational& c);
std::ostream& operator<<(std::ostream& os, const GaussianRational& c);

/// Element of Z[i]; used internally by fraction-free elimination.
struct GaussianInteger {
    Integer re;
    Integer im;

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    std::size_t bit_size() const;

    friend GaussianInteger operator+(const GaussianInteger& a, const GaussianInteger& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianInteger operator-(const GaussianInteger& a, const GaussianInteger& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianInteger operator-() const { return {-re, -im}; }
    friend bool operator==(const GaussianInteger& a, const GaussianInteger& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// Exact quotient a / b; the caller guarantees b divides a in Z[i].
/// Throws std::logic_error if the division is not exact.
GaussianInteger divide_exactly(const GaussianInteger& a, const GaussianInteger& b);

}  // namespace szego

namespace Eigen {

template <>
struct NumTraits<szego::GaussianRational> : GenericNumTraits<szego::GaussianRational> {
    using Real = szego::GaussianRational;
    using NonInteger = szego::GaussianRational;
    using Nested = szego::GaussianRational;
    using Literal = szego::GaussianRational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 50,
        MulCost = 200
    };
    static inline int digits10() { return 0; }
    static inline szego::GaussianRational epsilon() { return 0L; }
    static inline szego::GaussianRational dummy_precision() { return 0L; }
};

}  // namespace Eigen

namespace szego {

using ExactMatrix = Eigen::Matrix<GaussianRational, Eigen::Dynamic, Eigen::Dynamic>;
using ExactVector = Eigen::Matrix<GaussianRational, Eigen::Dynamic, 1>;

}  // namespace szego
