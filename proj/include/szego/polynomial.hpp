#pragma once

// Sparse polynomials in the conjugate pair (z, zbar) and in n real variables.
// Both are templated on the coefficient field; the exact instantiations over
// Q(i) are the ones used by the symbolic algorithms, while the complex<double>
// instantiations hold numerical results.

#include "szego/gaussian_rational.hpp"

#include <algorithm>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace szego {

inline bool is_zero(const GaussianRational& c) { return c.is_zero(); }
template <typename T>
bool is_zero(const std::complex<T>& c) {
    return c == std::complex<T>{};
}
inline GaussianRational conj(const GaussianRational& c) { return c.conj(); }
using std::conj;

using Exponent = std::uint32_t;

inline Exponent add_exponents(Exponent a, Exponent b) {
    if (a > std::numeric_limits<Exponent>::max() - b) throw std::overflow_error("polynomial exponent overflow");
    return a + b;
}

/// Exponents (a, b) of the monomial z^a zbar^b.
struct ExponentPair {
    Exponent a = 0;
    Exponent b = 0;

    std::uint64_t degree() const { return std::uint64_t{a} + b; }
    friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

/// Graded-lexicographic order: total degree first, then the z exponent.
struct GradedLexLess {
    bool operator()(const ExponentPair& l, const ExponentPair& r) const {
        if (l.degree() != r.degree()) return l.degree() < r.degree();
        return l.a < r.a;
    }
    bool operator()(const std::vector<Exponent>& l, const std::vector<Exponent>& r) const {
        std::uint64_t dl = 0;
        std::uint64_t dr = 0;
        for (auto e : l) dl += e;
        for (auto e : r) dr += e;
        if (dl != dr) return dl < dr;
        return l < r;
    }
};

template <typename Scalar>
class ZZbarPolynomial {
public:
    using Terms = std::map<ExponentPair, Scalar, GradedLexLess>;

    ZZbarPolynomial() = default;

    static ZZbarPolynomial constant(const Scalar& c) { return monomial(0, 0, c); }
    static ZZbarPolynomial monomial(Exponent a, Exponent b, const Scalar& c = Scalar(1L)) {
        ZZbarPolynomial p;
        p.add_term({a, b}, c);
        return p;
    }
    static ZZbarPolynomial z() { return monomial(1, 0); }
    static ZZbarPolynomial zbar() { return monomial(0, 1); }

    /// Adds c to the coefficient of z^a zbar^b; zero results are erased.
    void add_term(ExponentPair e, const Scalar& c) {
        if (szego::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (szego::is_zero(it->second)) terms_.erase(it);
        }
    }

    Scalar coeff(Exponent a, Exponent b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? Scalar{} : it->second;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// -1 for the zero polynomial.
    int degree() const {
        return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
    }

    bool is_holomorphic() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.b == 0; });
    }

    ZZbarPolynomial operator-() const {
        ZZbarPolynomial out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }
    ZZbarPolynomial& operator+=(const ZZbarPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    ZZbarPolynomial& operator-=(const ZZbarPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    ZZbarPolynomial& operator*=(const Scalar& s) {
        if (szego::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend ZZbarPolynomial operator+(ZZbarPolynomial l, const ZZbarPolynomial& r) { return l += r; }
    friend ZZbarPolynomial operator-(ZZbarPolynomial l, const ZZbarPolynomial& r) { return l -= r; }
    friend ZZbarPolynomial operator*(ZZbarPolynomial p, const Scalar& s) { return p *= s; }
    friend ZZbarPolynomial operator*(const Scalar& s, ZZbarPolynomial p) { return p *= s; }
    friend ZZbarPolynomial operator*(const ZZbarPolynomial& l, const ZZbarPolynomial& r) {
        ZZbarPolynomial out;
        for (const auto& [el, cl] : l.terms_)
            for (const auto& [er, cr] : r.terms_)
                out.add_term({add_exponents(el.a, er.a), add_exponents(el.b, er.b)}, cl * cr);
        return out;
    }
    ZZbarPolynomial& operator*=(const ZZbarPolynomial& o) { return *this = *this * o; }
    friend bool operator==(const ZZbarPolynomial& l, const ZZbarPolynomial& r) { return l.terms_ == r.terms_; }

private:
    Terms terms_;
};

template <typename Scalar>
ZZbarPolynomial<Scalar> pow(const ZZbarPolynomial<Scalar>& p, unsigned k) {
    auto out = ZZbarPolynomial<Scalar>::constant(Scalar(1L));
    for (unsigned j = 0; j < k; ++j) out *= p;
    return out;
}

/// z^a zbar^b -> zbar^a z^b with conjugated coefficients.
template <typename Scalar>
ZZbarPolynomial<Scalar> conjugate(const ZZbarPolynomial<Scalar>& p) {
    ZZbarPolynomial<Scalar> out;
    for (const auto& [e, c] : p.terms()) out.add_term({e.b, e.a}, conj(c));
    return out;
}

template <typename Scalar>
ZZbarPolynomial<Scalar> d_dz(const ZZbarPolynomial<Scalar>& p) {
    ZZbarPolynomial<Scalar> out;
    for (const auto& [e, c] : p.terms())
        if (e.a > 0) out.add_term({e.a - 1, e.b}, c * Scalar(static_cast<long>(e.a)));
    return out;
}

template <typename Scalar>
ZZbarPolynomial<Scalar> d_dzbar(const ZZbarPolynomial<Scalar>& p) {
    ZZbarPolynomial<Scalar> out;
    for (const auto& [e, c] : p.terms())
        if (e.b > 0) out.add_term({e.a, e.b - 1}, c * Scalar(static_cast<long>(e.b)));
    return out;
}

/// 4 d/dz d/dzbar.
template <typename Scalar>
ZZbarPolynomial<Scalar> laplacian(const ZZbarPolynomial<Scalar>& p) {
    ZZbarPolynomial<Scalar> out;
    for (const auto& [e, c] : p.terms())
        if (e.a > 0 && e.b > 0)
            out.add_term({e.a - 1, e.b - 1}, c * Scalar(4L * e.a * e.b));
    return out;
}

/// Horner-free evaluation; the point is passed as z, zbar is its conjugate.
template <typename Scalar, typename Point>
Point evaluate(const ZZbarPolynomial<Scalar>& p, const Point& z) {
    const Point zb = conj(z);
    Point sum{};
    for (const auto& [e, c] : p.terms()) {
        Point term = Point(c);
        for (Exponent j = 0; j < e.a; ++j) term *= z;
        for (Exponent j = 0; j < e.b; ++j) term *= zb;
        sum += term;
    }
    return sum;
}

/// Float evaluation of an exact polynomial.
inline std::complex<double> evaluate(const ZZbarPolynomial<GaussianRational>& p, std::complex<double> z) {
    const std::complex<double> zb = std::conj(z);
    std::complex<double> sum{};
    for (const auto& [e, c] : p.terms()) {
        std::complex<double> term = c.to_complex();
        for (Exponent j = 0; j < e.a; ++j) term *= z;
        for (Exponent j = 0; j < e.b; ++j) term *= zb;
        sum += term;
    }
    return sum;
}

/// Rounds every coefficient to complex<double>.
inline ZZbarPolynomial<std::complex<double>> to_numeric(const ZZbarPolynomial<GaussianRational>& p) {
    ZZbarPolynomial<std::complex<double>> out;
    for (const auto& [e, c] : p.terms()) out.add_term(e, c.to_complex());
    return out;
}

/// Polynomial in dim real variables x_1..x_n.
template <typename Scalar>
class RealPolynomial {
public:
    using MultiIndex = std::vector<Exponent>;
    using Terms = std::map<MultiIndex, Scalar, GradedLexLess>;

    explicit RealPolynomial(std::size_t dim = 1) : dim_(dim) {
        if (dim == 0) throw std::invalid_argument("polynomial dimension must be positive");
    }

    static RealPolynomial constant(std::size_t dim, const Scalar& c) {
        RealPolynomial p(dim);
        p.add_term(MultiIndex(dim, 0), c);
        return p;
    }
    static RealPolynomial monomial(MultiIndex alpha, const Scalar& c = Scalar(1L)) {
        RealPolynomial p(alpha.size());
        p.add_term(std::move(alpha), c);
        return p;
    }
    /// The coordinate function x_j (0-based).
    static RealPolynomial variable(std::size_t dim, std::size_t j) {
        MultiIndex alpha(dim, 0);
        alpha.at(j) = 1;
        return monomial(std::move(alpha));
    }

    void add_term(const MultiIndex& alpha, const Scalar& c) {
        if (alpha.size() != dim_) throw std::invalid_argument("multi-index length does not match dimension");
        if (szego::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(alpha, c);
        if (!inserted) {
            it->second += c;
            if (szego::is_zero(it->second)) terms_.erase(it);
        }
    }

    Scalar coeff(const MultiIndex& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? Scalar{} : it->second;
    }

    std::size_t dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        if (terms_.empty()) return -1;
        std::uint64_t d = 0;
        for (auto e : terms_.rbegin()->first) d += e;
        return static_cast<int>(d);
    }

    RealPolynomial operator-() const {
        RealPolynomial out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }
    RealPolynomial& operator+=(const RealPolynomial& o) {
        check_dim(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    RealPolynomial& operator-=(const RealPolynomial& o) {
        check_dim(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    RealPolynomial& operator*=(const Scalar& s) {
        if (szego::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend RealPolynomial operator+(RealPolynomial l, const RealPolynomial& r) { return l += r; }
    friend RealPolynomial operator-(RealPolynomial l, const RealPolynomial& r) { return l -= r; }
    friend RealPolynomial operator*(RealPolynomial p, const Scalar& s) { return p *= s; }
    friend RealPolynomial operator*(const Scalar& s, RealPolynomial p) { return p *= s; }
    friend RealPolynomial operator*(const RealPolynomial& l, const RealPolynomial& r) {
        l.check_dim(r);
        RealPolynomial out(l.dim_);
        MultiIndex alpha(l.dim_);
        for (const auto& [el, cl] : l.terms_)
            for (const auto& [er, cr] : r.terms_) {
                for (std::size_t j = 0; j < l.dim_; ++j) alpha[j] = add_exponents(el[j], er[j]);
                out.add_term(alpha, cl * cr);
            }
        return out;
    }
    RealPolynomial& operator*=(const RealPolynomial& o) { return *this = *this * o; }
    friend bool operator==(const RealPolynomial& l, const RealPolynomial& r) {
        return l.dim_ == r.dim_ && l.terms_ == r.terms_;
    }

private:
    void check_dim(const RealPolynomial& o) const {
        if (o.dim_ != dim_) throw std::invalid_argument("polynomial dimension mismatch");
    }

    std::size_t dim_;
    Terms terms_;
};

template <typename Scalar>
RealPolynomial<Scalar> pow(const RealPolynomial<Scalar>& p, unsigned k) {
    auto out = RealPolynomial<Scalar>::constant(p.dim(), Scalar(1L));
    for (unsigned j = 0; j < k; ++j) out *= p;
    return out;
}

/// d/dx_j
template <typename Scalar>
RealPolynomial<Scalar> partial(const RealPolynomial<Scalar>& p, std::size_t j) {
    RealPolynomial<Scalar> out(p.dim());
    for (const auto& [alpha, c] : p.terms()) {
        if (alpha.at(j) == 0) continue;
        auto beta = alpha;
        --beta[j];
        out.add_term(beta, c * Scalar(static_cast<long>(alpha[j])));
    }
    return out;
}

template <typename Scalar>
RealPolynomial<Scalar> laplacian(const RealPolynomial<Scalar>& p) {
    RealPolynomial<Scalar> out(p.dim());
    for (const auto& [alpha, c] : p.terms())
        for (std::size_t j = 0; j < p.dim(); ++j) {
            if (alpha[j] < 2) continue;
            auto beta = alpha;
            beta[j] -= 2;
            out.add_term(beta, c * Scalar(static_cast<long>(alpha[j]) * (alpha[j] - 1)));
        }
    return out;
}

template <typename Scalar, typename Point>
Point evaluate(const RealPolynomial<Scalar>& p, std::span<const Point> x) {
    if (x.size() != p.dim()) throw std::invalid_argument("evaluation point has wrong dimension");
    Point sum{};
    for (const auto& [alpha, c] : p.terms()) {
        Point term = Point(c);
        for (std::size_t j = 0; j < alpha.size(); ++j)
            for (Exponent e = 0; e < alpha[j]; ++e) term *= x[j];
        sum += term;
    }
    return sum;
}

using PolyZZbar = ZZbarPolynomial<GaussianRational>;
using PolyRealN = RealPolynomial<GaussianRational>;
using NumericPolyZZbar = ZZbarPolynomial<std::complex<double>>;

/// Substitutes x = (z + zbar)/2, y = (z - zbar)/(2i). Requires dim 2.
PolyZZbar xy_to_zzbar(const PolyRealN& p);
/// Substitutes z = x + iy, zbar = x - iy.
PolyRealN zzbar_to_xy(const PolyZZbar& p);

/// Monomials z^a zbar^b with a + b <= n, in graded-lex order.
std::vector<ExponentPair> zzbar_monomials(int n);
/// Multi-indices of length dim with |alpha| <= n, in graded-lex order.
std::vector<std::vector<Exponent>> real_monomials(std::size_t dim, int n);

}  // namespace szego
