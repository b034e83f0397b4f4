#pragma once

// Ellipsoids in R^n, planar ellipses, and the exact polynomial Dirichlet
// solver built on the Fischer operator q -> Laplacian(r q).

#include "szego/exact_solve.hpp"
#include "szego/polynomial.hpp"

#include <json.hpp>

#include <memory>
#include <span>
#include <vector>

namespace szego {

/// {x : (x - c)^T Q (x - c) < 1} with Q symmetric positive definite.
class Ellipsoid {
public:
    /// Throws std::invalid_argument unless Q is real, symmetric and positive
    /// definite (checked by exact leading principal minors) and the center
    /// has matching dimension.
    Ellipsoid(ExactMatrix q, std::vector<Rational> center);

    std::size_t dim() const { return center_.size(); }
    const ExactMatrix& q() const { return q_; }
    const std::vector<Rational>& center() const { return center_; }

    /// r(x) = (x - c)^T Q (x - c) - 1.
    const PolyRealN& defining_poly() const { return r_; }

private:
    ExactMatrix q_;
    std::vector<Rational> center_;
    PolyRealN r_;
};

/// (x - h)^2/a^2 + (y - k)^2/b^2 < 1.
class Ellipse {
public:
    /// Throws std::invalid_argument unless a, b > 0.
    Ellipse(Rational a, Rational b, Rational h = 0, Rational k = 0);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& h() const { return h_; }
    const Rational& k() const { return k_; }
    bool is_disc() const { return a_ == b_; }

    /// r in (z, zbar) form.
    const PolyZZbar& defining_poly_zzbar() const { return r_; }
    /// d r / d zbar and d r / d z; degree 1 and conjugate to each other.
    const PolyZZbar& dbar_r() const { return dbar_r_; }
    const PolyZZbar& d_r() const { return d_r_; }

    Ellipsoid to_ellipsoid() const;

    friend bool operator==(const Ellipse& l, const Ellipse& r) {
        return l.a_ == r.a_ && l.b_ == r.b_ && l.h_ == r.h_ && l.k_ == r.k_;
    }

private:
    Rational a_, b_, h_, k_;
    PolyZZbar r_;
    PolyZZbar dbar_r_;
    PolyZZbar d_r_;
};

/// Matrix of q -> Laplacian(r q) on polynomials of degree <= m, in the
/// graded-lex monomial basis. Construction certifies invertibility exactly.
class FischerSystem {
public:
    int degree_bound() const { return degree_bound_; }
    const ExactMatrix& matrix() const { return matrix_; }
    const std::vector<std::vector<Exponent>>& basis() const { return basis_; }
    const GaussianRational& determinant() const { return determinant_; }

    /// Solves Laplacian(r q) = rhs for q of degree <= m, one solution per input.
    std::vector<PolyRealN> solve(std::span<const PolyRealN> rhs) const;

private:
    friend FischerSystem fischer_system(const Ellipsoid& e, int m);

    int degree_bound_ = 0;
    std::size_t dim_ = 1;
    ExactMatrix matrix_;
    std::vector<std::vector<Exponent>> basis_;
    GaussianRational determinant_;
    std::shared_ptr<const FractionFreeSolver> solver_;
};

/// Throws InternalError if the matrix is singular; that cannot happen for a
/// valid ellipsoid.
FischerSystem fischer_system(const Ellipsoid& e, int m);

/// The harmonic polynomial u with the same boundary values as p:
/// u = p - r q where Laplacian(r q) = Laplacian(p). Throws std::invalid_argument
/// on a dimension mismatch.
PolyRealN harmonic_extension(const Ellipsoid& e, const PolyRealN& p);
/// Batch form sharing one Fischer system across all inputs.
std::vector<PolyRealN> harmonic_extensions(const Ellipsoid& e, std::span<const PolyRealN> ps);

/// Harmonic extension on an ellipse, computed in (x, y) and converted back.
PolyZZbar harmonic_extension(const Ellipse& e, const PolyZZbar& p);
std::vector<PolyZZbar> harmonic_extensions(const Ellipse& e, std::span<const PolyZZbar> ps);

bool is_harmonic(const PolyRealN& p);
bool is_harmonic(const PolyZZbar& p);

/// {dim, Q: [[...]] or row-major flat list, center: [...]} with rational
/// strings (or integers); the planar form {a, b, h, k} is also accepted.
Ellipsoid ellipsoid_from_json(const nlohmann::json& j);
Ellipse ellipse_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Ellipsoid& e);
nlohmann::json to_json(const Ellipse& e);

}  // namespace szego
