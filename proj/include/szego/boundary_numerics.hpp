#pragma once

// Floating-point oracle for the symbolic results: trapezoid quadrature on the
// ellipse boundary, Gauss-Legendre area quadrature, and least-squares Szego
// and Bergman projections onto holomorphic monomials.

#include "szego/ellipsoid.hpp"
#include "szego/szego.hpp"

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <optional>
#include <string>

namespace szego {

using cdouble = std::complex<double>;

enum class Weighting {
    /// omega = 1, the classical Szego projection.
    Unweighted,
    /// omega = 1 / |dbar r|, the weight for which P_N maps to HP_N.
    InverseDbarR,
};

/// Nodes z_j = (h + a cos t_j) + i (k + b sin t_j), t_j = 2 pi j / M.
struct BoundaryGrid {
    Ellipse ellipse;
    Weighting weighting = Weighting::Unweighted;
    int M = 0;
    Eigen::VectorXd t;
    Eigen::VectorXcd z;
    /// Trapezoid arclength weights |z'(t_j)| 2 pi / M.
    Eigen::VectorXd ds;
    Eigen::VectorXd omega;
    /// Unit tangent i dbar r / |dbar r|.
    Eigen::VectorXcd tangent;

    double perimeter() const;
};

/// Throws std::invalid_argument unless M >= 16 and even.
BoundaryGrid boundary_grid(const Ellipse& e, int M, Weighting weighting);

Eigen::VectorXcd sample(const BoundaryGrid& g, const PolyZZbar& f);
Eigen::VectorXcd sample(const BoundaryGrid& g, const std::function<cdouble(cdouble)>& f);

/// sum_j f_j conj(g_j) omega_j ds_j, compensated and in index order.
/// Throws std::invalid_argument on a length mismatch.
cdouble inner_product(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g, const BoundaryGrid& grid);

/// Least-squares projection onto phi_k(z) = ((z - center) / scale)^k, k <= degree.
struct NumericalProjection {
    Eigen::VectorXcd coefficients;
    cdouble center;
    double scale = 1;
    /// Weighted norm of f - projection.
    double residual_norm = 0;
    /// Ratio of extreme singular values of the weighted basis matrix.
    double condition_estimate = 1;
    std::optional<std::string> warning;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    cdouble operator()(cdouble z) const;
    /// Coefficients of z^k after expanding the shifted, scaled basis.
    Eigen::VectorXcd monomial_coefficients() const;
};

/// Condition estimates above this attach a warning to the projection.
inline constexpr double kConditionWarningThreshold = 1e12;

/// Throws std::invalid_argument unless basis_degree >= 0 and
/// basis_degree + 1 <= M / 4.
NumericalProjection numerical_szego(const BoundaryGrid& g, const Eigen::VectorXcd& values, int basis_degree);
NumericalProjection numerical_szego(const BoundaryGrid& g, const PolyZZbar& f, int basis_degree);

/// Tensor quadrature over the ellipse in elliptic-polar coordinates
/// x = h + a rho cos theta, y = k + b rho sin theta: Gauss-Legendre in rho,
/// trapezoid in theta, area element a b rho drho dtheta.
struct AreaGrid {
    Eigen::VectorXcd z;
    Eigen::VectorXd weight;
};
AreaGrid area_grid(const Ellipse& e, int quad_order);

/// Gauss-Legendre nodes and weights on [-1, 1] (Golub-Welsch).
std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int n);

cdouble area_inner_product(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g, const AreaGrid& grid);

/// Throws std::invalid_argument unless quad_order >= 2 (basis_degree + degree(f)) + 4.
NumericalProjection numerical_bergman(const Ellipse& e, const PolyZZbar& f, int basis_degree, int quad_order);

struct SzbarConstancyReport {
    NumericalProjection projection;
    /// Norm of the coefficients of phi_1, phi_2, ...
    double deviation_from_constant = 0;
    /// Norm of the coefficients of phi_2, phi_3, ...
    double deviation_from_span_1_z = 0;
};

/// Unweighted numerical projection of zbar.
SzbarConstancyReport szbar_constancy_experiment(const Ellipse& e, int M, int basis_degree);

/// Max coefficient error when projecting a function that already lies in
/// the basis span (1 + phi_1 + ... + phi_d); the rounding floor of the grid.
double quadrature_floor(const BoundaryGrid& g, int basis_degree);

/// The disc with the same perimeter, centered at the ellipse's center.
Ellipse matched_disc(const Ellipse& e, int M);

struct AffineNormalization {
    cdouble rotation;
    cdouble shift;
    cdouble operator()(cdouble z) const { return rotation * (z - shift); }
};

/// rotation = exp(-i arg(a) / 2), shift = (conj(a) b + conj(b)) / (1 - |a|^2).
/// Throws std::invalid_argument when |a| = 1.
AffineNormalization normalize_affine(cdouble a, cdouble b);

struct HarmonicCheckReport {
    NumericalProjection szego;
    NumericalProjection bergman;
    double max_deviation = 0;
};

/// Unweighted Szego versus Bergman projection of a harmonic polynomial on a
/// disc. Throws std::invalid_argument for non-harmonic input or a != b.
HarmonicCheckReport harmonic_szego_bergman_check(const Ellipse& disc, const PolyRealN& p, int basis_degree, int M,
                                                 int quad_order);

struct ComparisonReport {
    SzegoDecomposition exact;
    NumericalProjection numeric;
    double max_coeff_dev = 0;
};

/// Exact weighted projection versus the weighted-grid least-squares one,
/// compared on monomial coefficients up to basis_degree.
ComparisonReport compare_symbolic_numeric(const Ellipse& e, const PolyZZbar& f, int M, int basis_degree);

/// Monomial coefficients of an exact holomorphic polynomial, length degree + 1.
Eigen::VectorXcd holomorphic_coefficients(const PolyZZbar& h, int degree);

}  // namespace szego
