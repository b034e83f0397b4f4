#include "szego/boundary_numerics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace szego {

namespace {

constexpr double kPi = std::numbers::pi;

double to_double(const Rational& r) { return r.convert_to<double>(); }

cdouble center_of(const Ellipse& e) { return {to_double(e.h()), to_double(e.k())}; }

double scale_of(const Ellipse& e) { return std::max(to_double(e.a()), to_double(e.b())); }

/// Neumaier summation of one real sequence.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0;
    double carry_ = 0;
};

cdouble weighted_sum(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g, const Eigen::VectorXd& w) {
    CompensatedSum re, im;
    for (Eigen::Index j = 0; j < f.size(); ++j) {
        const cdouble term = f[j] * std::conj(g[j]) * w[j];
        re.add(term.real());
        im.add(term.imag());
    }
    return {re.value(), im.value()};
}

/// Columns phi_k(z_j), k = 0..degree, built by repeated multiplication.
Eigen::MatrixXcd basis_matrix(const Eigen::VectorXcd& z, cdouble center, double scale, int degree) {
    Eigen::MatrixXcd v(z.size(), degree + 1);
    for (Eigen::Index j = 0; j < z.size(); ++j) {
        const cdouble w = (z[j] - center) / scale;
        cdouble p = 1;
        for (int k = 0; k <= degree; ++k) {
            v(j, k) = p;
            p *= w;
        }
    }
    return v;
}

/// min || diag(sqrt(w)) (V c - f) || by Householder QR.
NumericalProjection least_squares(const Eigen::VectorXcd& z, const Eigen::VectorXd& w, const Eigen::VectorXcd& f,
                                  cdouble center, double scale, int degree) {
    const Eigen::VectorXd root = w.cwiseSqrt();
    const Eigen::MatrixXcd v = root.asDiagonal() * basis_matrix(z, center, scale, degree);
    const Eigen::VectorXcd rhs = root.asDiagonal() * f;

    NumericalProjection out;
    out.center = center;
    out.scale = scale;
    out.coefficients = v.householderQr().solve(rhs);
    out.residual_norm = (rhs - v * out.coefficients).norm();

    const Eigen::VectorXd sigma = Eigen::JacobiSVD<Eigen::MatrixXcd>(v).singularValues();
    const double smallest = sigma[sigma.size() - 1];
    out.condition_estimate = smallest > 0 ? sigma[0] / smallest : std::numeric_limits<double>::infinity();
    if (out.condition_estimate > kConditionWarningThreshold)
        out.warning = "basis matrix is ill-conditioned (condition estimate " + std::to_string(out.condition_estimate) +
                      ")";
    return out;
}

double binomial(int n, int k) {
    double c = 1;
    for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
    return c;
}

}  // namespace

double BoundaryGrid::perimeter() const {
    CompensatedSum s;
    for (Eigen::Index j = 0; j < ds.size(); ++j) s.add(ds[j]);
    return s.value();
}

BoundaryGrid boundary_grid(const Ellipse& e, int M, Weighting weighting) {
    if (M < 16 || M % 2 != 0) throw std::invalid_argument("node count must be even and at least 16");
    const double a = to_double(e.a());
    const double b = to_double(e.b());
    const cdouble c = center_of(e);
    const auto dbar_r = to_numeric(e.dbar_r());

    BoundaryGrid g{e, weighting, M, Eigen::VectorXd(M), Eigen::VectorXcd(M), Eigen::VectorXd(M),
                   Eigen::VectorXd(M), Eigen::VectorXcd(M)};
    for (int j = 0; j < M; ++j) {
        const double t = 2 * kPi * j / M;
        const double ct = std::cos(t);
        const double st = std::sin(t);
        g.t[j] = t;
        g.z[j] = c + cdouble(a * ct, b * st);
        g.ds[j] = std::hypot(a * st, b * ct) * 2 * kPi / M;
        const cdouble n = evaluate(dbar_r, g.z[j]);
        g.omega[j] = weighting == Weighting::InverseDbarR ? 1 / std::abs(n) : 1.0;
        g.tangent[j] = cdouble(0, 1) * n / std::abs(n);
    }
    return g;
}

Eigen::VectorXcd sample(const BoundaryGrid& g, const PolyZZbar& f) {
    const auto fn = to_numeric(f);
    Eigen::VectorXcd v(g.z.size());
    for (Eigen::Index j = 0; j < g.z.size(); ++j) v[j] = evaluate(fn, g.z[j]);
    return v;
}

Eigen::VectorXcd sample(const BoundaryGrid& g, const std::function<cdouble(cdouble)>& f) {
    Eigen::VectorXcd v(g.z.size());
    for (Eigen::Index j = 0; j < g.z.size(); ++j) v[j] = f(g.z[j]);
    return v;
}

cdouble inner_product(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g, const BoundaryGrid& grid) {
    if (f.size() != grid.z.size() || g.size() != grid.z.size())
        throw std::invalid_argument("sample length does not match the grid");
    return weighted_sum(f, g, grid.omega.cwiseProduct(grid.ds));
}

cdouble NumericalProjection::operator()(cdouble z) const {
    const cdouble w = (z - center) / scale;
    cdouble acc = 0;
    for (Eigen::Index k = coefficients.size() - 1; k >= 0; --k) acc = acc * w + coefficients[k];
    return acc;
}

Eigen::VectorXcd NumericalProjection::monomial_coefficients() const {
    const int d = degree();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(d + 1);
    for (int k = 0; k <= d; ++k) {
        const cdouble ck = coefficients[k] / std::pow(scale, k);
        for (int j = 0; j <= k; ++j) out[j] += ck * binomial(k, j) * std::pow(-center, k - j);
    }
    return out;
}

NumericalProjection numerical_szego(const BoundaryGrid& g, const Eigen::VectorXcd& values, int basis_degree) {
    if (basis_degree < 0) throw std::invalid_argument("basis degree must be nonnegative");
    if (basis_degree + 1 > g.M / 4) throw std::invalid_argument("basis degree too large for the node count");
    if (values.size() != g.z.size()) throw std::invalid_argument("sample length does not match the grid");
    return least_squares(g.z, g.omega.cwiseProduct(g.ds), values, center_of(g.ellipse), scale_of(g.ellipse),
                         basis_degree);
}

NumericalProjection numerical_szego(const BoundaryGrid& g, const PolyZZbar& f, int basis_degree) {
    return numerical_szego(g, sample(g, f), basis_degree);
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("quadrature order must be positive");
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double beta = k / std::sqrt(4.0 * k * k - 1);
        jacobi(k, k - 1) = beta;
        jacobi(k - 1, k) = beta;
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jacobi);
    Eigen::VectorXd nodes = eig.eigenvalues();
    Eigen::VectorXd weights = 2 * eig.eigenvectors().row(0).cwiseAbs2().transpose();
    return {std::move(nodes), std::move(weights)};
}

AreaGrid area_grid(const Ellipse& e, int quad_order) {
    if (quad_order < 1) throw std::invalid_argument("quadrature order must be positive");
    const double a = to_double(e.a());
    const double b = to_double(e.b());
    const cdouble c = center_of(e);
    const auto [x, wx] = gauss_legendre(quad_order);

    AreaGrid g{Eigen::VectorXcd(quad_order * quad_order), Eigen::VectorXd(quad_order * quad_order)};
    Eigen::Index idx = 0;
    for (int i = 0; i < quad_order; ++i) {
        const double rho = (x[i] + 1) / 2;
        const double w_rho = wx[i] / 2;
        for (int j = 0; j < quad_order; ++j) {
            const double theta = 2 * kPi * j / quad_order;
            g.z[idx] = c + cdouble(a * rho * std::cos(theta), b * rho * std::sin(theta));
            g.weight[idx] = a * b * rho * w_rho * 2 * kPi / quad_order;
            ++idx;
        }
    }
    return g;
}

cdouble area_inner_product(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g, const AreaGrid& grid) {
    if (f.size() != grid.z.size() || g.size() != grid.z.size())
        throw std::invalid_argument("sample length does not match the grid");
    return weighted_sum(f, g, grid.weight);
}

NumericalProjection numerical_bergman(const Ellipse& e, const PolyZZbar& f, int basis_degree, int quad_order) {
    if (basis_degree < 0) throw std::invalid_argument("basis degree must be nonnegative");
    if (quad_order < 2 * (basis_degree + std::max(f.degree(), 0)) + 4)
        throw std::invalid_argument("quadrature order too small for the basis and input degrees");
    const AreaGrid g = area_grid(e, quad_order);
    const auto fn = to_numeric(f);
    Eigen::VectorXcd values(g.z.size());
    for (Eigen::Index j = 0; j < g.z.size(); ++j) values[j] = evaluate(fn, g.z[j]);
    return least_squares(g.z, g.weight, values, center_of(e), scale_of(e), basis_degree);
}

SzbarConstancyReport szbar_constancy_experiment(const Ellipse& e, int M, int basis_degree) {
    const BoundaryGrid g = boundary_grid(e, M, Weighting::Unweighted);
    SzbarConstancyReport report;
    report.projection = numerical_szego(g, PolyZZbar::zbar(), basis_degree);
    const auto& c = report.projection.coefficients;
    report.deviation_from_constant = c.tail(c.size() - 1).norm();
    report.deviation_from_span_1_z = c.size() > 2 ? c.tail(c.size() - 2).norm() : 0.0;
    return report;
}

double quadrature_floor(const BoundaryGrid& g, int basis_degree) {
    const cdouble center = center_of(g.ellipse);
    const double scale = scale_of(g.ellipse);
    const Eigen::VectorXcd probe = sample(g, [&](cdouble z) {
        const cdouble w = (z - center) / scale;
        cdouble acc = 0;
        for (int k = 0; k <= basis_degree; ++k) acc = acc * w + 1.0;
        return acc;
    });
    const auto p = numerical_szego(g, probe, basis_degree);
    const double err = (p.coefficients - Eigen::VectorXcd::Ones(basis_degree + 1)).cwiseAbs().maxCoeff();
    return std::max(err, std::numeric_limits<double>::epsilon());
}

Ellipse matched_disc(const Ellipse& e, int M) {
    const double radius = boundary_grid(e, M, Weighting::Unweighted).perimeter() / (2 * kPi);
    return Ellipse(Rational(radius), Rational(radius), e.h(), e.k());
}

AffineNormalization normalize_affine(cdouble a, cdouble b) {
    const double denom = 1 - std::norm(a);
    if (denom == 0) throw std::invalid_argument("|a| = 1 makes the normalizing map singular");
    return {std::polar(1.0, -std::arg(a) / 2), (std::conj(a) * b + std::conj(b)) / denom};
}

HarmonicCheckReport harmonic_szego_bergman_check(const Ellipse& disc, const PolyRealN& p, int basis_degree, int M,
                                                 int quad_order) {
    if (!disc.is_disc()) throw std::invalid_argument("the harmonic check needs a disc (a = b)");
    if (p.dim() != 2) throw std::invalid_argument("the harmonic check needs a polynomial in x, y");
    if (!is_harmonic(p)) throw std::invalid_argument("input polynomial is not harmonic");
    const PolyZZbar f = xy_to_zzbar(p);
    HarmonicCheckReport report;
    report.szego = numerical_szego(boundary_grid(disc, M, Weighting::Unweighted), f, basis_degree);
    report.bergman = numerical_bergman(disc, f, basis_degree, quad_order);
    report.max_deviation =
        (report.szego.monomial_coefficients() - report.bergman.monomial_coefficients()).cwiseAbs().maxCoeff();
    return report;
}

Eigen::VectorXcd holomorphic_coefficients(const PolyZZbar& h, int degree) {
    if (!h.is_holomorphic()) throw std::invalid_argument("polynomial is not holomorphic");
    if (h.degree() > degree) throw std::invalid_argument("polynomial degree exceeds the requested length");
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(degree + 1);
    for (const auto& [exp, c] : h.terms()) out[exp.a] = c.to_complex();
    return out;
}

ComparisonReport compare_symbolic_numeric(const Ellipse& e, const PolyZZbar& f, int M, int basis_degree) {
    ComparisonReport report;
    report.exact = szego_project(e, f);
    report.numeric = numerical_szego(boundary_grid(e, M, Weighting::InverseDbarR), f, basis_degree);
    const int len = std::max(basis_degree, report.exact.projection.degree());
    Eigen::VectorXcd numeric = Eigen::VectorXcd::Zero(len + 1);
    numeric.head(basis_degree + 1) = report.numeric.monomial_coefficients();
    report.max_coeff_dev = (numeric - holomorphic_coefficients(report.exact.projection, len)).cwiseAbs().maxCoeff();
    return report;
}

}  // namespace szego
