#include "szego/ellipsoid.hpp"

#include "szego/errors.hpp"

#include <map>

namespace szego {

Ellipsoid::Ellipsoid(ExactMatrix q, std::vector<Rational> center)
    : q_(std::move(q)), center_(std::move(center)), r_(center_.empty() ? 1 : center_.size()) {
    const auto n = static_cast<Eigen::Index>(center_.size());
    if (n == 0) throw std::invalid_argument("ellipsoid dimension must be positive");
    if (q_.rows() != n || q_.cols() != n) throw std::invalid_argument("Q must be dim x dim");
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            if (!q_(i, j).is_real()) throw std::invalid_argument("Q must be real");
            if (!(q_(i, j) == q_(j, i))) throw std::invalid_argument("Q must be symmetric");
        }
    for (Eigen::Index k = 1; k <= n; ++k) {
        const GaussianRational minor = FractionFreeSolver(q_.topLeftCorner(k, k)).determinant();
        if (!(minor.real() > 0)) throw std::invalid_argument("Q must be positive definite");
    }

    const std::size_t dim = center_.size();
    std::vector<PolyRealN> shifted;
    for (std::size_t j = 0; j < dim; ++j)
        shifted.push_back(PolyRealN::variable(dim, j) - PolyRealN::constant(dim, GaussianRational(center_[j])));
    r_ = PolyRealN::constant(dim, -1L);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const auto& qij = q_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            if (!qij.is_zero()) r_ += (shifted[i] * shifted[j]) * qij;
        }
}

Ellipse::Ellipse(Rational a, Rational b, Rational h, Rational k)
    : a_(std::move(a)), b_(std::move(b)), h_(std::move(h)), k_(std::move(k)) {
    if (!(a_ > 0) || !(b_ > 0)) throw std::invalid_argument("ellipse semi-axes must be positive");
    r_ = xy_to_zzbar(to_ellipsoid().defining_poly());
    d_r_ = d_dz(r_);
    dbar_r_ = d_dzbar(r_);
}

Ellipsoid Ellipse::to_ellipsoid() const {
    ExactMatrix q = ExactMatrix::Constant(2, 2, GaussianRational{});
    q(0, 0) = GaussianRational(Rational(1) / (a_ * a_));
    q(1, 1) = GaussianRational(Rational(1) / (b_ * b_));
    return Ellipsoid(q, {h_, k_});
}

std::vector<PolyRealN> FischerSystem::solve(std::span<const PolyRealN> rhs) const {
    std::map<std::vector<Exponent>, Eigen::Index, GradedLexLess> row_of;
    for (std::size_t j = 0; j < basis_.size(); ++j) row_of.emplace(basis_[j], static_cast<Eigen::Index>(j));

    ExactMatrix b = ExactMatrix::Constant(matrix_.rows(), static_cast<Eigen::Index>(rhs.size()), GaussianRational{});
    for (std::size_t col = 0; col < rhs.size(); ++col) {
        if (rhs[col].dim() != dim_) throw std::invalid_argument("right-hand side has wrong dimension");
        for (const auto& [alpha, c] : rhs[col].terms()) {
            const auto it = row_of.find(alpha);
            if (it == row_of.end()) throw std::invalid_argument("right-hand side degree exceeds the Fischer system bound");
            b(it->second, static_cast<Eigen::Index>(col)) = c;
        }
    }
    const auto x = solver_->solve(b);
    if (!x) throw InternalError("Fischer system reported inconsistent despite invertibility");

    std::vector<PolyRealN> out;
    out.reserve(rhs.size());
    for (std::size_t col = 0; col < rhs.size(); ++col) {
        PolyRealN q(dim_);
        for (std::size_t j = 0; j < basis_.size(); ++j)
            q.add_term(basis_[j], (*x)(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(col)));
        out.push_back(std::move(q));
    }
    return out;
}

FischerSystem fischer_system(const Ellipsoid& e, int m) {
    if (m < 0) throw std::invalid_argument("Fischer degree bound must be nonnegative");
    FischerSystem fs;
    fs.degree_bound_ = m;
    fs.dim_ = e.dim();
    fs.basis_ = real_monomials(e.dim(), m);
    const auto side = static_cast<Eigen::Index>(fs.basis_.size());

    std::map<std::vector<Exponent>, Eigen::Index, GradedLexLess> row_of;
    for (Eigen::Index j = 0; j < side; ++j) row_of.emplace(fs.basis_[static_cast<std::size_t>(j)], j);

    fs.matrix_ = ExactMatrix::Constant(side, side, GaussianRational{});
    for (Eigen::Index j = 0; j < side; ++j) {
        const PolyRealN image =
            laplacian(e.defining_poly() * PolyRealN::monomial(fs.basis_[static_cast<std::size_t>(j)]));
        for (const auto& [alpha, c] : image.terms()) fs.matrix_(row_of.at(alpha), j) = c;
    }
    fs.solver_ = std::make_shared<const FractionFreeSolver>(fs.matrix_);
    if (!fs.solver_->is_invertible()) throw InternalError("Fischer matrix is singular");
    fs.determinant_ = fs.solver_->determinant();
    return fs;
}

std::vector<PolyRealN> harmonic_extensions(const Ellipsoid& e, std::span<const PolyRealN> ps) {
    int max_degree = -1;
    for (const auto& p : ps) {
        if (p.dim() != e.dim()) throw std::invalid_argument("polynomial dimension does not match the ellipsoid");
        max_degree = std::max(max_degree, p.degree());
    }
    std::vector<PolyRealN> out(ps.begin(), ps.end());
    if (max_degree <= 1) return out;

    std::vector<std::size_t> pending;
    std::vector<PolyRealN> rhs;
    for (std::size_t j = 0; j < ps.size(); ++j)
        if (ps[j].degree() >= 2) {
            pending.push_back(j);
            rhs.push_back(laplacian(ps[j]));
        }
    const auto qs = fischer_system(e, max_degree - 2).solve(rhs);
    for (std::size_t k = 0; k < pending.size(); ++k) out[pending[k]] -= e.defining_poly() * qs[k];
    return out;
}

PolyRealN harmonic_extension(const Ellipsoid& e, const PolyRealN& p) {
    return harmonic_extensions(e, std::span<const PolyRealN>(&p, 1)).front();
}

std::vector<PolyZZbar> harmonic_extensions(const Ellipse& e, std::span<const PolyZZbar> ps) {
    std::vector<PolyRealN> real;
    real.reserve(ps.size());
    for (const auto& p : ps) real.push_back(zzbar_to_xy(p));
    const auto extended = harmonic_extensions(e.to_ellipsoid(), real);
    std::vector<PolyZZbar> out;
    out.reserve(ps.size());
    for (const auto& u : extended) out.push_back(xy_to_zzbar(u));
    return out;
}

PolyZZbar harmonic_extension(const Ellipse& e, const PolyZZbar& p) {
    return harmonic_extensions(e, std::span<const PolyZZbar>(&p, 1)).front();
}

bool is_harmonic(const PolyRealN& p) { return laplacian(p).is_zero(); }
bool is_harmonic(const PolyZZbar& p) { return laplacian(p).is_zero(); }

namespace {

Rational rational_from_json(const nlohmann::json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    throw std::invalid_argument("expected a rational string or an integer, got " + v.dump());
}

}  // namespace

Ellipse ellipse_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b"))
        throw std::invalid_argument("ellipse JSON needs 'a' and 'b'");
    return Ellipse(rational_from_json(j["a"]), rational_from_json(j["b"]),
                   j.contains("h") ? rational_from_json(j["h"]) : Rational(0),
                   j.contains("k") ? rational_from_json(j["k"]) : Rational(0));
}

Ellipsoid ellipsoid_from_json(const nlohmann::json& j) {
    if (j.is_object() && j.contains("a")) return ellipse_from_json(j).to_ellipsoid();
    if (!j.is_object() || !j.contains("dim") || !j.contains("Q") || !j.contains("center"))
        throw std::invalid_argument("ellipsoid JSON needs 'dim', 'Q' and 'center'");
    const auto n = j["dim"].get<Eigen::Index>();
    if (n <= 0) throw std::invalid_argument("ellipsoid dimension must be positive");

    std::vector<Rational> flat;
    for (const auto& entry : j["Q"]) {
        if (entry.is_array())
            for (const auto& v : entry) flat.push_back(rational_from_json(v));
        else
            flat.push_back(rational_from_json(entry));
    }
    if (static_cast<Eigen::Index>(flat.size()) != n * n) throw std::invalid_argument("Q must have dim*dim entries");
    ExactMatrix q(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) q(r, c) = GaussianRational(flat[static_cast<std::size_t>(r * n + c)]);

    std::vector<Rational> center;
    for (const auto& v : j["center"]) center.push_back(rational_from_json(v));
    if (static_cast<Eigen::Index>(center.size()) != n) throw std::invalid_argument("center must have dim entries");
    return Ellipsoid(std::move(q), std::move(center));
}

nlohmann::json to_json(const Ellipsoid& e) {
    nlohmann::json q = nlohmann::json::array();
    for (Eigen::Index r = 0; r < e.q().rows(); ++r)
        for (Eigen::Index c = 0; c < e.q().cols(); ++c) q.push_back(to_string(e.q()(r, c).real()));
    nlohmann::json center = nlohmann::json::array();
    for (const auto& c : e.center()) center.push_back(to_string(c));
    return {{"dim", e.dim()}, {"Q", q}, {"center", center}};
}

nlohmann::json to_json(const Ellipse& e) {
    return {{"a", to_string(e.a())}, {"b", to_string(e.b())}, {"h", to_string(e.h())}, {"k", to_string(e.k())}};
}

}  // namespace szego
