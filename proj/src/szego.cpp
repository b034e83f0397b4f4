#include "szego/szego.hpp"

#include "szego/errors.hpp"

#include <algorithm>
#include <map>

namespace szego {

namespace {

using RowIndex = std::map<ExponentPair, Eigen::Index, GradedLexLess>;

RowIndex rows_for_degree(int n) {
    RowIndex rows;
    for (const auto& e : zzbar_monomials(n)) rows.emplace(e, static_cast<Eigen::Index>(rows.size()));
    return rows;
}

void put_column(ExactMatrix& m, const RowIndex& rows, Eigen::Index col, const PolyZZbar& p) {
    for (const auto& [e, c] : p.terms()) m(rows.at(e), col) = c;
}

PolyZZbar combine(const std::vector<PolyZZbar>& basis, const ExactMatrix& x, Eigen::Index offset) {
    PolyZZbar out;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto& c = x(offset + static_cast<Eigen::Index>(j), 0);
        if (!c.is_zero()) out += basis[j] * c;
    }
    return out;
}

std::vector<PolyZZbar> monomial_polys(int n) {
    std::vector<PolyZZbar> out;
    if (n < 0) return out;
    for (const auto& e : zzbar_monomials(n)) out.push_back(PolyZZbar::monomial(e.a, e.b));
    return out;
}

std::vector<PolyZZbar> operator_A_batch(const Ellipse& e, const std::vector<PolyZZbar>& ps) {
    const auto extended = harmonic_extensions(e, ps);
    std::vector<PolyZZbar> out;
    out.reserve(ps.size());
    for (const auto& u : extended) out.push_back(e.d_r() * d_dzbar(u));
    return out;
}

ExactMatrix coefficient_column(const RowIndex& rows, const PolyZZbar& f) {
    ExactMatrix b = ExactMatrix::Constant(static_cast<Eigen::Index>(rows.size()), 1, GaussianRational{});
    put_column(b, rows, 0, f);
    return b;
}

}  // namespace

PolyZZbar operator_A(const Ellipse& e, const PolyZZbar& p) { return operator_A_batch(e, {p}).front(); }

bool kernel_membership(const Ellipse& e, const PolyZZbar& p) {
    if (p.is_zero()) return true;
    const int n = p.degree();
    const RowIndex rows = rows_for_degree(n);
    const auto holomorphic = n + 1;
    const auto vanishing = monomial_polys(n - 2);

    ExactMatrix a = ExactMatrix::Constant(static_cast<Eigen::Index>(rows.size()),
                                          holomorphic + static_cast<Eigen::Index>(vanishing.size()),
                                          GaussianRational{});
    for (int k = 0; k <= n; ++k) a(rows.at({static_cast<Exponent>(k), 0}), k) = 1L;
    for (std::size_t j = 0; j < vanishing.size(); ++j)
        put_column(a, rows, holomorphic + static_cast<Eigen::Index>(j), e.defining_poly_zzbar() * vanishing[j]);
    return FractionFreeSolver(a).solve(coefficient_column(rows, p)).has_value();
}

SzegoDecomposition szego_project(const Ellipse& e, const PolyZZbar& f, const SzegoOptions& options) {
    const int n = options.ambient_degree.value_or(std::max(f.degree(), 0));
    if (n < f.degree()) throw std::invalid_argument("ambient degree is below the degree of f");
    if (n < 0) throw std::invalid_argument("ambient degree must be nonnegative");

    // Unknown blocks: h over z^0..z^N, p over all monomials of P_N, q over P_{N-2}.
    const RowIndex rows = rows_for_degree(n);
    const auto p_basis = monomial_polys(n);
    const auto q_basis = monomial_polys(n - 2);
    const auto a_images = operator_A_batch(e, p_basis);

    const Eigen::Index h_count = n + 1;
    const auto p_count = static_cast<Eigen::Index>(p_basis.size());
    const auto q_count = static_cast<Eigen::Index>(q_basis.size());
    ExactMatrix a = ExactMatrix::Constant(static_cast<Eigen::Index>(rows.size()), h_count + p_count + q_count,
                                          GaussianRational{});
    for (int k = 0; k <= n; ++k) a(rows.at({static_cast<Exponent>(k), 0}), k) = 1L;
    for (Eigen::Index j = 0; j < p_count; ++j) put_column(a, rows, h_count + j, a_images[static_cast<std::size_t>(j)]);
    for (Eigen::Index j = 0; j < q_count; ++j)
        put_column(a, rows, h_count + p_count + j, e.defining_poly_zzbar() * q_basis[static_cast<std::size_t>(j)]);

    const auto x = FractionFreeSolver(a, options.solve).solve(coefficient_column(rows, f));
    if (!x) throw InternalError("Szego block system is inconsistent");

    SzegoDecomposition d;
    d.input = f;
    d.N = n;
    for (int k = 0; k <= n; ++k) d.projection.add_term({static_cast<Exponent>(k), 0}, (*x)(k, 0));
    d.preimage = combine(p_basis, *x, h_count);
    d.cofactor = combine(q_basis, *x, h_count + p_count);
    return d;
}

bool DecompositionCertificate::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CertificateCheck& c) { return c.passed; });
}

DecompositionCertificate verify_decomposition(const SzegoDecomposition& d, const Ellipse& e) {
    DecompositionCertificate cert;
    cert.residual = d.input - d.projection - operator_A(e, d.preimage) - e.defining_poly_zzbar() * d.cofactor;

    auto add = [&cert](std::string name, bool ok, std::string detail) {
        cert.checks.push_back({std::move(name), ok, std::move(detail)});
    };
    add("residual_zero", cert.residual.is_zero(),
        cert.residual.is_zero() ? "f = h + A(p) + r q exactly" : "residual has " + std::to_string(cert.residual.size()) + " terms");
    add("projection_holomorphic", d.projection.is_holomorphic(), "");
    add("projection_degree", d.projection.degree() <= d.N,
        "degree " + std::to_string(d.projection.degree()) + " <= " + std::to_string(d.N));
    add("input_degree", d.input.degree() <= d.N,
        "degree " + std::to_string(d.input.degree()) + " <= " + std::to_string(d.N));
    add("preimage_degree", d.preimage.degree() <= d.N,
        "degree " + std::to_string(d.preimage.degree()) + " <= " + std::to_string(d.N));
    const int q_bound = d.N < 2 ? -1 : d.N - 2;
    add("cofactor_degree", d.cofactor.degree() <= q_bound,
        "degree " + std::to_string(d.cofactor.degree()) + " <= " + std::to_string(q_bound));
    return cert;
}

}  // namespace szego
