#include "szego/division.hpp"

#include "szego/exact_solve.hpp"

#include <map>

namespace szego {

namespace {

template <typename Poly, typename Key, typename MakeMonomial>
std::optional<Poly> divide_impl(const Poly& p, const Poly& r, const std::vector<Key>& quotient_basis,
                                MakeMonomial make_monomial) {
    if (r.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (p.is_zero()) return p;
    if (p.degree() < r.degree()) return std::nullopt;

    std::vector<Poly> columns;
    columns.reserve(quotient_basis.size());
    std::map<Key, Eigen::Index, GradedLexLess> row_of;
    auto register_terms = [&row_of](const Poly& poly) {
        for (const auto& [key, c] : poly.terms())
            row_of.try_emplace(key, static_cast<Eigen::Index>(row_of.size()));
    };
    for (const auto& key : quotient_basis) {
        columns.push_back(r * make_monomial(key));
        register_terms(columns.back());
    }
    // A term of p outside every column's support already rules out divisibility.
    for (const auto& [key, c] : p.terms())
        if (!row_of.contains(key)) return std::nullopt;

    const auto rows = static_cast<Eigen::Index>(row_of.size());
    ExactMatrix a = ExactMatrix::Constant(rows, static_cast<Eigen::Index>(columns.size()), GaussianRational{});
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [key, c] : columns[j].terms()) a(row_of.at(key), static_cast<Eigen::Index>(j)) = c;
    ExactMatrix b = ExactMatrix::Constant(rows, 1, GaussianRational{});
    for (const auto& [key, c] : p.terms()) b(row_of.at(key), 0) = c;

    const auto x = FractionFreeSolver(a).solve(b);
    if (!x) return std::nullopt;
    Poly q = p * GaussianRational{};
    for (std::size_t j = 0; j < quotient_basis.size(); ++j)
        q += make_monomial(quotient_basis[j]) * (*x)(static_cast<Eigen::Index>(j), 0);
    return q;
}

}  // namespace

std::optional<PolyZZbar> divide_exact(const PolyZZbar& p, const PolyZZbar& r) {
    const int qdeg = std::max(p.degree() - r.degree(), 0);
    return divide_impl(p, r, zzbar_monomials(qdeg),
                       [](const ExponentPair& e) { return PolyZZbar::monomial(e.a, e.b); });
}

std::optional<PolyRealN> divide_exact(const PolyRealN& p, const PolyRealN& r) {
    if (p.dim() != r.dim()) throw std::invalid_argument("polynomial dimension mismatch");
    const int qdeg = std::max(p.degree() - r.degree(), 0);
    return divide_impl(p, r, real_monomials(p.dim(), qdeg),
                       [](const std::vector<Exponent>& alpha) { return PolyRealN::monomial(alpha); });
}

}  // namespace szego
