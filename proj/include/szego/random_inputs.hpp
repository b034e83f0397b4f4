#pragma once

// Seeded generators for random exact inputs, shared by the tests and the
// acceptance suite.

#include "szego/ellipsoid.hpp"
#include "szego/polynomial.hpp"

#include <random>

namespace szego {

class PolyGenerator {
public:
    explicit PolyGenerator(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double uniform_real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    /// Small rational: numerator in [-5, 5], denominator in [1, 4].
    Rational small_rational() { return Rational(uniform(-5, 5), uniform(1, 4)); }
    GaussianRational small_coefficient() { return {small_rational(), small_rational()}; }

    /// Random polynomial of degree <= max_degree with about half the terms present.
    PolyZZbar zzbar(int max_degree) {
        PolyZZbar p;
        const int deg = uniform(0, max_degree);
        for (const auto& e : zzbar_monomials(deg))
            if (uniform(0, 1) == 1) p.add_term(e, small_coefficient());
        return p;
    }

    /// Same, but with exactly the requested degree.
    PolyZZbar zzbar_of_degree(int degree) {
        while (true) {
            PolyZZbar p = zzbar(degree);
            const int a = uniform(0, degree);
            p.add_term({static_cast<Exponent>(a), static_cast<Exponent>(degree - a)}, GaussianRational(uniform(1, 3)));
            if (p.degree() == degree) return p;
        }
    }

    PolyZZbar holomorphic(int max_degree) {
        PolyZZbar p;
        const int deg = uniform(0, max_degree);
        for (int k = 0; k <= deg; ++k)
            if (uniform(0, 1) == 1) p.add_term({static_cast<Exponent>(k), 0}, small_coefficient());
        return p;
    }

    PolyRealN real(std::size_t dim, int max_degree) {
        PolyRealN p(dim);
        const int deg = uniform(0, max_degree);
        for (const auto& alpha : real_monomials(dim, deg))
            if (uniform(0, 1) == 1) p.add_term(alpha, small_coefficient());
        return p;
    }

    /// Q = L^T L + I with small integer L.
    Ellipsoid ellipsoid(std::size_t dim) {
        const auto n = static_cast<Eigen::Index>(dim);
        Eigen::MatrixXi l(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) l(i, j) = uniform(-2, 2);
        const Eigen::MatrixXi qi = l.transpose() * l + Eigen::MatrixXi::Identity(n, n);
        ExactMatrix q(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) q(i, j) = GaussianRational(static_cast<long>(qi(i, j)));
        std::vector<Rational> center;
        for (std::size_t j = 0; j < dim; ++j) center.push_back(Rational(uniform(-3, 3), uniform(1, 2)));
        return Ellipsoid(q, center);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace szego
