#pragma once

// Exact weighted Szego projection of polynomials on a planar ellipse, for the
// boundary weight 1/|dbar r|.
//
// The operator A(p) = (d r) * dbar(E p), with E the harmonic extension, maps
// P_N into P_N and its image consists of boundary functions orthogonal to the
// weighted Hardy space. Its kernel is HP_N + r P_{N-2}. Every f in P_N splits
// as f = h + A(p) + r q with h holomorphic; h is the projection.

#include "szego/ellipsoid.hpp"
#include "szego/exact_solve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace szego {

PolyZZbar operator_A(const Ellipse& e, const PolyZZbar& p);

/// True iff p = g + r q with g holomorphic; one exact linear solve.
bool kernel_membership(const Ellipse& e, const PolyZZbar& p);

struct SzegoDecomposition {
    PolyZZbar input;
    PolyZZbar projection;  ///< h, holomorphic, unique
    PolyZZbar preimage;    ///< p, not unique
    PolyZZbar cofactor;    ///< q, not unique
    int N = 0;
};

struct SzegoOptions {
    /// Ambient degree; defaults to degree(f) (0 for the zero polynomial).
    /// Must be >= degree(f).
    std::optional<int> ambient_degree;
    SolveOptions solve;
};

/// Throws InternalError if the block system is inconsistent (cannot happen),
/// std::invalid_argument if ambient_degree < degree(f).
SzegoDecomposition szego_project(const Ellipse& e, const PolyZZbar& f, const SzegoOptions& options = {});

struct CertificateCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct DecompositionCertificate {
    PolyZZbar residual;  ///< f - h - A(p) - r q
    std::vector<CertificateCheck> checks;

    bool passed() const;
};

DecompositionCertificate verify_decomposition(const SzegoDecomposition& d, const Ellipse& e);

}  // namespace szego
