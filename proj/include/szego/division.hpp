#pragma once

#include "szego/polynomial.hpp"

#include <optional>

namespace szego {

/// Exact quotient q with p = r * q, or std::nullopt when r does not divide p.
/// Decided by one exact linear solve over the coefficients of q, with
/// degree(q) <= degree(p) - degree(r). Throws std::invalid_argument if r is zero.
std::optional<PolyZZbar> divide_exact(const PolyZZbar& p, const PolyZZbar& r);
std::optional<PolyRealN> divide_exact(const PolyRealN& p, const PolyRealN& r);

}  // namespace szego
