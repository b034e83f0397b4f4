#pragma once

#include "szego/gaussian_rational.hpp"

#include <optional>
#include <vector>

namespace szego {

enum class PivotRule {
    /// Pick the candidate with the fewest bits (numerator and denominator).
    SmallestBitSize,
    /// Pick the first nonzero candidate in row order.
    FirstNonzero,
};

struct SolveOptions {
    PivotRule pivot = PivotRule::SmallestBitSize;
    /// Eliminate columns last-to-first. Changes which unknowns end up free
    /// in an underdetermined system.
    bool reverse_columns = false;
};

/*
 * Fraction-free (Bareiss) elimination over the Gaussian integers.
 *
 * Each row of the system is scaled by the lcm of its denominators, so every
 * entry lives in Z[i]; the one-step Bareiss update then divides exactly by the
 * previous pivot. Rank-deficient and rectangular systems are supported: a
 * column without a pivot is skipped and its unknown is set to zero.
 *
 * API modeled after Eigen's decompositions: construct from A, then solve(B).
 */
class FractionFreeSolver {
public:
    explicit FractionFreeSolver(const ExactMatrix& a, SolveOptions options = {});

    Eigen::Index rows() const { return a_.rows(); }
    Eigen::Index cols() const { return a_.cols(); }
    Eigen::Index rank() const { return rank_; }
    bool is_invertible() const { return a_.rows() == a_.cols() && rank_ == a_.rows(); }

    /// Exact determinant of a square matrix (zero when singular).
    /// Throws std::invalid_argument for non-square input.
    GaussianRational determinant() const;

    /// Solves A X = B column by column. Returns std::nullopt if any column of B
    /// is inconsistent. Free unknowns are set to zero.
    std::optional<ExactMatrix> solve(const ExactMatrix& b) const;

private:
    ExactMatrix a_;
    SolveOptions options_;
    Eigen::Index rank_ = 0;
    GaussianRational determinant_;
};

}  // namespace szego
