#include "szego/exact_solve.hpp"

#include <numeric>
#include <stdexcept>

namespace szego {

namespace mp = boost::multiprecision;

namespace {

using Row = std::vector<GaussianInteger>;

struct Echelon {
    std::vector<Row> rows;
    std::vector<Eigen::Index> pivot_cols;  // indices into the original A columns
    int sign = 1;
    Integer scale_product = 1;
};

GaussianInteger scaled(const GaussianRational& c, const Integer& lcm) {
    return {mp::numerator(c.real()) * (lcm / mp::denominator(c.real())),
            mp::numerator(c.imag()) * (lcm / mp::denominator(c.imag()))};
}

/// Clears denominators row by row and runs one-step Bareiss elimination over
/// the first a.cols() columns. Right-hand-side columns ride along.
Echelon eliminate(const ExactMatrix& a, const ExactMatrix* b, const SolveOptions& options) {
    const Eigen::Index m = a.rows();
    const Eigen::Index n = a.cols();
    const Eigen::Index nb = b ? b->cols() : 0;

    Echelon out;
    out.rows.resize(static_cast<std::size_t>(m));
    for (Eigen::Index i = 0; i < m; ++i) {
        Integer lcm = 1;
        auto absorb = [&lcm](const GaussianRational& c) {
            lcm = mp::lcm(lcm, mp::denominator(c.real()));
            lcm = mp::lcm(lcm, mp::denominator(c.imag()));
        };
        for (Eigen::Index j = 0; j < n; ++j) absorb(a(i, j));
        for (Eigen::Index j = 0; j < nb; ++j) absorb((*b)(i, j));
        Row& row = out.rows[static_cast<std::size_t>(i)];
        row.reserve(static_cast<std::size_t>(n + nb));
        for (Eigen::Index j = 0; j < n; ++j) row.push_back(scaled(a(i, j), lcm));
        for (Eigen::Index j = 0; j < nb; ++j) row.push_back(scaled((*b)(i, j), lcm));
        out.scale_product *= lcm;
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    if (options.reverse_columns) std::reverse(order.begin(), order.end());

    const auto width = static_cast<std::size_t>(n + nb);
    GaussianInteger previous{1, 0};
    std::size_t r = 0;
    for (std::size_t oc = 0; oc < order.size() && r < static_cast<std::size_t>(m); ++oc) {
        const auto c = static_cast<std::size_t>(order[oc]);

        std::size_t pivot = out.rows.size();
        std::size_t best_bits = 0;
        for (std::size_t i = r; i < out.rows.size(); ++i) {
            const GaussianInteger& v = out.rows[i][c];
            if (v.is_zero()) continue;
            if (options.pivot == PivotRule::FirstNonzero) {
                pivot = i;
                break;
            }
            const std::size_t bits = v.bit_size();
            if (pivot == out.rows.size() || bits < best_bits) {
                pivot = i;
                best_bits = bits;
            }
        }
        if (pivot == out.rows.size()) continue;
        if (pivot != r) {
            std::swap(out.rows[pivot], out.rows[r]);
            out.sign = -out.sign;
        }

        const Row& prow = out.rows[r];
        const GaussianInteger& p = prow[c];
        for (std::size_t i = r + 1; i < out.rows.size(); ++i) {
            Row& row = out.rows[i];
            const GaussianInteger factor = row[c];
            for (std::size_t oj = oc + 1; oj < order.size(); ++oj) {
                const auto j = static_cast<std::size_t>(order[oj]);
                GaussianInteger v = p * row[j];
                if (!factor.is_zero() && !prow[j].is_zero()) v = v - factor * prow[j];
                row[j] = divide_exactly(v, previous);
            }
            for (std::size_t j = static_cast<std::size_t>(n); j < width; ++j) {
                GaussianInteger v = p * row[j];
                if (!factor.is_zero() && !prow[j].is_zero()) v = v - factor * prow[j];
                row[j] = divide_exactly(v, previous);
            }
            row[c] = GaussianInteger{};
        }
        previous = p;
        out.pivot_cols.push_back(static_cast<Eigen::Index>(c));
        ++r;
    }
    return out;
}

GaussianRational to_rational(const GaussianInteger& v) { return {Rational(v.re), Rational(v.im)}; }

int permutation_sign_of_reversal(Eigen::Index n) { return ((n * (n - 1) / 2) % 2 == 0) ? 1 : -1; }

}  // namespace

FractionFreeSolver::FractionFreeSolver(const ExactMatrix& a, SolveOptions options)
    : a_(a), options_(options) {
    Echelon e = eliminate(a_, nullptr, options_);
    rank_ = static_cast<Eigen::Index>(e.pivot_cols.size());
    if (a_.rows() == a_.cols() && rank_ == a_.rows() && rank_ > 0) {
        // The last Bareiss pivot is the determinant of the scaled, row- and
        // column-permuted matrix.
        const GaussianInteger& last = e.rows[static_cast<std::size_t>(rank_ - 1)]
                                            [static_cast<std::size_t>(e.pivot_cols.back())];
        int sign = e.sign;
        if (options_.reverse_columns) sign *= permutation_sign_of_reversal(a_.cols());
        determinant_ = to_rational(last) / GaussianRational(Rational(e.scale_product));
        if (sign < 0) determinant_ = -determinant_;
    } else if (a_.rows() == 0 && a_.cols() == 0) {
        determinant_ = 1L;
    }
}

GaussianRational FractionFreeSolver::determinant() const {
    if (a_.rows() != a_.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    return determinant_;
}

std::optional<ExactMatrix> FractionFreeSolver::solve(const ExactMatrix& b) const {
    if (b.rows() != a_.rows()) throw std::invalid_argument("right-hand side has wrong row count");
    const Echelon e = eliminate(a_, &b, options_);
    const Eigen::Index n = a_.cols();
    const auto rank = e.pivot_cols.size();

    for (std::size_t i = rank; i < e.rows.size(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j)
            if (!e.rows[i][static_cast<std::size_t>(n + j)].is_zero()) return std::nullopt;

    ExactMatrix x = ExactMatrix::Constant(n, b.cols(), GaussianRational{});
    for (Eigen::Index col = 0; col < b.cols(); ++col) {
        for (std::size_t k = rank; k-- > 0;) {
            const Row& row = e.rows[k];
            const auto pc = static_cast<std::size_t>(e.pivot_cols[k]);
            GaussianRational s = to_rational(row[static_cast<std::size_t>(n + col)]);
            for (std::size_t later = k + 1; later < rank; ++later) {
                const auto j = static_cast<std::size_t>(e.pivot_cols[later]);
                if (row[j].is_zero()) continue;
                const GaussianRational& xj = x(static_cast<Eigen::Index>(j), col);
                if (xj.is_zero()) continue;
                s -= to_rational(row[j]) * xj;
            }
            x(static_cast<Eigen::Index>(pc), col) = s / to_rational(row[pc]);
        }
    }
    return x;
}

}  // namespace szego
