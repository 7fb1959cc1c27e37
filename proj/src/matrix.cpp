#include "vertexforge/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace vertexforge {

namespace {

void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) +
                             "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                             "x" + std::to_string(b.cols()));
    }
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

void Tolerance::validate() const {
    if (!(rank_tol > 0.0 && rank_tol < 1.0)) {
        throw ValidationError("rank_tol must lie in (0, 1), got " + std::to_string(rank_tol));
    }
    if (!(eq_tol > 0.0 && eq_tol < 1.0)) {
        throw ValidationError("eq_tol must lie in (0, 1), got " + std::to_string(eq_tol));
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw DimensionError("matrix data length " + std::to_string(data_.size()) +
                             " does not match " + std::to_string(rows_) + "x" +
                             std::to_string(cols_));
    }
    for (std::size_t idx = 0; idx < data_.size(); ++idx) {
        if (!finite(data_[idx])) {
            throw ValidationError("non-finite matrix entry at flat index " + std::to_string(idx));
        }
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::constant(std::size_t rows, std::size_t cols, Complex value) {
    ComplexMatrix m(rows, cols);
    std::fill(m.data_.begin(), m.data_.end(), value);
    return m;
}

ComplexMatrix ComplexMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                                   std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_) {
        throw DimensionError("block exceeds matrix bounds");
    }
    ComplexMatrix out(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& z : data_) m = std::max(m, std::abs(z));
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    check_same_shape(*this, rhs, "add");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    check_same_shape(*this, rhs, "subtract");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (Complex& z : data_) z *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.cols() != rhs.rows()) {
        throw DimensionError("multiply: inner dimensions " + std::to_string(lhs.cols()) + " vs " +
                             std::to_string(rhs.rows()));
    }
    ComplexMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const Complex lik = lhs(i, k);
            if (lik == Complex{}) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += lik * rhs(k, j);
        }
    }
    return out;
}

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

ComplexMatrix hstack(const ComplexMatrix& left, const ComplexMatrix& right) {
    if (left.rows() != right.rows()) throw DimensionError("hstack: row mismatch");
    ComplexMatrix out(left.rows(), left.cols() + right.cols());
    for (std::size_t i = 0; i < left.rows(); ++i) {
        for (std::size_t j = 0; j < left.cols(); ++j) out(i, j) = left(i, j);
        for (std::size_t j = 0; j < right.cols(); ++j) out(i, left.cols() + j) = right(i, j);
    }
    return out;
}

ComplexMatrix vstack(const ComplexMatrix& top, const ComplexMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw DimensionError("vstack: column mismatch");
    ComplexMatrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    return max_abs_diff(a, b) <= tol;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    return true;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs_diff(m.adjoint() * m, ComplexMatrix::identity(m.rows())) <= tol;
}

ColumnPivotResult column_pivot_analysis(const ComplexMatrix& m) {
    if (m.empty()) throw DimensionError("column_pivot_analysis: empty matrix");
    const std::size_t nr = m.rows();
    const std::size_t nc = m.cols();
    // Working copy of the columns, orthogonalized in place (modified
    // Gram-Schmidt with greedy column pivoting).
    std::vector<std::vector<Complex>> cols(nc, std::vector<Complex>(nr));
    for (std::size_t j = 0; j < nc; ++j)
        for (std::size_t i = 0; i < nr; ++i) cols[j][i] = m(i, j);

    auto norm_of = [&](const std::vector<Complex>& v) {
        double s = 0.0;
        for (Complex z : v) s += std::norm(z);
        return std::sqrt(s);
    };

    ColumnPivotResult result;
    std::vector<bool> used(nc, false);
    const std::size_t steps = std::min(nr, nc);
    for (std::size_t step = 0; step < steps; ++step) {
        std::size_t best = nc;
        double best_norm = -1.0;
        for (std::size_t j = 0; j < nc; ++j) {
            if (used[j]) continue;
            const double nj = norm_of(cols[j]);
            if (nj > best_norm) {
                best_norm = nj;
                best = j;
            }
        }
        used[best] = true;
        result.order.push_back(best);
        result.pivot_norms.push_back(best_norm);
        if (best_norm == 0.0) continue;  // remaining columns are zero too
        const double inv = 1.0 / best_norm;
        for (Complex& z : cols[best]) z *= inv;
        for (std::size_t j = 0; j < nc; ++j) {
            if (used[j]) continue;
            Complex proj{0.0, 0.0};
            for (std::size_t i = 0; i < nr; ++i) proj += std::conj(cols[best][i]) * cols[j][i];
            for (std::size_t i = 0; i < nr; ++i) cols[j][i] -= proj * cols[best][i];
        }
    }
    return result;
}

std::size_t rank(const ComplexMatrix& m, const Tolerance& tol) {
    tol.validate();
    const ColumnPivotResult piv = column_pivot_analysis(m);
    const double largest = piv.pivot_norms.front();
    if (largest == 0.0) return 0;
    std::size_t r = 0;
    for (double p : piv.pivot_norms) {
        if (p > tol.rank_tol * largest) ++r;
    }
    return r;
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol) {
    tol.validate();
    if (a.empty()) throw DimensionError("solve: empty matrix");
    if (a.rows() != a.cols()) throw DimensionError("solve: A must be square");
    if (b.rows() != a.rows()) throw DimensionError("solve: B row count must match A");
    const std::size_t n = a.rows();

    ComplexMatrix lu = a;
    ComplexMatrix x = b;
    double max_pivot = a.max_abs();
    if (max_pivot == 0.0) {
        throw SingularMatrixError(0, "solve: zero matrix, pivot 0 below threshold");
    }

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = k;
        double best_abs = std::abs(lu(k, k));
        for (std::size_t r = k + 1; r < n; ++r) {
            const double v = std::abs(lu(r, k));
            if (v > best_abs) {
                best_abs = v;
                best = r;
            }
        }
        if (best_abs <= tol.rank_tol * max_pivot) {
            throw SingularMatrixError(
                k, "solve: pivot " + std::to_string(k) + " has magnitude " +
                       std::to_string(best_abs) + ", below threshold " +
                       std::to_string(tol.rank_tol * max_pivot));
        }
        if (best != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(best, j));
            for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(k, j), x(best, j));
        }
        max_pivot = std::max(max_pivot, best_abs);
        const Complex pivot = lu(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            const Complex f = lu(r, k) / pivot;
            if (f == Complex{}) continue;
            lu(r, k) = Complex{};
            for (std::size_t j = k + 1; j < n; ++j) lu(r, j) -= f * lu(k, j);
            for (std::size_t j = 0; j < x.cols(); ++j) x(r, j) -= f * x(k, j);
        }
    }
    // Back substitution.
    for (std::size_t ki = n; ki-- > 0;) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            Complex s = x(ki, j);
            for (std::size_t c = ki + 1; c < n; ++c) s -= lu(ki, c) * x(c, j);
            x(ki, j) = s / lu(ki, ki);
        }
    }
    return x;
}

namespace {

void check_permutation(std::span<const std::size_t> perm, std::size_t expected) {
    if (perm.size() != expected) {
        throw ValidationError("permutation length " + std::to_string(perm.size()) +
                              " does not match dimension " + std::to_string(expected));
    }
    std::vector<bool> seen(expected, false);
    for (std::size_t p : perm) {
        if (p >= expected || seen[p]) {
            throw ValidationError("index list is not a permutation of 0.." +
                                  std::to_string(expected - 1));
        }
        seen[p] = true;
    }
}

}  // namespace

ComplexMatrix apply_permutation(const ComplexMatrix& m, std::span<const std::size_t> perm,
                                PermutationSide side) {
    if (side == PermutationSide::Rows || side == PermutationSide::Both) {
        check_permutation(perm, m.rows());
    }
    if (side == PermutationSide::Cols || side == PermutationSide::Both) {
        check_permutation(perm, m.cols());
    }
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const std::size_t si =
            (side == PermutationSide::Cols) ? i : perm[i];
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::size_t sj =
                (side == PermutationSide::Rows) ? j : perm[j];
            out(i, j) = m(si, sj);
        }
    }
    return out;
}

std::vector<std::size_t> invert_permutation(std::span<const std::size_t> perm) {
    check_permutation(perm, perm.size());
    std::vector<std::size_t> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
    return inv;
}

}  // namespace vertexforge
