#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "vertexforge/errors.hpp"

namespace vertexforge {

using Complex = std::complex<double>;

/// Relative thresholds shared across the library.
///
/// rank_tol gates pivots in rank decisions and eliminations, relative to the
/// largest pivot; eq_tol gates entrywise comparisons. Both must lie in (0, 1).
struct Tolerance {
    double rank_tol = 1e-8;
    double eq_tol = 1e-9;

    void validate() const;
};

/// Dense complex matrix, row-major. Entries are validated finite when the
/// matrix is built from data; arithmetic on finite inputs stays finite.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix constant(std::size_t rows, std::size_t cols, Complex value);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Complex> data() const { return data_; }

    ComplexMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows,
                        std::size_t ncols) const;
    ComplexMatrix adjoint() const;

    double max_abs() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
        return lhs += rhs;
    }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
        return lhs -= rhs;
    }
    friend ComplexMatrix operator*(Complex scalar, ComplexMatrix m) { return m *= scalar; }
    friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Dense real matrix, row-major. Carrier for entrywise moduli and
/// probability tables.
class RealMatrix {
public:
    RealMatrix() = default;
    RealMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const double& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Stack two row-conformant blocks side by side / two column-conformant
/// blocks on top of each other.
ComplexMatrix hstack(const ComplexMatrix& left, const ComplexMatrix& right);
ComplexMatrix vstack(const ComplexMatrix& top, const ComplexMatrix& bottom);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);
bool is_hermitian(const ComplexMatrix& m, double tol);
bool is_unitary(const ComplexMatrix& m, double tol);

/// Number of pivots of column-pivoted elimination exceeding
/// rank_tol x (largest pivot). Deterministic for fixed input.
std::size_t rank(const ComplexMatrix& m, const Tolerance& tol = {});

/// Solve A X = B by LU with partial pivoting. Throws SingularMatrixError
/// naming the failing pivot index when a pivot falls below
/// rank_tol x (largest pivot).
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol = {});

enum class PermutationSide { Rows, Cols, Both };

/// Gather-style permutation: result(i, j) = m(perm[i], j) for Rows,
/// m(i, perm[j]) for Cols, m(perm[i], perm[j]) for Both. Both preserves
/// Hermiticity.
ComplexMatrix apply_permutation(const ComplexMatrix& m, std::span<const std::size_t> perm,
                                PermutationSide side);

std::vector<std::size_t> invert_permutation(std::span<const std::size_t> perm);

/// Greedy column-pivoted orthogonalization: columns in the order selected
/// (largest residual norm first, lowest index on ties) with their residual
/// norms at selection time.
struct ColumnPivotResult {
    std::vector<std::size_t> order;
    std::vector<double> pivot_norms;
};
ColumnPivotResult column_pivot_analysis(const ComplexMatrix& m);

}  // namespace vertexforge
