#include "vertexforge/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace vertexforge {

namespace {

constexpr double kFormulaAgreementTol = 1e-9;

double largest_column_norm(const ComplexMatrix& m) {
    double best = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m.rows(); ++i) s += std::norm(m(i, j));
        best = std::max(best, std::sqrt(s));
    }
    return best;
}

/// Do the given columns of the positive semidefinite matrix A = S + I stay
/// independent? Because A is PSD, independence of columns idx is equivalent
/// to regularity of the principal block A[idx, idx].
bool columns_independent(const ComplexMatrix& a, std::span<const std::size_t> idx,
                         double threshold) {
    ComplexMatrix sub(a.rows(), idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) sub(i, j) = a(i, idx[j]);
    const ColumnPivotResult piv = column_pivot_analysis(sub);
    return std::all_of(piv.pivot_norms.begin(), piv.pivot_norms.end(),
                       [threshold](double p) { return p > threshold; });
}

}  // namespace

std::size_t recover_block_size(const ScatteringMatrix& s, const Tolerance& tol) {
    tol.validate();
    const std::size_t m = s.m();
    if (m == 0 || m == s.size()) {
        throw DegenerateCouplingError(
            "scattering matrix is " + std::string(m == 0 ? "-I" : "+I") +
            ": rank(S+I) = " + std::to_string(m) +
            " leaves no two-block coupling with both blocks nonempty");
    }
    return m;
}

std::vector<std::size_t> select_ordering(const ScatteringMatrix& s, std::size_t m,
                                         const Tolerance& tol) {
    tol.validate();
    const std::size_t n = s.size();
    if (m < 1 || m > n - 1) {
        throw ValidationError("select_ordering: m out of range");
    }
    const ComplexMatrix a = s.matrix() + ComplexMatrix::identity(n);
    const double threshold = tol.rank_tol * largest_column_norm(a);

    std::vector<std::size_t> identity(m);
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    std::vector<std::size_t> chosen;
    if (columns_independent(a, identity, threshold)) {
        chosen = identity;
    } else {
        const ColumnPivotResult piv = column_pivot_analysis(a);
        for (std::size_t k = 0; k < m; ++k) {
            if (piv.pivot_norms[k] <= threshold) {
                throw InternalError("select_ordering: fewer than m independent columns in S + I");
            }
            chosen.push_back(piv.order[k]);
        }
        std::sort(chosen.begin(), chosen.end());
    }

    std::vector<bool> taken(n, false);
    for (std::size_t c : chosen) taken[c] = true;
    std::vector<std::size_t> perm = chosen;
    for (std::size_t j = 0; j < n; ++j) {
        if (!taken[j]) perm.push_back(j);
    }
    return perm;
}

InverseResult recover_coupling(const ScatteringMatrix& s, const Tolerance& tol) {
    const std::size_t n = s.size();
    const std::size_t m = recover_block_size(s, tol);
    std::vector<std::size_t> perm = select_ordering(s, m, tol);
    const ComplexMatrix sp = apply_permutation(s.matrix(), perm, PermutationSide::Both);

    const ComplexMatrix s11 = sp.block(0, 0, m, m);
    const ComplexMatrix s12 = sp.block(0, m, m, n - m);
    const ComplexMatrix s21 = sp.block(m, 0, n - m, m);
    const ComplexMatrix s22 = sp.block(m, m, n - m, n - m);

    const ComplexMatrix t_first = solve(ComplexMatrix::identity(m) + s11, s12, tol);
    // S21^dagger (I - S22)^{-1} = ((I - S22)^{-1} S21)^dagger since I - S22
    // is Hermitian.
    const ComplexMatrix t_second =
        solve(ComplexMatrix::identity(n - m) - s22, s21, tol).adjoint();

    const double gap = max_abs_diff(t_first, t_second);
    if (gap > kFormulaAgreementTol) {
        throw InternalError("inverse formulas disagree by " + std::to_string(gap) +
                            "; tolerances misconfigured or input not of the assumed form");
    }
    return InverseResult{std::move(perm), ScaleInvariantCoupling(n, m, t_first)};
}

}  // namespace vertexforge
