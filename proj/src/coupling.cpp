#include "vertexforge/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vertexforge {

ScaleInvariantCoupling::ScaleInvariantCoupling(std::size_t n_, std::size_t m_, ComplexMatrix T_)
    : n(n_), m(m_), T(std::move(T_)) {
    if (n < 2) throw ValidationError("coupling needs n >= 2 edges, got " + std::to_string(n));
    if (m < 1 || m > n - 1) {
        throw ValidationError("block size m must lie in 1..n-1, got m=" + std::to_string(m) +
                              " for n=" + std::to_string(n));
    }
    if (T.rows() != m || T.cols() != n - m) {
        throw ValidationError("T must be " + std::to_string(m) + "x" + std::to_string(n - m) +
                              ", got " + std::to_string(T.rows()) + "x" +
                              std::to_string(T.cols()));
    }
}

ScatteringMatrix::ScatteringMatrix(ComplexMatrix s, const Tolerance& tol) : s_(std::move(s)) {
    tol.validate();
    if (s_.empty() || s_.rows() != s_.cols()) {
        throw DimensionError("scattering matrix must be square and nonempty");
    }
    if (!is_hermitian(s_, tol.eq_tol)) {
        throw ValidationError("scattering matrix is not Hermitian at eq_tol");
    }
    if (!is_unitary(s_, tol.eq_tol)) {
        throw ValidationError("scattering matrix is not unitary at eq_tol");
    }
    m_ = rank(s_ + ComplexMatrix::identity(s_.rows()), tol);
}

ScatteringMatrix scattering_closed_form(const ScaleInvariantCoupling& c, const Tolerance& tol) {
    const ComplexMatrix t_adj = c.T.adjoint();
    const ComplexMatrix gram = ComplexMatrix::identity(c.m) + c.T * t_adj;
    // I + T T^dagger is positive definite, so the solve cannot fail.
    const ComplexMatrix w = solve(gram, hstack(ComplexMatrix::identity(c.m), c.T), tol);
    ComplexMatrix s = vstack(ComplexMatrix::identity(c.m), t_adj) * w;
    s *= 2.0;
    s -= ComplexMatrix::identity(c.n);
    ScatteringMatrix result(std::move(s), tol);
    if (result.m() != c.m) {
        throw InternalError("closed-form scattering: rank(S+I) != m");
    }
    return result;
}

ScatteringMatrix scattering_by_diagonalization(const ScaleInvariantCoupling& c,
                                               const Tolerance& tol) {
    const std::size_t n = c.n;
    const std::size_t m = c.m;
    const ComplexMatrix t_adj = c.T.adjoint();
    ComplexMatrix x(n, n);
    ComplexMatrix zx(n, n);  // Z X, assembled directly
    for (std::size_t i = 0; i < m; ++i) {
        x(i, i) = 1.0;
        zx(i, i) = 1.0;
        for (std::size_t j = 0; j < n - m; ++j) {
            x(i, m + j) = c.T(i, j);
            zx(i, m + j) = c.T(i, j);
        }
    }
    for (std::size_t i = 0; i < n - m; ++i) {
        x(m + i, m + i) = -1.0;
        zx(m + i, m + i) = 1.0;
        for (std::size_t j = 0; j < m; ++j) {
            x(m + i, j) = t_adj(i, j);
            zx(m + i, j) = -t_adj(i, j);
        }
    }
    ComplexMatrix s;
    try {
        s = solve(x, zx, tol);
    } catch (const SingularMatrixError& e) {
        // X^2 = diag(I+TT^dagger, I+T^dagger T) is positive definite, so X
        // cannot be singular for a valid coupling.
        throw InternalError(std::string("diagonalization matrix reported singular: ") + e.what());
    }
    return ScatteringMatrix(std::move(s), tol);
}

bool check_boundary_condition(const ScaleInvariantCoupling& c, const BoundaryValues& bv,
                              double tol) {
    if (bv.psi.size() != c.n || bv.dpsi.size() != c.n) {
        throw DimensionError("boundary values must have length n=" + std::to_string(c.n));
    }
    double scale = 1.0;
    for (Complex z : bv.psi) scale = std::max(scale, std::abs(z));
    for (Complex z : bv.dpsi) scale = std::max(scale, std::abs(z));

    double residual = 0.0;
    // First block: psi'[0..m) + T psi'[m..n) = 0.
    for (std::size_t i = 0; i < c.m; ++i) {
        Complex r = bv.dpsi[i];
        for (std::size_t j = 0; j < c.n - c.m; ++j) r += c.T(i, j) * bv.dpsi[c.m + j];
        residual = std::max(residual, std::abs(r));
    }
    // Second block: psi[m..n) - T^dagger psi[0..m) = 0.
    for (std::size_t j = 0; j < c.n - c.m; ++j) {
        Complex r = bv.psi[c.m + j];
        for (std::size_t i = 0; i < c.m; ++i) r -= std::conj(c.T(i, j)) * bv.psi[i];
        residual = std::max(residual, std::abs(r));
    }
    return residual <= tol * scale;
}

}  // namespace vertexforge
