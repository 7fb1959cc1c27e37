#pragma once

#include <cstddef>
#include <vector>

#include "vertexforge/matrix.hpp"

namespace vertexforge {

/// Scale-invariant vertex coupling on a star graph with n edges.
///
/// The coupling is fully parameterized by the block matrix T of shape
/// m x (n-m): edge functions at the vertex satisfy
///
///   psi'[0..m) + T psi'[m..n) = 0   and   psi[m..n) = T^dagger psi[0..m).
///
/// The resulting scattering matrix is independent of momentum.
struct ScaleInvariantCoupling {
    ScaleInvariantCoupling(std::size_t n, std::size_t m, ComplexMatrix T);

    std::size_t n;    ///< number of edges, >= 2
    std::size_t m;    ///< block size, 1..n-1
    ComplexMatrix T;  ///< m x (n-m) coupling block
};

/// Hermitian unitary n x n scattering matrix with the multiplicity of its
/// +1 eigenvalue cached as rank(S + I). Construction validates Hermiticity
/// and unitarity at eq_tol; downstream code may rely on both.
class ScatteringMatrix {
public:
    explicit ScatteringMatrix(ComplexMatrix s, const Tolerance& tol = {});

    const ComplexMatrix& matrix() const { return s_; }
    std::size_t size() const { return s_.rows(); }
    /// Multiplicity of the +1 eigenvalue, rank(S + I).
    std::size_t m() const { return m_; }

private:
    ComplexMatrix s_;
    std::size_t m_;
};

/// Wavefunction values and outward derivatives at the vertex, one entry
/// per edge.
struct BoundaryValues {
    std::vector<Complex> psi;
    std::vector<Complex> dpsi;
};

/// S = -I + 2 [I; T^dagger] (I + T T^dagger)^{-1} [I, T].
ScatteringMatrix scattering_closed_form(const ScaleInvariantCoupling& c,
                                        const Tolerance& tol = {});

/// S = X^{-1} Z X with X = [[I, T], [T^dagger, -I]], Z = diag(I, -I).
/// Agrees with scattering_closed_form to better than 1e-10.
ScatteringMatrix scattering_by_diagonalization(const ScaleInvariantCoupling& c,
                                               const Tolerance& tol = {});

/// True iff both block equations of the coupling condition hold to tol
/// (relative to the largest boundary value).
bool check_boundary_condition(const ScaleInvariantCoupling& c, const BoundaryValues& bv,
                              double tol);

}  // namespace vertexforge
