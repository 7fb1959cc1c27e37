#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vertexforge/coupling.hpp"
#include "vertexforge/synthesis.hpp"

namespace vertexforge {

/// F = kL cot(kL) and G = kL csc(kL), the exact Helmholtz edge response at
/// dimensionless argument kL; both tend to 1 as kL -> 0.
struct EdgeFunctions {
    double f;
    double g;
};

/// Throws ResonanceError when kL is within 1e-8 * max(1, kL) of a positive
/// multiple of pi, where the edge relation degenerates.
EdgeFunctions edge_functions(double length, double k);

/// Hermitian boundary matrix M of the finite graph at momentum k:
///   M_ii = v_i d + sum_{l != i} r_il F_il,
///   M_il = -e^{i chi_il} r_il G_il,
/// so that the boundary relation reads d Psi' = M Psi.
ComplexMatrix vertex_matrix(const FiniteGraphDesign& design, double k);

/// Scattering data of the finite graph at one momentum.
struct SimulationPoint {
    double k = 0.0;
    ComplexMatrix s;   ///< unitary scattering matrix (to 1e-9)
    RealMatrix prob;   ///< |S_ij|^2; every row and column sums to 1 (to 1e-9)
    /// Largest entrywise difference between prob and the target's
    /// probability matrix; empty when no target was supplied.
    std::optional<double> deviation;
};

/// Grid point skipped because some edge was resonant at that momentum.
struct SkippedPoint {
    double k;
    std::size_t i;
    std::size_t j;
    std::string reason;
};

struct SweepResult {
    std::string design_hash;
    std::vector<SimulationPoint> points;   ///< sorted by k ascending
    std::vector<SkippedPoint> skipped;
};

/// Solve (i k d I - M) S = (i k d I + M) for the momentum-dependent
/// scattering matrix; the Cayley transform of Hermitian M, unitary by
/// construction.
SimulationPoint scattering_at(const FiniteGraphDesign& design, double k,
                              const ScatteringMatrix* target = nullptr);

/// Evaluate a uniform momentum grid; resonant points are recorded in
/// skipped rather than silently dropped.
SweepResult sweep(const FiniteGraphDesign& design, const ScatteringMatrix* target, double k_min,
                  double k_max, std::size_t steps);

}  // namespace vertexforge
