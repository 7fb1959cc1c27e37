#pragma once

#include <cstddef>
#include <vector>

#include "vertexforge/coupling.hpp"

namespace vertexforge {

/// Outcome of the inverse map: the edge renumbering that was applied and the
/// coupling recovered under it. Forward-mapping the coupling and undoing the
/// permutation reproduces the input scattering matrix.
struct InverseResult {
    std::vector<std::size_t> permutation;
    ScaleInvariantCoupling coupling;
};

/// rank(S + I); throws DegenerateCouplingError when S = +I or S = -I.
std::size_t recover_block_size(const ScatteringMatrix& s, const Tolerance& tol = {});

/// Simultaneous row/column renumbering that makes the leading m x m block of
/// I + S regular. Deterministic: identity whenever it already works,
/// otherwise a greedy column-pivoted selection of m indices from the column
/// space of S + I (chosen indices sorted ascending, the rest appended in
/// ascending order).
std::vector<std::size_t> select_ordering(const ScatteringMatrix& s, std::size_t m,
                                         const Tolerance& tol = {});

/// Recover the coupling block from a scattering matrix. Computes
/// (I + S11)^{-1} S12 and S21^dagger (I - S22)^{-1} under the selected
/// ordering, asserts they agree to 1e-9, and returns the first.
InverseResult recover_coupling(const ScatteringMatrix& s, const Tolerance& tol = {});

}  // namespace vertexforge
