#pragma once

#include <cstddef>
#include <vector>

#include "vertexforge/coupling.hpp"

namespace vertexforge {

/// Internal edge of the finite star-graph realization, joining the
/// endpoints of external edges i and j (i < j). The physical length is
/// length_unit / r. chi is the magnetic phase accumulated traversing from
/// endpoint i to endpoint j; traversal j -> i uses -chi.
struct InternalEdge {
    std::size_t i;
    std::size_t j;
    double r;    ///< length ratio, > 0
    double chi;  ///< phase in (-pi, pi]
};

/// Finite graph that realizes a scale-invariant coupling in the shrinking
/// limit length_unit -> 0: n external-edge endpoints joined by internal
/// edges, with a delta potential of strength deltas[i] (units 1/length) at
/// endpoint i.
struct FiniteGraphDesign {
    FiniteGraphDesign(std::size_t n, double length_unit, std::vector<InternalEdge> edges,
                      std::vector<double> deltas);

    std::size_t n;
    double length_unit;
    std::vector<InternalEdge> edges;
    std::vector<double> deltas;

    double edge_length(const InternalEdge& e) const { return length_unit / e.r; }
};

/// Connection matrix of the design: Q = [[-T T^dagger, T], [-T^dagger, I]],
/// whose off-diagonal entries encode the edge parameters as
/// r_ij e^{i chi_ij} = Q_ij, together with R = {|Q_ij|}.
struct CouplingMatrixQ {
    ComplexMatrix Q;
    RealMatrix R;
};

CouplingMatrixQ build_q(const ScaleInvariantCoupling& c);

/// Full synthesis: edges from the upper triangle of Q (entries below
/// rank_tol x max|Q| count as unconnected), delta strengths from the
/// diagonal of V = (1/d)(2I - J) R.
FiniteGraphDesign design_from_coupling(const ScaleInvariantCoupling& c, double length_unit,
                                       const Tolerance& tol = {});

/// Delta strengths by the two explicit per-index sum formulas; an
/// independent cross-check of the matrix route in design_from_coupling
/// (the two agree to 1e-12).
std::vector<double> delta_strengths_textual(const ScaleInvariantCoupling& c, const RealMatrix& r,
                                            double length_unit);

}  // namespace vertexforge
