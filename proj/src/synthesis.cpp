#include "vertexforge/synthesis.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace vertexforge {

FiniteGraphDesign::FiniteGraphDesign(std::size_t n_, double length_unit_,
                                     std::vector<InternalEdge> edges_,
                                     std::vector<double> deltas_)
    : n(n_), length_unit(length_unit_), edges(std::move(edges_)), deltas(std::move(deltas_)) {
    if (n < 1) throw ValidationError("design needs at least one endpoint");
    if (!(length_unit > 0.0) || !std::isfinite(length_unit)) {
        throw ValidationError("length_unit must be positive");
    }
    if (deltas.size() != n) {
        throw ValidationError("deltas length " + std::to_string(deltas.size()) +
                              " does not match n=" + std::to_string(n));
    }
    for (double v : deltas) {
        if (!std::isfinite(v)) throw ValidationError("non-finite delta strength");
    }
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (const InternalEdge& e : edges) {
        if (e.i >= e.j || e.j >= n) {
            throw ValidationError("edge endpoints must satisfy i < j < n");
        }
        if (!(e.r > 0.0) || !std::isfinite(e.r)) {
            throw ValidationError("edge length ratio must be positive; unconnected pairs are "
                                  "not stored");
        }
        if (!std::isfinite(e.chi) || e.chi <= -std::numbers::pi ||
            e.chi > std::numbers::pi) {
            throw ValidationError("edge phase must lie in (-pi, pi]");
        }
        if (seen[e.i][e.j]) {
            throw ValidationError("duplicate edge (" + std::to_string(e.i) + "," +
                                  std::to_string(e.j) + ")");
        }
        seen[e.i][e.j] = true;
    }
}

CouplingMatrixQ build_q(const ScaleInvariantCoupling& c) {
    const std::size_t n = c.n;
    const std::size_t m = c.m;
    const ComplexMatrix t_adj = c.T.adjoint();
    const ComplexMatrix gram = c.T * t_adj;

    ComplexMatrix q(n, n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) q(i, j) = -gram(i, j);
        for (std::size_t j = 0; j < n - m; ++j) q(i, m + j) = c.T(i, j);
    }
    for (std::size_t i = 0; i < n - m; ++i) {
        for (std::size_t j = 0; j < m; ++j) q(m + i, j) = -t_adj(i, j);
        q(m + i, m + i) = 1.0;
    }

    RealMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = std::abs(q(i, j));
    // |Q_ij| = |Q_ji| holds exactly: the T T^dagger block is Hermitian and
    // the cross blocks are T against -T^dagger.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (r(i, j) != r(j, i)) throw InternalError("R is not exactly symmetric");
        }
    }
    return CouplingMatrixQ{std::move(q), std::move(r)};
}

FiniteGraphDesign design_from_coupling(const ScaleInvariantCoupling& c, double length_unit,
                                       const Tolerance& tol) {
    tol.validate();
    if (!(length_unit > 0.0)) throw ValidationError("length_unit must be positive");
    const std::size_t n = c.n;
    CouplingMatrixQ cq = build_q(c);

    const double threshold = tol.rank_tol * cq.Q.max_abs();
    std::vector<InternalEdge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (cq.R(i, j) <= threshold) continue;
            double chi = std::arg(cq.Q(i, j));
            if (chi <= -std::numbers::pi) chi = std::numbers::pi;
            edges.push_back(InternalEdge{i, j, cq.R(i, j), chi});
        }
    }

    // V = (1/d)(2I - J) R, delta strengths on the diagonal.
    std::vector<double> deltas(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t l = 0; l < n; ++l) {
            const double coeff = (l == i) ? 1.0 : -1.0;  // 2*I - J
            acc += coeff * cq.R(l, i);
        }
        deltas[i] = acc / length_unit;
    }
    return FiniteGraphDesign(n, length_unit, std::move(edges), std::move(deltas));
}

std::vector<double> delta_strengths_textual(const ScaleInvariantCoupling& c, const RealMatrix& r,
                                            double length_unit) {
    const std::size_t n = c.n;
    const std::size_t m = c.m;
    if (r.rows() != n || r.cols() != n) {
        throw DimensionError("R must be n x n for the coupling");
    }
    if (!(length_unit > 0.0)) throw ValidationError("length_unit must be positive");

    std::vector<double> v(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        if (i >= m) {
            acc = 1.0;
            for (std::size_t l = 0; l < m; ++l) acc -= r(l, i);
        } else {
            for (std::size_t l = m; l < n; ++l) acc += r(i, l) * r(i, l) - r(i, l);
            for (std::size_t l = 0; l < m; ++l) {
                if (l != i) acc -= r(i, l);
            }
        }
        v[i] = acc / length_unit;
    }
    return v;
}

}  // namespace vertexforge
