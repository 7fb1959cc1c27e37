#include "vertexforge/simulator.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

namespace vertexforge {

namespace {

constexpr double kResonanceWindow = 1e-8;
constexpr double kUnitarityTol = 1e-9;
constexpr double kHermiticityTol = 1e-12;

/// FNV-1a over the bytes of the design's defining numbers; stable
/// identifier for sweep outputs.
std::string design_hash(const FiniteGraphDesign& design) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](const void* p, std::size_t len) {
        const auto* bytes = static_cast<const unsigned char*>(p);
        for (std::size_t i = 0; i < len; ++i) {
            h ^= bytes[i];
            h *= 1099511628211ULL;
        }
    };
    const std::uint64_t n = design.n;
    mix(&n, sizeof n);
    mix(&design.length_unit, sizeof design.length_unit);
    for (const InternalEdge& e : design.edges) {
        const std::uint64_t ij[2] = {e.i, e.j};
        mix(ij, sizeof ij);
        mix(&e.r, sizeof e.r);
        mix(&e.chi, sizeof e.chi);
    }
    for (double v : design.deltas) mix(&v, sizeof v);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

EdgeFunctions edge_functions(double length, double k) {
    if (!(length > 0.0) || !(k > 0.0)) {
        throw ValidationError("edge_functions needs positive length and momentum");
    }
    const double x = k * length;
    const double multiple = std::round(x / std::numbers::pi);
    if (multiple >= 1.0) {
        const double nearest = multiple * std::numbers::pi;
        if (std::abs(x - nearest) < kResonanceWindow * std::max(1.0, x)) {
            throw ResonanceError(x, nearest,
                                 "kL = " + std::to_string(x) + " is within resonance window of " +
                                     std::to_string(int(multiple)) + "*pi");
        }
    }
    const double s = std::sin(x);
    return EdgeFunctions{x * std::cos(x) / s, x / s};
}

ComplexMatrix vertex_matrix(const FiniteGraphDesign& design, double k) {
    if (!(k > 0.0)) throw ValidationError("momentum must be positive");
    const std::size_t n = design.n;
    const double d = design.length_unit;

    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = design.deltas[i] * d;

    ComplexMatrix m(n, n);
    for (const InternalEdge& e : design.edges) {
        EdgeFunctions fg{};
        try {
            fg = edge_functions(design.edge_length(e), k);
        } catch (ResonanceError& err) {
            err.edge_i = static_cast<std::ptrdiff_t>(e.i);
            err.edge_j = static_cast<std::ptrdiff_t>(e.j);
            throw;
        }
        diag[e.i] += e.r * fg.f;
        diag[e.j] += e.r * fg.f;
        const Complex coupling = -std::polar(e.r * fg.g, e.chi);
        m(e.i, e.j) += coupling;
        m(e.j, e.i) += std::conj(coupling);
    }
    for (std::size_t i = 0; i < n; ++i) m(i, i) = diag[i];

    if (!is_hermitian(m, kHermiticityTol)) {
        throw InternalError("vertex matrix lost Hermiticity");
    }
    return m;
}

SimulationPoint scattering_at(const FiniteGraphDesign& design, double k,
                              const ScatteringMatrix* target) {
    const std::size_t n = design.n;
    if (target && target->size() != n) {
        throw DimensionError("target scattering matrix size does not match design");
    }
    const ComplexMatrix m = vertex_matrix(design, k);
    const Complex ikd{0.0, k * design.length_unit};

    ComplexMatrix lhs(n, n);
    ComplexMatrix rhs(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            lhs(i, j) = -m(i, j);
            rhs(i, j) = m(i, j);
        }
        lhs(i, i) += ikd;
        rhs(i, i) += ikd;
    }

    SimulationPoint point;
    point.k = k;
    try {
        point.s = solve(lhs, rhs, Tolerance{});
    } catch (const SingularMatrixError& e) {
        // i k d cannot be an eigenvalue of a Hermitian matrix for k > 0.
        throw InternalError(std::string("Cayley solve reported singular: ") + e.what());
    }

    if (!is_unitary(point.s, kUnitarityTol)) {
        throw InternalError("simulated scattering matrix failed unitarity at 1e-9");
    }
    point.prob = RealMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            point.prob(i, j) = std::norm(point.s(i, j));
            row_sum += point.prob(i, j);
        }
        if (std::abs(row_sum - 1.0) > kUnitarityTol) {
            throw InternalError("flux conservation violated in row " + std::to_string(i));
        }
    }
    if (target) {
        double dev = 0.0;
        const ComplexMatrix& t = target->matrix();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                dev = std::max(dev, std::abs(point.prob(i, j) - std::norm(t(i, j))));
        point.deviation = dev;
    }
    return point;
}

SweepResult sweep(const FiniteGraphDesign& design, const ScatteringMatrix* target, double k_min,
                  double k_max, std::size_t steps) {
    if (!(k_min > 0.0) || !(k_max > k_min)) {
        throw ValidationError("sweep needs 0 < k_min < k_max");
    }
    if (steps < 2) throw ValidationError("sweep needs at least 2 steps");

    SweepResult result;
    result.design_hash = design_hash(design);
    const double dk = (k_max - k_min) / double(steps - 1);
    for (std::size_t step = 0; step < steps; ++step) {
        const double k = k_min + double(step) * dk;
        try {
            result.points.push_back(scattering_at(design, k, target));
        } catch (const ResonanceError& e) {
            result.skipped.push_back(SkippedPoint{
                k, static_cast<std::size_t>(e.edge_i < 0 ? 0 : e.edge_i),
                static_cast<std::size_t>(e.edge_j < 0 ? 0 : e.edge_j), e.what()});
        }
    }
    return result;
}

}  // namespace vertexforge
