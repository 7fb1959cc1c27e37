// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit status is the number of
// failed criteria.

#include <cmath>
#include <cstddef>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "vertexforge/equalscatter.hpp"
#include "vertexforge/inverse.hpp"
#include "vertexforge/simulator.hpp"

using namespace vertexforge;
using namespace vertexforge::testing;

namespace {

struct Criterion {
    std::string name;
    std::function<void()> body;
};

struct Failure {
    std::string detail;
};

void require(bool ok, const std::string& detail) {
    if (!ok) throw Failure{detail};
}

void require_close(double actual, double expected, double tol, const std::string& what) {
    require(std::abs(actual - expected) <= tol,
            what + ": got " + std::to_string(actual) + ", want " + std::to_string(expected) +
                " within " + std::to_string(tol));
}

std::map<std::pair<std::size_t, std::size_t>, InternalEdge> edge_map(
    const FiniteGraphDesign& design) {
    std::map<std::pair<std::size_t, std::size_t>, InternalEdge> m;
    for (const InternalEdge& e : design.edges) m[{e.i, e.j}] = e;
    return m;
}

double probability_deviation(const FiniteGraphDesign& design, const ScatteringMatrix& target,
                             double k) {
    return *scattering_at(design, k, &target).deviation;
}

// --- criterion bodies -------------------------------------------------------

void criterion1_inverse_n6() {
    const InverseResult res = recover_coupling(ScatteringMatrix(conference6_matrix()));
    std::vector<std::size_t> id(6);
    std::iota(id.begin(), id.end(), std::size_t{0});
    require(res.permutation == id, "permutation is not the identity");
    require(res.coupling.m == 3, "recovered m != 3");
    require(max_abs_diff(res.coupling.T, golden_t6()) <= 1e-9,
            "T does not match -gamma I + (1+gamma) J to 1e-9");
}

void criterion2_inverse_n8() {
    const InverseResult res = recover_coupling(ScatteringMatrix(hadamard8_matrix()));
    require(res.coupling.m == 4, "recovered m != 4");
    require(max_abs_diff(res.coupling.T, silver_t8()) <= 1e-9,
            "T does not match ((sigma-1)/(sigma+1)) I + (1/(sigma+1)) J to 1e-9");
}

void criterion3_synthesis_n6() {
    const double g = golden_mean();
    const double d = 1.0;
    const FiniteGraphDesign design = design_from_coupling(golden_coupling6(), d);
    const auto edges = edge_map(design);

    auto edge = [&](std::size_t i, std::size_t j) -> const InternalEdge& {
        require(edges.count({i, j}) == 1,
                "missing edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
        return edges.at({i, j});
    };
    require_close(edge(0, 1).r, 4.0 + 3.0 * g, 1e-9, "r_12");
    require_close(edge(0, 2).r, 4.0 + 3.0 * g, 1e-9, "r_13");
    require_close(edge(1, 2).r, 4.0 + 3.0 * g, 1e-9, "r_23");
    require_close(edge(0, 3).r, 1.0, 1e-9, "r_14");
    require_close(edge(1, 4).r, 1.0, 1e-9, "r_25");
    require_close(edge(2, 5).r, 1.0, 1e-9, "r_36");
    for (auto [i, j] :
         {std::pair<std::size_t, std::size_t>{0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 3}, {2, 4}}) {
        require_close(edge(i, j).r, 1.0 + g, 1e-9, "cross-block ratio 1+gamma");
    }
    require(edges.count({3, 4}) == 0 && edges.count({3, 5}) == 0 && edges.count({4, 5}) == 0,
            "trailing endpoints must stay unconnected");

    require_close(edge(0, 1).chi, std::numbers::pi, 1e-9, "chi_12");
    require_close(edge(0, 2).chi, std::numbers::pi, 1e-9, "chi_13");
    require_close(edge(1, 2).chi, std::numbers::pi, 1e-9, "chi_23");
    for (const InternalEdge& e : design.edges) {
        if (!(e.i < 3 && e.j < 3)) require_close(e.chi, 0.0, 1e-9, "cross-block phase");
    }

    for (std::size_t i = 0; i < 3; ++i)
        require_close(design.deltas[i], -6.0 * (g + 1.0) / d, 1e-9, "v_1..3");
    for (std::size_t i = 3; i < 6; ++i)
        require_close(design.deltas[i], -2.0 * (g + 1.0) / d, 1e-9, "v_4..6");
}

void criterion4_synthesis_n8() {
    const double s = silver_mean();
    const double d = 1.0;
    const FiniteGraphDesign design = design_from_coupling(silver_coupling8(), d);
    const auto edges = edge_map(design);

    for (std::size_t i = 0; i < 4; ++i)
        require_close(design.deltas[i], -(5.0 * s + 3.0) / d, 1e-9, "v_1..4");
    for (std::size_t i = 4; i < 8; ++i)
        require_close(design.deltas[i], -(s + 1.0) / d, 1e-9, "v_5..8");
    require_close(edges.at({0, 1}).r, 1.0 + s, 1e-9, "r_12");
    require_close(edges.at({0, 4}).r, s / (1.0 + s), 1e-9, "r_15");
    require_close(edges.at({0, 5}).r, 1.0 / (1.0 + s), 1e-9, "r_16");
}

void criterion5_convergence_n6() {
    const FiniteGraphDesign design = design_from_coupling(golden_coupling6(), 1.0);
    const ScatteringMatrix target(conference6_matrix());

    const double dev04 = probability_deviation(design, target, 0.4);
    const double dev02 = probability_deviation(design, target, 0.2);
    const double dev01 = probability_deviation(design, target, 0.1);
    const double ratio = dev02 / dev01;
    require(ratio >= 3.0 && ratio <= 5.0,
            "deviation(0.2)/deviation(0.1) = " + std::to_string(ratio) + " outside [3, 5]");
    require(dev01 < dev02 && dev02 < dev04, "deviation is not increasing over 0.1, 0.2, 0.4");

    const SimulationPoint p = scattering_at(design, 0.05, &target);
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            if (i == j) {
                require(p.prob(i, j) <= 0.02, "reflection probability above 0.02 at kd=0.05");
            } else {
                require(std::abs(p.prob(i, j) - 0.2) <= 0.02,
                        "transmission probability off 1/5 by more than 0.02 at kd=0.05");
            }
        }
    }
}

void criterion6_property_suite() {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        const ScaleInvariantCoupling c = random_coupling(rng, 10);
        const ScatteringMatrix s = scattering_closed_form(c);
        const ComplexMatrix& mat = s.matrix();
        const std::size_t n = c.n;

        require(is_hermitian(mat, 1e-10), "forward S not Hermitian at 1e-10");
        require(is_unitary(mat, 1e-10), "forward S not unitary at 1e-10");
        require(max_abs_diff(mat * mat, ComplexMatrix::identity(n)) <= 1e-10,
                "forward S not involutive at 1e-10");
        require(s.m() == c.m, "rank(S+I) != m");

        const ScatteringMatrix alt = scattering_by_diagonalization(c);
        require(max_abs_diff(mat, alt.matrix()) <= 1e-10, "forward formulas disagree at 1e-10");

        // Inverse round trip; both recovery formulas agree inside the op.
        const InverseResult res = recover_coupling(s);
        const ComplexMatrix forward = scattering_closed_form(res.coupling).matrix();
        const ComplexMatrix undone = apply_permutation(
            forward, invert_permutation(res.permutation), PermutationSide::Both);
        require(max_abs_diff(undone, mat) <= 1e-9, "invert-forward round trip off at 1e-9");

        // Both delta-strength formulas agree to 1e-12.
        const CouplingMatrixQ cq = build_q(c);
        const FiniteGraphDesign design = design_from_coupling(c, 1.0);
        const std::vector<double> textual = delta_strengths_textual(c, cq.R, 1.0);
        for (std::size_t i = 0; i < n; ++i) {
            require(std::abs(design.deltas[i] - textual[i]) <= 1e-12,
                    "delta formulas disagree at 1e-12");
        }
    }
}

void criterion7_simulator_unitarity() {
    std::mt19937_64 rng(515151);
    int designs_done = 0;
    while (designs_done < 100) {
        const FiniteGraphDesign design = design_from_coupling(random_coupling(rng, 8), 1.0);
        ++designs_done;
        int ks_done = 0;
        double k = 0.037;
        while (ks_done < 50) {
            k += 0.0193;
            SimulationPoint p;
            try {
                p = scattering_at(design, k);
            } catch (const ResonanceError&) {
                continue;  // non-resonant momenta only
            }
            ++ks_done;
            require(max_abs_diff(p.s.adjoint() * p.s, ComplexMatrix::identity(design.n)) <= 1e-9,
                    "unitarity residual above 1e-9");
            for (std::size_t i = 0; i < design.n; ++i) {
                double row = 0.0;
                for (std::size_t j = 0; j < design.n; ++j) row += p.prob(i, j);
                require(std::abs(row - 1.0) <= 1e-9, "row probability sum off 1 by > 1e-9");
            }
        }
    }
}

void criterion8_generators() {
    for (std::size_t n : {std::size_t{2}, std::size_t{6}, std::size_t{14}, std::size_t{18}}) {
        const ScatteringMatrix s = conference_scattering(n);
        const ComplexMatrix& mat = s.matrix();
        const double off = 1.0 / std::sqrt(double(n - 1));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) {
                    require(mat(i, j) == Complex{}, "conference diagonal not exactly zero");
                } else {
                    require(std::abs(mat(i, j)) == off,
                            "conference entry modulus not exactly 1/sqrt(n-1)");
                }
            }
        }
        // S^2 = I: exact at the integer level inside the generator
        // (multiply-back check); 1e-12 after normalization.
        require(max_abs_diff(mat * mat, ComplexMatrix::identity(n)) <= 1e-12,
                "conference S^2 != I at 1e-12");
        const auto spec = classify_equal_transmission(s, 1e-12);
        require(spec.has_value(), "conference matrix not classified");
        require(std::abs(spec->d_param - 0.0) <= 1e-12, "conference d_param != 0 at 1e-12");
        require(check_d_bound(*spec), "conference d bound violated");
    }
    for (std::size_t n : {std::size_t{2}, std::size_t{4}, std::size_t{8}}) {
        const ScatteringMatrix s = hadamard_scattering(n);
        const ComplexMatrix& mat = s.matrix();
        const double mod = 1.0 / std::sqrt(double(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                require(std::abs(mat(i, j)) == mod,
                        "hadamard entry modulus not exactly 1/sqrt(n)");
        require(max_abs_diff(mat * mat, ComplexMatrix::identity(n)) <= 1e-12,
                "hadamard S^2 != I at 1e-12");
        const auto spec = classify_equal_transmission(s, 1e-12);
        require(spec.has_value(), "hadamard matrix not classified");
        require(std::abs(spec->d_param - 1.0) <= 1e-12, "hadamard d_param != 1 at 1e-12");
        require(check_d_bound(*spec), "hadamard d bound violated");
    }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"1 inverse n=6 golden-mean coupling", criterion1_inverse_n6},
        {"2 inverse n=8 silver-mean coupling", criterion2_inverse_n8},
        {"3 synthesis n=6 golden design", criterion3_synthesis_n6},
        {"4 synthesis n=8 silver design", criterion4_synthesis_n8},
        {"5 convergence of the n=6 finite design", criterion5_convergence_n6},
        {"6 randomized property suite (200 couplings, n <= 10)", criterion6_property_suite},
        {"7 simulator unitarity (100 designs x 50 momenta)", criterion7_simulator_unitarity},
        {"8 conference/hadamard generators", criterion8_generators},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        try {
            c.body();
            std::cout << "PASS criterion " << c.name << '\n';
        } catch (const Failure& f) {
            ++failures;
            std::cout << "FAIL criterion " << c.name << ": " << f.detail << '\n';
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL criterion " << c.name << ": unexpected error: " << e.what()
                      << '\n';
        }
    }
    return failures;
}
