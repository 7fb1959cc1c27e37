#pragma once

#include <cmath>
#include <random>

#include "vertexforge/coupling.hpp"

namespace vertexforge::testing {

inline double golden_mean() { return (std::sqrt(5.0) - 1.0) / 2.0; }
inline double silver_mean() { return std::sqrt(2.0) - 1.0; }

/// aI + bJ of size n.
inline ComplexMatrix eye_plus_ones(std::size_t n, double a, double b) {
    ComplexMatrix m = ComplexMatrix::constant(n, n, b);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = a + b;
    return m;
}

/// The 6x6 conference-type scattering matrix
/// (1/sqrt5) [[I-J, -2I+J], [-2I+J, -I+J]] with 3x3 blocks.
inline ComplexMatrix conference6_matrix() {
    const double f = 1.0 / std::sqrt(5.0);
    ComplexMatrix s(6, 6);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const double eye = (i == j) ? 1.0 : 0.0;
            s(i, j) = f * (eye - 1.0);
            s(i, j + 3) = f * (-2.0 * eye + 1.0);
            s(i + 3, j) = f * (-2.0 * eye + 1.0);
            s(i + 3, j + 3) = f * (-eye + 1.0);
        }
    }
    return s;
}

/// The 8x8 equal-scattering Hadamard-type matrix
/// (1/sqrt8) [[2I-J, -2I+J], [-2I+J, -2I+J]] with 4x4 blocks.
inline ComplexMatrix hadamard8_matrix() {
    const double f = 1.0 / std::sqrt(8.0);
    ComplexMatrix s(8, 8);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const double eye = (i == j) ? 1.0 : 0.0;
            s(i, j) = f * (2.0 * eye - 1.0);
            s(i, j + 4) = f * (-2.0 * eye + 1.0);
            s(i + 4, j) = f * (-2.0 * eye + 1.0);
            s(i + 4, j + 4) = f * (-2.0 * eye + 1.0);
        }
    }
    return s;
}

/// T = -gamma I + (1+gamma) J, the coupling block of the n=6 example.
inline ComplexMatrix golden_t6() {
    const double g = golden_mean();
    return eye_plus_ones(3, -g, 1.0 + g);
}

/// T = ((sigma-1)/(sigma+1)) I + (1/(sigma+1)) J, the n=8 coupling block.
inline ComplexMatrix silver_t8() {
    const double s = silver_mean();
    const double a = (s - 1.0) / (s + 1.0);
    const double b = 1.0 / (s + 1.0);
    return eye_plus_ones(4, a, b);
}

inline ScaleInvariantCoupling golden_coupling6() {
    return ScaleInvariantCoupling(6, 3, golden_t6());
}

inline ScaleInvariantCoupling silver_coupling8() {
    return ScaleInvariantCoupling(8, 4, silver_t8());
}

inline Complex random_unit_complex(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double re = u(rng);
    return Complex{re, u(rng)};
}

inline ComplexMatrix random_complex_matrix(std::mt19937_64& rng, std::size_t rows,
                                           std::size_t cols) {
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_unit_complex(rng);
    return m;
}

inline ScaleInvariantCoupling random_coupling(std::mt19937_64& rng, std::size_t max_n = 10) {
    std::uniform_int_distribution<std::size_t> pick_n(2, max_n);
    const std::size_t n = pick_n(rng);
    std::uniform_int_distribution<std::size_t> pick_m(1, n - 1);
    const std::size_t m = pick_m(rng);
    return ScaleInvariantCoupling(n, m, random_complex_matrix(rng, m, n - m));
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
    ComplexMatrix a = random_complex_matrix(rng, n, n);
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return h;
}

/// Independent oracle for the +1 eigenvalue multiplicity of an involutive
/// Hermitian matrix: eigenvalues are +-1, so multiplicity = (n + tr S) / 2.
inline std::size_t plus_one_multiplicity_from_trace(const ComplexMatrix& s) {
    double tr = 0.0;
    for (std::size_t i = 0; i < s.rows(); ++i) tr += s(i, i).real();
    return static_cast<std::size_t>(std::llround((double(s.rows()) + tr) / 2.0));
}

}  // namespace vertexforge::testing
