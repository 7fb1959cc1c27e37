#pragma once

#include <cstddef>
#include <optional>

#include "vertexforge/coupling.hpp"

namespace vertexforge {

/// Equal-transmission scattering form: every off-diagonal entry has modulus
/// 1/sqrt(d^2 + n - 1) and every diagonal entry has modulus
/// d/sqrt(d^2 + n - 1). d_param is the diagonal magnitude parameter, not the
/// synthesis length unit.
struct EqualTransmissionSpec {
    EqualTransmissionSpec(std::size_t n, double d_param);

    std::size_t n;
    double d_param;
};

/// Classify S against the equal-transmission form; d_param is recovered from
/// the diagonal/off-diagonal modulus ratio. Diagonal signs are
/// unconstrained. Returns empty when S is not of the form (never throws for
/// a valid scattering matrix).
std::optional<EqualTransmissionSpec> classify_equal_transmission(const ScatteringMatrix& s,
                                                                 double tol);

/// Normalized symmetric conference matrix C/sqrt(n-1): zero diagonal,
/// +-1 off-diagonal, C^2 = (n-1) I. Supported sizes: n = 2, n = 6, and
/// n = q + 1 for odd primes q = 1 (mod 4) via the Paley construction.
/// Reflectionless equal transmission (d_param = 0).
ScatteringMatrix conference_scattering(std::size_t n);

/// Normalized symmetric Hadamard matrix H/sqrt(n): all entries of modulus
/// 1/sqrt(n). Supported sizes: n = 2 and n = 8 (explicit symmetric block
/// forms) and other powers of two (Sylvester tensor powers). Equal
/// scattering including reflection (d_param = 1).
ScatteringMatrix hadamard_scattering(std::size_t n);

/// True iff n <= 2 or d_param <= n/2 - 1 (within eq_tol).
bool check_d_bound(const EqualTransmissionSpec& spec, double eq_tol = Tolerance{}.eq_tol);

}  // namespace vertexforge
