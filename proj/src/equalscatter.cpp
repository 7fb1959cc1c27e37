#include "vertexforge/equalscatter.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace vertexforge {

namespace {

bool is_odd_prime_1_mod_4(std::size_t q) {
    if (q < 5 || q % 4 != 1) return false;
    for (std::size_t f = 3; f * f <= q; f += 2) {
        if (q % f == 0) return false;
    }
    return true;
}

/// Sign matrix with integer entries; verified exactly before normalization.
using SignMatrix = std::vector<std::vector<int>>;

void verify_sign_matrix(const SignMatrix& c, std::size_t n, int gram_diagonal,
                        bool zero_diagonal, const char* family) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const int e = c[i][j];
            if (c[j][i] != e) throw InternalError(std::string(family) + ": not symmetric");
            if (i == j && zero_diagonal && e != 0)
                throw InternalError(std::string(family) + ": nonzero diagonal");
            if ((i != j || !zero_diagonal) && e * e != 1)
                throw InternalError(std::string(family) + ": entry not +-1");
        }
    }
    // Multiply-back check, exact in integer arithmetic.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            long acc = 0;
            for (std::size_t k = 0; k < n; ++k) acc += long(c[i][k]) * long(c[j][k]);
            const long want = (i == j) ? gram_diagonal : 0;
            if (acc != want) {
                throw InternalError(std::string(family) + ": multiply-back check failed at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
}

ScatteringMatrix normalize_sign_matrix(const SignMatrix& c, std::size_t n, double divisor) {
    ComplexMatrix s(n, n);
    const double inv = 1.0 / std::sqrt(divisor);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s(i, j) = c[i][j] * inv;
    return ScatteringMatrix(std::move(s));
}

/// The n=6 conference matrix in the block form
/// [[I-J, -2I+J], [-2I+J, -I+J]] with 3x3 blocks.
SignMatrix conference6() {
    SignMatrix c(6, std::vector<int>(6, 0));
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const int eye = (i == j) ? 1 : 0;
            c[i][j] = eye - 1;
            c[i][j + 3] = -2 * eye + 1;
            c[i + 3][j] = -2 * eye + 1;
            c[i + 3][j + 3] = -eye + 1;
        }
    }
    return c;
}

/// Paley conference matrix of order q+1: border of ones around the
/// Jacobsthal matrix of quadratic-residue characters over Z_q. Symmetric
/// because -1 is a quadratic residue when q = 1 (mod 4).
SignMatrix paley_conference(std::size_t q) {
    std::vector<int> character(q, -1);
    character[0] = 0;
    for (std::size_t x = 1; x < q; ++x) character[(x * x) % q] = 1;

    const std::size_t n = q + 1;
    SignMatrix c(n, std::vector<int>(n, 0));
    for (std::size_t j = 1; j < n; ++j) {
        c[0][j] = 1;
        c[j][0] = 1;
    }
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) c[a + 1][b + 1] = character[(a + q - b) % q];
    return c;
}

/// The n=8 Hadamard matrix in the block form
/// [[2I-J, -2I+J], [-2I+J, -2I+J]] with 4x4 blocks; its n=2 analogue is
/// [[1, -1], [-1, -1]].
SignMatrix hadamard_block_form(std::size_t n) {
    const std::size_t h = n / 2;
    SignMatrix c(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t j = 0; j < h; ++j) {
            const int eye = (i == j) ? 1 : 0;
            c[i][j] = 2 * eye - 1;
            c[i][j + h] = -2 * eye + 1;
            c[i + h][j] = -2 * eye + 1;
            c[i + h][j + h] = -2 * eye + 1;
        }
    }
    return c;
}

SignMatrix sylvester(std::size_t n) {
    SignMatrix h{{1}};
    for (std::size_t size = 1; size < n; size *= 2) {
        SignMatrix next(2 * size, std::vector<int>(2 * size));
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j) {
                next[i][j] = h[i][j];
                next[i][j + size] = h[i][j];
                next[i + size][j] = h[i][j];
                next[i + size][j + size] = -h[i][j];
            }
        }
        h = std::move(next);
    }
    return h;
}

}  // namespace

EqualTransmissionSpec::EqualTransmissionSpec(std::size_t n_, double d_param_)
    : n(n_), d_param(d_param_) {
    if (n < 2) throw ValidationError("equal-transmission form needs n >= 2");
    if (!(d_param >= 0.0) || !std::isfinite(d_param)) {
        throw ValidationError("d_param must be a non-negative real");
    }
}

std::optional<EqualTransmissionSpec> classify_equal_transmission(const ScatteringMatrix& s,
                                                                 double tol) {
    const std::size_t n = s.size();
    if (n < 2) return std::nullopt;
    const ComplexMatrix& mat = s.matrix();

    const double off = std::abs(mat(0, 1));
    const double diag = std::abs(mat(0, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double want = (i == j) ? diag : off;
            if (std::abs(std::abs(mat(i, j)) - want) > tol) return std::nullopt;
        }
    }
    if (off <= tol) return std::nullopt;  // no transmission at all
    return EqualTransmissionSpec(n, diag / off);
}

ScatteringMatrix conference_scattering(std::size_t n) {
    if (n == 2) {
        SignMatrix c{{0, 1}, {1, 0}};
        verify_sign_matrix(c, 2, 1, true, "conference");
        return normalize_sign_matrix(c, 2, 1.0);
    }
    if (n == 6) {
        const SignMatrix c = conference6();
        verify_sign_matrix(c, 6, 5, true, "conference");
        return normalize_sign_matrix(c, 6, 5.0);
    }
    if (n >= 3 && is_odd_prime_1_mod_4(n - 1)) {
        const SignMatrix c = paley_conference(n - 1);
        verify_sign_matrix(c, n, int(n) - 1, true, "conference");
        return normalize_sign_matrix(c, n, double(n - 1));
    }
    throw ConstructionUnavailableError(
        "no conference construction for n=" + std::to_string(n) +
        "; supported: n=2, n=6, and n=q+1 for odd primes q=1 (mod 4), e.g. 6, 14, 18, 30, 38");
}

ScatteringMatrix hadamard_scattering(std::size_t n) {
    if (n == 2 || n == 8) {
        const SignMatrix c = hadamard_block_form(n);
        verify_sign_matrix(c, n, int(n), false, "hadamard");
        return normalize_sign_matrix(c, n, double(n));
    }
    if (n >= 4 && (n & (n - 1)) == 0) {
        const SignMatrix c = sylvester(n);
        verify_sign_matrix(c, n, int(n), false, "hadamard");
        return normalize_sign_matrix(c, n, double(n));
    }
    throw ConstructionUnavailableError("no symmetric Hadamard construction for n=" +
                                       std::to_string(n) + "; supported: powers of two");
}

bool check_d_bound(const EqualTransmissionSpec& spec, double eq_tol) {
    if (spec.n <= 2) return true;
    return spec.d_param <= 0.5 * double(spec.n) - 1.0 + eq_tol;
}

}  // namespace vertexforge
