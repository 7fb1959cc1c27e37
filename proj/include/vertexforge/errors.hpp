#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vertexforge {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shape mismatch or empty operand.
struct DimensionError : Error {
    using Error::Error;
};

/// Invalid value passed to a constructor or operation (non-finite entry,
/// malformed permutation, out-of-range parameter, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// Pivot fell below the relative threshold during elimination.
struct SingularMatrixError : Error {
    SingularMatrixError(std::size_t pivot_index, const std::string& what)
        : Error(what), pivot_index(pivot_index) {}
    std::size_t pivot_index;
};

/// Scattering matrix is +I or -I: rank(S+I) is 0 or n, so no two-block
/// scale-invariant coupling with both blocks nonempty exists.
struct DegenerateCouplingError : Error {
    using Error::Error;
};

/// Requested generator size is outside the constructible family.
struct ConstructionUnavailableError : Error {
    using Error::Error;
};

/// k*L is too close to a positive multiple of pi on some internal edge.
struct ResonanceError : Error {
    ResonanceError(double k_length, double nearest_multiple, const std::string& what)
        : Error(what), k_length(k_length), nearest_multiple(nearest_multiple) {}
    double k_length;          ///< offending dimensionless argument kL
    double nearest_multiple;  ///< nearest positive multiple of pi
    /// Offending edge endpoints, filled in by the caller that knows them.
    std::ptrdiff_t edge_i = -1;
    std::ptrdiff_t edge_j = -1;
};

/// A guaranteed-by-construction property failed; indicates a bug or a
/// tolerance misconfiguration, not bad user input.
struct InternalError : Error {
    using Error::Error;
};

/// Input file could not be parsed; message names the file and byte offset.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace vertexforge
