#pragma once

#include <filesystem>
#include <ostream>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "vertexforge/coupling.hpp"
#include "vertexforge/simulator.hpp"
#include "vertexforge/synthesis.hpp"

namespace vertexforge {

// Documented wire schemas:
//   matrix    { "rows": int, "cols": int, "data": [[re, im], ...] }  row-major
//   coupling  { "n": int, "m": int, "T": <matrix> }
//   design    { "n": int, "length_unit": float,
//               "edges": [{ "i": int, "j": int, "r": float, "chi": float }],
//               "deltas": [float] }                                  lengths derived, not stored
// All indices are 0-based.

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json coupling_to_json(const ScaleInvariantCoupling& c);
ScaleInvariantCoupling coupling_from_json(const nlohmann::json& j);

nlohmann::json design_to_json(const FiniteGraphDesign& d);
FiniteGraphDesign design_from_json(const nlohmann::json& j);

/// Parse a JSON file; errors name the file and byte offset.
nlohmann::json load_json_file(const std::filesystem::path& path);
void save_json_file(const std::filesystem::path& path, const nlohmann::json& j);

/// Sweep CSV: header `k,kd,` then `S_<i>_<j>_re,S_<i>_<j>_im` for all
/// i <= j, then `P_<i>_<j>` for all i <= j, then `deviation` (left empty
/// when the sweep ran without a target). Floats carry 17 significant
/// digits so identical inputs give byte-identical files.
void write_sweep_csv(std::ostream& out, const SweepResult& result, std::size_t n,
                     double length_unit);

/// Sidecar for resonant grid points: { "skipped": [{ "k": ..., "edge": [i, j] }] }.
nlohmann::json skipped_to_json(const SweepResult& result);

}  // namespace vertexforge
