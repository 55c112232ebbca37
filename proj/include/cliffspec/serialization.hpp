#pragma once

#include <json.hpp>

#include "cliffspec/calculus.hpp"
#include "cliffspec/mult_model.hpp"

// JSON formats.  nlohmann::json with its default sorted object keys keeps
// every emitted document byte-deterministic.

namespace cliffspec {

using nlohmann::json;

/// {"d": int, "coeffs": {"<decimal bitmask>": float, ...}}, zeros omitted.
json to_json(const CliffordNum& c);
CliffordNum clifford_from_json(const json& j);

/// {"d": int, "n": int, "rows": [[entry, ...], ...]}.
json to_json(const CliffordMatrix& m);
CliffordMatrix matrix_from_json(const json& j);

/// {"spheres": [{"x": f, "r": f, "mult": k}, ...], "tol": f}.
json to_json(const SpectralSet& s);
SpectralSet spectral_from_json(const json& j);

/// {"weights": [...], "h": [entry, ...], "range": "paravector"|"N_Rd"|"general"}.
/// A missing range is inferred from the values.
json to_json(const DiscreteMeasureSpace& space, const MeasurableFn& h);
std::pair<DiscreteMeasureSpace, MeasurableFn> mult_from_json(const json& j);

json to_json(const CalculusResult& r);

/// Parse with a uniform error type for the CLI's exit-code contract.
json parse_json_file(const std::string& path);

/// Write-to-temp + atomic rename; no partial files on failure.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace cliffspec
