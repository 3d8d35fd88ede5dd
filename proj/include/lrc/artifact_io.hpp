#ifndef LRC_ARTIFACT_IO_HPP
#define LRC_ARTIFACT_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "lrc/bounds_asymptotic.hpp"
#include "lrc/constructions.hpp"

namespace lrc {

// Field as {"p":..., "m":..., "modulus":[c0..cm]}.
nlohmann::json field_to_json(const Field& f);
Field field_from_json(const nlohmann::json& j);

/*
 * Code artifact schema:
 * {
 *   "field": {...}, "n": int, "k": real,
 *   "generator": [[...]] | null, "parity": [[...]] | null,
 *   "codewords": [[...]] | null, "repair_sets": [[...], ...] | null,
 *   "claims": {"n":..., "k":..., "d":..., "r":..., "q":...},
 *   "construction": label, "params": {...}, "seed": int | null,
 *   "verified": bool
 * }
 * Coordinates and element indices are 0-based.
 */
nlohmann::json artifact_to_json(const CodeArtifact& artifact);
CodeArtifact artifact_from_json(const nlohmann::json& j);

void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& points);

} // namespace lrc

#endif
