#pragma once

// Arrangement documents and machine-readable reports.
//
// Arrangement document (format_version "1"), a JSON object:
//
//   {
//     "format_version": "1",
//     "tolerance": 1.0000000000000001e-09,
//     "circles": [
//       {"id": "H1", "cx": 0, "cy": 0, "r": 0.66874030497642201},
//       ...
//     ]
//   }
//
// Reals are written with 17 significant digits so that parsing restores the
// exact doubles. Reports carry "schema_version": "1" and a "kind" field.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "orthocircles/analysis.hpp"
#include "orthocircles/cells.hpp"
#include "orthocircles/graph.hpp"

namespace orthocircles {

inline constexpr const char* kFormatVersion = "1";
inline constexpr const char* kSchemaVersion = "1";

std::string serialize_arrangement(const Arrangement& arr);

/// Throws ParseError on malformed input. Tangent pairs are kept so that
/// validation can report them; `tolerance` overrides the document's value.
Arrangement parse_arrangement(std::string_view text, std::optional<double> tolerance = std::nullopt);

Arrangement load_arrangement(const std::filesystem::path& path, std::optional<double> tolerance = std::nullopt);

/// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

using ReportJson = nlohmann::ordered_json;

ReportJson to_report(const ValidationReport& report);
ReportJson to_report(const BoundReport& report);
ReportJson to_report(const ArcSubdivision& sub, const FaceCensus& census);
ReportJson to_report(const AuditReport& report, const Arrangement& arr);
ReportJson to_report(const MaxEdgesResult& result);

}  // namespace orthocircles
