// JSON certificate documents (schema_version "1").
//
// Keys are emitted in a fixed order, elements are sorted by their r^a·s^b
// label and rationals are written as lowest-terms "p/q" strings, so a
// document depends only on its inputs.  Wall-clock time is only recorded
// when explicitly requested; otherwise elapsed_ms is null.

#pragma once

#include "dihedral/construction.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dihedral {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Brute-force cross-check of one element's fixed-point decision.
struct OracleResult {
  std::size_t fixed_points = 0;
  bool agrees = false;
};

struct VerifyMetadata {
  AnalysisCaps caps;
  std::optional<std::size_t> oracle_denominator;
};

Json element_json(const ElementReport& report, const std::optional<OracleResult>& oracle = std::nullopt);

/// oracle, when present, is parallel to cert.elements.
Json theorem_document(const TheoremCertificate& cert, const VerifyMetadata& meta,
                      const std::vector<OracleResult>& oracle, std::optional<double> elapsed_ms);

Json range_document(int range, const std::vector<Json>& runs, bool all_verified, std::optional<double> elapsed_ms);

Json corollary_document(const CorollaryCertificate& cert, const AnalysisCaps& caps,
                        std::optional<double> elapsed_ms);

/// Two-space indented text with a trailing newline.
std::string render(const Json& doc);

}  // namespace dihedral
