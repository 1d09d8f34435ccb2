#include "dihedral/certificate.hpp"

namespace dihedral {

namespace {

Json elapsed(std::optional<double> ms) { return ms ? Json(*ms) : Json(nullptr); }

}  // namespace

Json element_json(const ElementReport& report, const std::optional<OracleResult>& oracle) {
  Json e;
  e["word"] = report.word ? Json(report.word->to_string()) : Json(nullptr);
  e["order"] = report.order;
  e["is_translation"] = report.is_translation;
  e["has_fixed_point"] = report.has_fixed_point;
  if (oracle) {
    e["oracle_fixed_points"] = oracle->fixed_points;
    e["oracle_agrees"] = oracle->agrees;
  }
  return e;
}

Json theorem_document(const TheoremCertificate& cert, const VerifyMetadata& meta,
                      const std::vector<OracleResult>& oracle, std::optional<double> elapsed_ms) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "verify";
  doc["params"] = {{"n", cert.n},
                   {"closure_cap", meta.caps.closure},
                   {"order_cap", meta.caps.order},
                   {"oracle", meta.oracle_denominator ? Json(*meta.oracle_denominator) : Json(nullptr)}};
  doc["dimension"] = cert.dimension;
  doc["group_order"] = cert.group_order_actual;
  Json elements = Json::array();
  for (std::size_t i = 0; i < cert.elements.size(); ++i) {
    std::optional<OracleResult> o;
    if (i < oracle.size()) o = oracle[i];
    elements.push_back(element_json(cert.elements[i], o));
  }
  doc["elements"] = std::move(elements);
  doc["steps"] = {{"step1", cert.step1.passed},
                  {"step2", cert.step2.passed},
                  {"step3", cert.step3.passed},
                  {"step4", cert.step4.passed},
                  {"step5", cert.step5.passed}};
  doc["details"] = {{"rotation_order", cert.step1.rotation_order},
                    {"reflection_order", cert.step2.order},
                    {"product_order", cert.step3.product_order},
                    {"symmetry_classes", cert.step4.class_count},
                    {"is_free", cert.is_free},
                    {"has_no_translations", cert.has_no_translations},
                    {"failure", cert.failure.empty() ? Json(nullptr) : Json(cert.failure)}};
  doc["theorem_verified"] = cert.theorem_verified;
  doc["elapsed_ms"] = elapsed(elapsed_ms);
  return doc;
}

Json range_document(int range, const std::vector<Json>& runs, bool all_verified, std::optional<double> elapsed_ms) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "verify";
  doc["params"] = {{"range", range}};
  doc["runs"] = runs;
  doc["theorem_verified"] = all_verified;
  doc["elapsed_ms"] = elapsed(elapsed_ms);
  return doc;
}

Json corollary_document(const CorollaryCertificate& cert, const AnalysisCaps& caps,
                        std::optional<double> elapsed_ms) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "corollary";
  doc["params"] = {{"k", cert.plan.k},
                   {"n", cert.plan.params.n},
                   {"rotation_power", cert.plan.rotation_power},
                   {"closure_cap", caps.closure},
                   {"order_cap", caps.order}};
  doc["dimension"] = cert.ambient_dimension;
  doc["group_order"] = cert.subgroup_order;
  Json elements = Json::array();
  for (const auto& e : cert.elements) elements.push_back(element_json(e));
  doc["elements"] = std::move(elements);
  doc["checks"] = {{"dimension", cert.dimension_matches},
                   {"order", cert.order_matches},
                   {"relations", cert.relations_hold},
                   {"free", cert.is_free},
                   {"no_translations", cert.has_no_translations}};
  doc["corollary_verified"] = cert.verified;
  doc["elapsed_ms"] = elapsed(elapsed_ms);
  return doc;
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace dihedral
