#include "rlext/serialize.hpp"

#include <stdexcept>

namespace rlext {
namespace {

void require_schema(const Json& j, const char* expected) {
  if (!j.is_object() || j.value("schema", "") != expected)
    throw std::invalid_argument(std::string("expected schema ") + expected);
}

}  // namespace

Json element_to_json(const Field& f, Elem e) {
  return Json{{"value", e}, {"display", element_repr(f, e)}};
}

Json field_to_json(const Field& f) {
  Json j;
  j["schema"] = "rlext/field/v1";
  j["p"] = f.p();
  j["m"] = f.m();
  j["q"] = f.q();
  j["modulus"] = f.modulus();
  j["modulus_display"] = modulus_repr(f);
  j["primitive"] = f.primitive();
  j["primitive_display"] = element_repr(f, f.primitive());
  return j;
}

FieldPtr field_from_json(const Json& j) {
  require_schema(j, "rlext/field/v1");
  const int p = j.at("p").get<int>();
  const int m = j.at("m").get<int>();
  std::optional<std::vector<int>> modulus;
  if (j.contains("modulus") && !j.at("modulus").empty())
    modulus = j.at("modulus").get<std::vector<int>>();
  return make_field(p, m, modulus);
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, const FieldPtr& field) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  std::vector<std::vector<Elem>> rows;
  for (const Json& row : j) rows.push_back(row.get<std::vector<Elem>>());
  return Matrix::from_rows(field, rows);
}

Json code_to_json(const LinearCode& c) {
  Json j;
  j["schema"] = "rlext/code/v1";
  j["field"] = field_to_json(c.field());
  j["n"] = c.length();
  j["k"] = c.dimension();
  j["generator"] = matrix_to_json(c.generator());
  return j;
}

LinearCode code_from_json(const Json& j) {
  require_schema(j, "rlext/code/v1");
  FieldPtr field = field_from_json(j.at("field"));
  Matrix g = matrix_from_json(j.at("generator"), field);
  LinearCode code(std::move(g));
  if (j.contains("n") && j.at("n").get<int>() != code.length())
    throw std::invalid_argument("stored length disagrees with generator");
  if (j.contains("k") && j.at("k").get<int>() != code.dimension())
    throw std::invalid_argument("stored dimension disagrees with generator");
  return code;
}

Json classification_to_json(const Classification& c) {
  Json j;
  j["schema"] = "rlext/classification/v1";
  j["n"] = c.n;
  j["k"] = c.k;
  j["d"] = c.d;
  j["d_dual"] = c.d_dual;
  j["verdict"] = to_string(c.verdict);
  j["singleton_defect"] = c.singleton_defect;
  return j;
}

Json condition_report_to_json(const ConditionReport& r) {
  Json j;
  j["schema"] = "rlext/conditions/v1";
  Json leaves = Json::array();
  for (const NamedCondition& leaf : r.leaves) {
    Json l;
    l["name"] = leaf.name;
    l["holds"] = leaf.holds;
    if (leaf.witness) l["witness"] = *leaf.witness;
    leaves.push_back(std::move(l));
  }
  j["conditions"] = std::move(leaves);
  j["overall"] = r.overall;
  return j;
}

Json covering_report_to_json(const Field& f, const CoveringReport& r) {
  Json j;
  j["schema"] = "rlext/covering/v1";
  j["delta"] = element_to_json(f, r.delta);
  j["tau"] = element_to_json(f, r.tau);
  j["pi"] = element_to_json(f, r.pi);
  j["rho"] = r.rho;
  j["predicted_rho"] = r.predicted_rho;
  j["u_distance"] = r.u_distance;
  j["deep_hole"] = r.deep_hole;
  j["mds_criteria_hold"] = r.mds_criteria_hold;
  return j;
}

Json extendability_report_to_json(const ExtendabilityReport& r) {
  Json j;
  j["schema"] = "rlext/extendable/v1";
  j["verdict"] = to_string(r.verdict);
  j["predicted_dual_distance"] = r.predicted_dual_distance;
  j["measured_dual_distance"] = r.measured_dual_distance;
  j["all_nonzero"] = r.all_nonzero;
  j["no_zero_pair_sum"] = r.no_zero_pair_sum;
  return j;
}

}  // namespace rlext
