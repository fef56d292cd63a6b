#pragma once

#include <string>

#include "json.hpp"
#include "rlext/code.hpp"
#include "rlext/covering.hpp"
#include "rlext/criteria.hpp"
#include "rlext/extendable.hpp"
#include "rlext/gf.hpp"
#include "rlext/matrix.hpp"

namespace rlext {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "1.0.0";

// Every emitted document carries a "schema" field of the form
// "rlext/<kind>/v1" so consumers can detect format drift.
Json field_to_json(const Field& f);
FieldPtr field_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);  // row-major array of arrays, entries only
Matrix matrix_from_json(const Json& j, const FieldPtr& field);

Json code_to_json(const LinearCode& c);
LinearCode code_from_json(const Json& j);

Json classification_to_json(const Classification& c);
Json condition_report_to_json(const ConditionReport& r);
Json covering_report_to_json(const Field& f, const CoveringReport& r);
Json extendability_report_to_json(const ExtendabilityReport& r);

// Both renderings of an element: {"value": 6, "display": "6=g^3"}.
Json element_to_json(const Field& f, Elem e);

}  // namespace rlext
