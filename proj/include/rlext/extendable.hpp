#pragma once

#include <span>
#include <string>
#include <vector>

#include "rlext/code.hpp"
#include "rlext/gf.hpp"

namespace rlext {

enum class Extendability { kOptimal, kAlmost, kNeither };

std::string to_string(Extendability e);

// Verdict for the dimension-3 family: the code GRS_3(alpha, 1) with the 3x3
// identity appended keeps dual distance 4 exactly when all points are
// nonzero and no two of them sum to zero.
struct ExtendabilityReport {
  Extendability verdict = Extendability::kNeither;
  int predicted_dual_distance = 0;  // 4 optimal, 3 almost, 2 otherwise
  int measured_dual_distance = 0;
  bool all_nonzero = false;
  bool no_zero_pair_sum = false;
};

// Appends the k x k identity to the generator: [G : I_k], an [n+k, k] code.
LinearCode augment_identity(const LinearCode& c);

// Evaluates the two point conditions, builds GRS_3(alpha, 1) with the
// identity appended, and measures its dual distance. Needs n >= 4 distinct
// points; zero entries are allowed and force the verdict kNeither.
ExtendabilityReport extendability_verdict(const FieldPtr& field,
                                          std::span<const Elem> alpha);

}  // namespace rlext
