#include "rlext/extendable.hpp"

#include <stdexcept>

#include "rlext/construct.hpp"
#include "rlext/matrix.hpp"

namespace rlext {

std::string to_string(Extendability e) {
  switch (e) {
    case Extendability::kOptimal: return "optimal";
    case Extendability::kAlmost: return "almost";
    case Extendability::kNeither: return "neither";
  }
  return "neither";
}

LinearCode augment_identity(const LinearCode& c) {
  return LinearCode(
      c.generator().hconcat(Matrix::identity(c.field_ptr(), c.dimension())));
}

ExtendabilityReport extendability_verdict(const FieldPtr& field,
                                          std::span<const Elem> alpha) {
  const Field& f = *field;
  const int n = static_cast<int>(alpha.size());
  if (n < 4) throw std::invalid_argument("need at least 4 evaluation points");

  ExtendabilityReport r;
  r.all_nonzero = true;
  for (Elem a : alpha) r.all_nonzero &= (f.check(a) != 0);
  r.no_zero_pair_sum = true;
  for (int i = 0; i < n && r.no_zero_pair_sum; ++i)
    for (int j = i + 1; j < n; ++j)
      if (f.add(alpha[i], alpha[j]) == 0) {
        r.no_zero_pair_sum = false;
        break;
      }

  if (!r.all_nonzero) {
    r.verdict = Extendability::kNeither;
    r.predicted_dual_distance = 2;
  } else if (r.no_zero_pair_sum) {
    r.verdict = Extendability::kOptimal;
    r.predicted_dual_distance = 4;
  } else {
    r.verdict = Extendability::kAlmost;
    r.predicted_dual_distance = 3;
  }

  const std::vector<Elem> ones(n, 1);
  const LinearCode aug = augment_identity(grs(field, alpha, ones, 3));
  // The dual distance equals the smallest number of dependent generator
  // columns; the dual itself is too large to enumerate comfortably.
  r.measured_dual_distance = min_dependent_columns(aug.generator());
  return r;
}

}  // namespace rlext
