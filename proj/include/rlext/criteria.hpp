#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rlext/code.hpp"
#include "rlext/construct.hpp"
#include "rlext/gf.hpp"

namespace rlext {

// One named leaf of a condition report. witness holds the lexicographically
// first offending index subset and is present exactly when a universal
// condition fails; derived booleans (case summaries) never carry a witness.
struct NamedCondition {
  NamedCondition() = default;
  explicit NamedCondition(std::string n) : name(std::move(n)) {}

  std::string name;
  bool holds = true;
  std::optional<std::vector<int>> witness;
};

struct ConditionReport {
  std::vector<NamedCondition> leaves;
  bool overall = false;

  const NamedCondition* find(std::string_view name) const;
  bool leaf(std::string_view name) const;  // throws if absent
};

// True iff no t-element subset of s sums to target. On failure and when
// witness is non-null, *witness receives the first offending subset in
// lexicographic index order.
bool is_sum_avoiding_set(const Field& f, std::span<const Elem> s, int t,
                         Elem target, std::vector<int>* witness = nullptr);

// The four conditions equivalent to c2_code(p) being MDS:
//   cond1: alpha is an (n, k-1, delta)-set;
//   cond2: alpha is an (n, k-2, tau)-set;
//   cond3: no (k-1)-subset I has  sum_{i<j in I} a_i a_j + pi = tau * sum_I a;
//   cond4: no (k-2)-subset J has  pi + delta * sum_J a
//                                   = tau delta + sum_J a^2 + sum_{i<j in J} a_i a_j.
// overall = cond1 && cond2 && cond3 && cond4.
ConditionReport mds_conditions(const ConstructionParams& p);

// Dual-side AMDS test: overall is true iff the dual of c2_code(p) has
// minimum distance exactly k. Leaves carry cond1..cond4, the length-(k-1)
// column-independence universal, and the two case summaries.
ConditionReport dual_amds_conditions(const ConstructionParams& p);

// Primal AMDS test: overall is true iff c2_code(p) has minimum distance
// exactly n + 3 - k. Structured like dual_amds_conditions with the
// independence universal taken over (n+1-k)-subsets of the parity matrix.
ConditionReport c2_amds_conditions(const ConstructionParams& p);

// NMDS test under the hypothesis cond1 && cond2; throws std::domain_error
// when the hypothesis fails. overall = !cond3 || !cond4.
ConditionReport nmds_conditions(const ConstructionParams& p);

// Direct minor check: true iff every k-column submatrix of the generator is
// nonsingular. Stops at the first singular witness.
bool mds_by_minors(const LinearCode& c);

}  // namespace rlext
