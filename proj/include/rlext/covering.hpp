#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rlext/code.hpp"
#include "rlext/construct.hpp"

namespace rlext {

// Covering-radius verdict for the dual of one Roth-Lempel code, together
// with the status of the associated extension vector u.
struct CoveringReport {
  Elem delta = 0;
  Elem tau = 0;
  Elem pi = 0;
  int rho = 0;            // covering radius of roth_lempel(alpha, delta, k)'s dual
  int predicted_rho = 0;  // k; the prediction applies when mds_criteria_hold
  int u_distance = 0;     // distance from extension_vector(p) to that dual
  bool deep_hole = false; // u_distance == rho
  bool mds_criteria_hold = false;  // mds_conditions(p).overall
};

// Builds the Roth-Lempel code for p, computes the exact covering radius of
// its dual, the distance of extension_vector(p) to the dual, and whether the
// four MDS conditions hold.
CoveringReport verify_covering(const ConstructionParams& p,
                               std::int64_t budget = kDefaultBudget);

// verify_covering for every (delta, tau, pi) triple, ordered by canonical
// element encoding (delta major, pi minor). Parallel over triples; the
// output order does not depend on jobs.
std::vector<CoveringReport> sweep_covering(const FieldPtr& field,
                                           std::span<const Elem> alpha, int k,
                                           int jobs = 1,
                                           std::int64_t budget = kDefaultBudget);

}  // namespace rlext
