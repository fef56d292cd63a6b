#include "rlext/covering.hpp"

#include "rlext/criteria.hpp"
#include "rlext/util.hpp"

namespace rlext {

CoveringReport verify_covering(const ConstructionParams& p, std::int64_t budget) {
  p.validate();
  const LinearCode rl = roth_lempel(p.field, p.alpha, p.delta, p.k);
  const LinearCode& dual = rl.dual();

  CoveringReport r;
  r.delta = p.delta;
  r.tau = p.tau;
  r.pi = p.pi;
  r.rho = covering_radius(dual, budget);
  r.predicted_rho = p.k;
  r.u_distance = distance_to_code(extension_vector(p), dual, budget);
  r.deep_hole = (r.u_distance == r.rho);
  r.mds_criteria_hold = mds_conditions(p).overall;
  return r;
}

std::vector<CoveringReport> sweep_covering(const FieldPtr& field,
                                           std::span<const Elem> alpha, int k,
                                           int jobs, std::int64_t budget) {
  const std::int64_t q = field->q();
  std::vector<CoveringReport> out(static_cast<size_t>(q * q * q));
  ConstructionParams base;
  base.field = field;
  base.alpha.assign(alpha.begin(), alpha.end());
  base.k = k;
  base.validate();

  parallel_for_index(q * q * q, jobs, [&](std::int64_t idx) {
    ConstructionParams p = base;
    p.pi = static_cast<Elem>(idx % q);
    p.tau = static_cast<Elem>((idx / q) % q);
    p.delta = static_cast<Elem>(idx / (q * q));
    out[static_cast<size_t>(idx)] = verify_covering(p, budget);
  });
  return out;
}

}  // namespace rlext
