#include "rlext/criteria.hpp"

#include <stdexcept>

#include "rlext/util.hpp"

namespace rlext {
namespace {

struct SubsetSums {
  Elem s1 = 0;  // sum of the selected points
  Elem e2 = 0;  // sum over unordered pairs of products
  Elem sq = 0;  // sum of squares
};

SubsetSums subset_sums(const Field& f, std::span<const Elem> alpha,
                       std::span<const int> idx) {
  SubsetSums s;
  for (int i : idx) {
    const Elem a = alpha[i];
    s.e2 = f.add(s.e2, f.mul(a, s.s1));
    s.s1 = f.add(s.s1, a);
    s.sq = f.add(s.sq, f.mul(a, a));
  }
  return s;
}

// Scans all t-subsets in lexicographic order; returns true when violates()
// is false everywhere, otherwise records the first violating subset.
template <typename Violates>
bool holds_for_all_subsets(const Field& f, std::span<const Elem> alpha, int t,
                           std::optional<std::vector<int>>* witness,
                           Violates&& violates) {
  const int n = static_cast<int>(alpha.size());
  bool ok = true;
  for_each_combination(n, t, [&](std::span<const int> idx) {
    if (violates(subset_sums(f, alpha, idx))) {
      ok = false;
      if (witness) *witness = std::vector<int>(idx.begin(), idx.end());
      return false;
    }
    return true;
  });
  return ok;
}

struct CoreConditions {
  NamedCondition c1{"cond1"}, c2{"cond2"}, c3{"cond3"}, c4{"cond4"};
};

CoreConditions core_conditions(const ConstructionParams& p) {
  const Field& f = *p.field;
  CoreConditions c;
  c.c1.holds = holds_for_all_subsets(
      f, p.alpha, p.k - 1, &c.c1.witness,
      [&](const SubsetSums& s) { return s.s1 == p.delta; });
  c.c2.holds = holds_for_all_subsets(
      f, p.alpha, p.k - 2, &c.c2.witness,
      [&](const SubsetSums& s) { return s.s1 == p.tau; });
  c.c3.holds = holds_for_all_subsets(
      f, p.alpha, p.k - 1, &c.c3.witness, [&](const SubsetSums& s) {
        return f.add(s.e2, p.pi) == f.mul(p.tau, s.s1);
      });
  c.c4.holds = holds_for_all_subsets(
      f, p.alpha, p.k - 2, &c.c4.witness, [&](const SubsetSums& s) {
        return f.add(p.pi, f.mul(p.delta, s.s1)) ==
               f.add(f.mul(p.tau, p.delta), f.add(s.sq, s.e2));
      });
  return c;
}

}  // namespace

const NamedCondition* ConditionReport::find(std::string_view name) const {
  for (const auto& leaf : leaves)
    if (leaf.name == name) return &leaf;
  return nullptr;
}

bool ConditionReport::leaf(std::string_view name) const {
  const NamedCondition* c = find(name);
  if (!c) throw std::out_of_range("no condition named " + std::string(name));
  return c->holds;
}

bool is_sum_avoiding_set(const Field& f, std::span<const Elem> s, int t,
                         Elem target, std::vector<int>* witness) {
  const int n = static_cast<int>(s.size());
  if (t < 1 || t > n) throw std::invalid_argument("subset size out of range");
  f.check(target);
  std::optional<std::vector<int>> w;
  const bool ok = holds_for_all_subsets(
      f, s, t, &w, [&](const SubsetSums& sums) { return sums.s1 == target; });
  if (!ok && witness) *witness = *w;
  return ok;
}

ConditionReport mds_conditions(const ConstructionParams& p) {
  p.validate();
  CoreConditions c = core_conditions(p);
  ConditionReport r;
  r.overall = c.c1.holds && c.c2.holds && c.c3.holds && c.c4.holds;
  r.leaves = {std::move(c.c1), std::move(c.c2), std::move(c.c3), std::move(c.c4)};
  return r;
}

ConditionReport dual_amds_conditions(const ConstructionParams& p) {
  p.validate();
  const Field& f = *p.field;
  CoreConditions c = core_conditions(p);

  // Every k-1 columns of the generator are independent iff no (k-2)-subset
  // satisfies both tail equations at once.
  NamedCondition indep{"independence"};
  indep.holds = holds_for_all_subsets(
      f, p.alpha, p.k - 2, &indep.witness, [&](const SubsetSums& s) {
        return s.s1 == p.tau && f.add(s.sq, s.e2) == p.pi;
      });

  const bool any_defect = !c.c1.holds || !c.c2.holds || !c.c3.holds || !c.c4.holds;
  NamedCondition case1{"case1"};
  case1.holds = c.c2.holds && (!c.c1.holds || !c.c3.holds || !c.c4.holds);
  NamedCondition case2{"case2"};
  case2.holds = indep.holds && any_defect;

  ConditionReport r;
  r.overall = case1.holds || case2.holds;
  r.leaves = {std::move(c.c1), std::move(c.c2), std::move(c.c3),
              std::move(c.c4), std::move(indep), std::move(case1),
              std::move(case2)};
  return r;
}

ConditionReport c2_amds_conditions(const ConstructionParams& p) {
  p.validate();
  const Field& f = *p.field;
  CoreConditions c = core_conditions(p);
  const auto [a, b] = moment_pair(f, p.alpha);

  // Every n+2-k columns of the parity matrix are independent iff no
  // (n+1-k)-subset satisfies both tail equations at once.
  const Elem sum_target = f.sub(a, p.delta);
  const Elem quad_target =
      f.sub(f.add(b, f.mul(p.delta, f.sub(p.tau, a))), p.pi);
  NamedCondition indep{"independence"};
  indep.holds = holds_for_all_subsets(
      f, p.alpha, p.n() + 1 - p.k, &indep.witness, [&](const SubsetSums& s) {
        return s.s1 == sum_target && f.add(s.sq, s.e2) == quad_target;
      });

  const bool any_defect = !c.c1.holds || !c.c2.holds || !c.c3.holds || !c.c4.holds;
  NamedCondition case1{"case1"};
  case1.holds = c.c1.holds && (!c.c2.holds || !c.c3.holds || !c.c4.holds);
  NamedCondition case2{"case2"};
  case2.holds = indep.holds && any_defect;

  ConditionReport r;
  r.overall = case1.holds || case2.holds;
  r.leaves = {std::move(c.c1), std::move(c.c2), std::move(c.c3),
              std::move(c.c4), std::move(indep), std::move(case1),
              std::move(case2)};
  return r;
}

ConditionReport nmds_conditions(const ConstructionParams& p) {
  p.validate();
  CoreConditions c = core_conditions(p);
  if (!c.c1.holds || !c.c2.holds)
    throw std::domain_error(
        "hypothesis fails: alpha must avoid delta on (k-1)-subsets and tau on "
        "(k-2)-subsets");
  ConditionReport r;
  r.overall = !c.c3.holds || !c.c4.holds;
  r.leaves = {std::move(c.c1), std::move(c.c2), std::move(c.c3), std::move(c.c4)};
  return r;
}

bool mds_by_minors(const LinearCode& c) {
  const Matrix& g = c.generator();
  const int k = g.rows();
  const int n = g.cols();
  bool ok = true;
  for_each_combination(n, k, [&](std::span<const int> idx) {
    std::vector<int> cols(idx.begin(), idx.end());
    if (g.submatrix_cols(cols).determinant() == 0) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

}  // namespace rlext
