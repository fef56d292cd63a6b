#include "doctest.h"
#include "oracles.hpp"
#include "rlext/criteria.hpp"

using namespace rlext;
using namespace rlext::testing;

namespace {

ConstructionParams triple(const FieldPtr& f, std::vector<Elem> alpha, int k,
                          Elem delta, Elem tau, Elem pi) {
  ConstructionParams p;
  p.field = f;
  p.alpha = std::move(alpha);
  p.k = k;
  p.delta = delta;
  p.tau = tau;
  p.pi = pi;
  return p;
}

}  // namespace

TEST_CASE("sum-avoiding sets") {
  FieldPtr f = make_field(5, 1);
  const std::vector<Elem> s{1, 2, 3};
  // 2 + 3 = 0, witnessed by the index pair (1, 2).
  std::vector<int> witness;
  CHECK_FALSE(is_sum_avoiding_set(*f, s, 2, 0, &witness));
  CHECK(witness == std::vector<int>{1, 2});
  // No pair sums to 1: the sums are 3, 4, 0.
  CHECK(is_sum_avoiding_set(*f, s, 2, 1));
  // Subset size must satisfy 1 <= t <= |S|.
  CHECK_THROWS_AS(is_sum_avoiding_set(*f, s, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(is_sum_avoiding_set(*f, s, 4, 0), std::invalid_argument);
  // t = |S| compares the total sum: 1 + 2 + 3 = 1 over GF(5).
  CHECK_FALSE(is_sum_avoiding_set(*f, s, 3, 1));
  CHECK(is_sum_avoiding_set(*f, s, 3, 2));
}

TEST_CASE("mds conditions match the direct minor test and the distance") {
  for (auto f : {make_field(2, 2), make_field(5, 1)}) {
    const int q = f->q();
    const std::vector<Elem> alpha{0, 1, 2};
    for (int d = 0; d < q; ++d)
      for (int t = 0; t < q; ++t)
        for (int pi = 0; pi < q; ++pi) {
          const ConstructionParams p =
              triple(f, alpha, 3, static_cast<Elem>(d), static_cast<Elem>(t),
                     static_cast<Elem>(pi));
          const ConditionReport r = mds_conditions(p);
          const LinearCode c = c2_code(p);
          CHECK(r.overall == mds_by_minors(c));
          CHECK(r.overall == (c.minimum_distance() == 4));
          CHECK(r.overall == (r.leaf("cond1") && r.leaf("cond2") &&
                              r.leaf("cond3") && r.leaf("cond4")));
        }
  }
}

TEST_CASE("witnesses identify genuinely offending subsets") {
  FieldPtr f = make_field(5, 1);
  const ConstructionParams p = triple(f, {1, 2, 3}, 3, 0, 3, 0);
  const ConditionReport r = mds_conditions(p);
  // cond1 fails: 2 + 3 = 0 = delta.
  const NamedCondition* c1 = r.find("cond1");
  REQUIRE(c1 != nullptr);
  CHECK_FALSE(c1->holds);
  REQUIRE(c1->witness.has_value());
  Elem sum = 0;
  for (int i : *c1->witness) sum = f->add(sum, p.alpha[i]);
  CHECK(sum == p.delta);
  CHECK(c1->witness->size() == 2);  // k-1 subsets

  // cond2 fails: the singleton {3} sums to tau.
  const NamedCondition* c2 = r.find("cond2");
  REQUIRE(c2 != nullptr);
  CHECK_FALSE(c2->holds);
  REQUIRE(c2->witness.has_value());
  CHECK(*c2->witness == std::vector<int>{2});

  CHECK(r.find("nonexistent") == nullptr);
  CHECK_THROWS_AS((void)r.leaf("nonexistent"), std::out_of_range);

  // Holding conditions carry no witness.
  const ConditionReport mds = mds_conditions(triple(f, {1, 2, 3}, 3, 2, 0, 1));
  CHECK(mds.overall);
  for (const NamedCondition& leaf : mds.leaves) CHECK_FALSE(leaf.witness.has_value());
}

TEST_CASE("dual AMDS criterion equals the measured dual distance") {
  for (auto f : {make_field(2, 2), make_field(5, 1)}) {
    const int q = f->q();
    std::vector<Elem> alpha{0, 1, 2};
    for (int d = 0; d < q; ++d)
      for (int t = 0; t < q; ++t)
        for (int pi = 0; pi < q; ++pi) {
          const ConstructionParams p =
              triple(f, alpha, 3, static_cast<Elem>(d), static_cast<Elem>(t),
                     static_cast<Elem>(pi));
          const bool amds_dual =
              c2_code(p).dual().minimum_distance() == 3;
          CHECK(dual_amds_conditions(p).overall == amds_dual);
        }
  }
}

TEST_CASE("dual AMDS regression: second case must cover cond2 failures") {
  // GF(5), alpha = (1,2,4), (0,1,4): the dual has distance exactly 3, yet
  // cond2 fails, so the first case cannot fire; the independence-based
  // second case is what certifies this triple.
  FieldPtr f = make_field(5, 1);
  const ConstructionParams p = triple(f, {1, 2, 4}, 3, 0, 1, 4);
  CHECK(c2_code(p).dual().minimum_distance() == 3);
  const ConditionReport r = dual_amds_conditions(p);
  CHECK(r.overall);
  CHECK_FALSE(r.leaf("cond2"));
  CHECK_FALSE(r.leaf("case1"));
  CHECK(r.leaf("case2"));
  CHECK(r.leaf("independence"));
}

TEST_CASE("primal AMDS criterion equals the measured distance") {
  for (auto f : {make_field(2, 2), make_field(5, 1)}) {
    const int q = f->q();
    std::vector<Elem> alpha{0, 1, 2};
    for (int d = 0; d < q; ++d)
      for (int t = 0; t < q; ++t)
        for (int pi = 0; pi < q; ++pi) {
          const ConstructionParams p =
              triple(f, alpha, 3, static_cast<Elem>(d), static_cast<Elem>(t),
                     static_cast<Elem>(pi));
          // [6,3] code: AMDS means distance n + 3 - k = 3.
          const bool amds = c2_code(p).minimum_distance() == 3;
          CHECK(c2_amds_conditions(p).overall == amds);
        }
  }
}

TEST_CASE("near-MDS criterion under its hypothesis") {
  FieldPtr f = make_field(5, 1);
  // (1,0,0) with alpha (1,2,3): cond1 and cond2 hold and the code is NMDS.
  const ConstructionParams good = triple(f, {1, 2, 3}, 3, 1, 0, 0);
  const ConditionReport r = nmds_conditions(good);
  CHECK(r.overall);
  const Classification cls = classify(c2_code(good));
  CHECK(cls.verdict == Verdict::kNmds);

  // MDS parameters satisfy the hypothesis but are not near-MDS.
  const ConstructionParams mds = triple(f, {1, 2, 3}, 3, 2, 0, 1);
  CHECK_FALSE(nmds_conditions(mds).overall);

  // Hypothesis failure throws.
  const ConstructionParams bad = triple(f, {1, 2, 3}, 3, 0, 3, 0);
  CHECK_THROWS_AS((void)nmds_conditions(bad), std::domain_error);
}

TEST_CASE("near-MDS criterion sweep against classification") {
  FieldPtr f = make_field(5, 1);
  const std::vector<Elem> alpha{1, 2, 3};
  int applicable = 0;
  for (int d = 0; d < 5; ++d)
    for (int t = 0; t < 5; ++t)
      for (int pi = 0; pi < 5; ++pi) {
        const ConstructionParams p = triple(
            f, alpha, 3, static_cast<Elem>(d), static_cast<Elem>(t),
            static_cast<Elem>(pi));
        const ConditionReport mds = mds_conditions(p);
        if (!(mds.leaf("cond1") && mds.leaf("cond2"))) continue;
        ++applicable;
        const bool is_nmds = classify(c2_code(p)).verdict == Verdict::kNmds;
        CHECK(nmds_conditions(p).overall == is_nmds);
      }
  CHECK(applicable > 0);
}

TEST_CASE("mds_by_minors flags singular column choices") {
  FieldPtr f = make_field(5, 1);
  // Two proportional columns break the MDS property.
  const LinearCode c{Matrix::from_rows(f, {{1, 2, 2}, {0, 1, 1}})};
  CHECK_FALSE(mds_by_minors(c));
  const LinearCode good{Matrix::from_rows(f, {{1, 0, 1}, {0, 1, 1}})};
  CHECK(mds_by_minors(good));
}
