// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Each criterion recomputes everything it asserts from scratch so a pass
// certifies the library end to end, not a cached intermediate.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "rlext/covering.hpp"
#include "rlext/criteria.hpp"
#include "rlext/extendable.hpp"
#include "rlext/util.hpp"

using namespace rlext;

namespace {

int g_failures = 0;

int hardware_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void report(const std::string& title, bool pass, const std::string& detail,
            double seconds) {
  std::printf("[%s] %s (%.2f s)\n", pass ? "PASS" : "FAIL", title.c_str(),
              seconds);
  if (!detail.empty()) {
    std::istringstream lines(detail);
    std::string line;
    while (std::getline(lines, line))
      std::printf("       %s\n", line.c_str());
  }
  if (!pass) ++g_failures;
}

template <typename Fn>
void criterion(const std::string& title, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report(title, pass, detail, secs);
}

ConstructionParams params(const FieldPtr& f, std::vector<Elem> alpha, int k,
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

std::vector<std::array<Elem, 3>> mds_triples(const FieldPtr& f,
                                             const std::vector<Elem>& alpha,
                                             int k) {
  const int q = f->q();
  std::vector<std::array<Elem, 3>> out;
  for (int d = 0; d < q; ++d)
    for (int t = 0; t < q; ++t)
      for (int pi = 0; pi < q; ++pi) {
        const ConstructionParams p =
            params(f, alpha, k, static_cast<Elem>(d), static_cast<Elem>(t),
                   static_cast<Elem>(pi));
        if (mds_conditions(p).overall &&
            classify(c2_code(p)).verdict == Verdict::kMds)
          out.push_back({static_cast<Elem>(d), static_cast<Elem>(t),
                         static_cast<Elem>(pi)});
      }
  return out;
}

// ---- criterion 1 ------------------------------------------------------------

bool criterion1(std::string& detail) {
  FieldPtr f = make_field(2, 2);
  const std::vector<std::pair<std::vector<Elem>, std::array<Elem, 3>>> cases{
      {{0, 1, 2}, {0, 3, 2}},
      {{0, 1, 3}, {0, 2, 3}},
      {{0, 2, 3}, {0, 1, 1}},
      {{1, 2, 3}, {0, 0, 0}},
  };
  bool ok = true;
  std::ostringstream d;
  for (const auto& [alpha, expected] : cases) {
    const auto found = mds_triples(f, alpha, 3);
    if (found.size() != 1 || found[0] != expected) {
      ok = false;
      d << "point set {" << alpha[0] << "," << alpha[1] << "," << alpha[2]
        << "}: " << found.size() << " MDS triples\n";
      continue;
    }
    const Classification cls = classify(
        c2_code(params(f, alpha, 3, expected[0], expected[1], expected[2])));
    if (cls.n != 6 || cls.k != 3 || cls.d != 4) {
      ok = false;
      d << "unexpected parameters [" << cls.n << "," << cls.k << "," << cls.d
        << "]\n";
    }
  }
  detail = d.str();
  return ok;
}

// ---- criterion 2 ------------------------------------------------------------

bool criterion2(std::string& detail) {
  std::ostringstream d;
  bool ok = true;

  FieldPtr f5 = make_field(5, 1);
  const Classification cls =
      classify(c2_code(params(f5, {1, 2, 3}, 3, 2, 0, 1)));
  if (cls.verdict != Verdict::kMds || cls.d != 4) {
    ok = false;
    d << "GF(5) (2,0,1): verdict " << to_string(cls.verdict) << " d=" << cls.d
      << "\n";
  }

  FieldPtr f7 = make_field(7, 1);
  const auto found = mds_triples(f7, {2, 3, 5}, 3);
  if (found.size() != 28) {
    ok = false;
    d << "GF(7): " << found.size() << " MDS triples, expected 28\n";
  }
  bool has_302 = false;
  for (const auto& t : found) {
    if (t == std::array<Elem, 3>{3, 0, 2}) has_302 = true;
    const Classification c =
        classify(c2_code(params(f7, {2, 3, 5}, 3, t[0], t[1], t[2])));
    if (c.n != 6 || c.k != 3 || c.d != 4) {
      ok = false;
      d << "GF(7) triple d mismatch\n";
    }
  }
  if (!has_302) {
    ok = false;
    d << "GF(7): (3,0,2) missing from the MDS list\n";
  }
  detail = d.str();
  return ok;
}

// ---- criterion 3 ------------------------------------------------------------

bool criterion3(std::string& detail) {
  FieldPtr f = make_field(2, 3);
  struct Config {
    int k;
    std::vector<int> alpha_powers;  // -1 encodes the zero element
    std::array<int, 3> triple_powers;  // -2 encodes the zero element
    std::array<int, 3> expect;         // [n, k, d]
  };
  const std::vector<Config> configs{
      {3, {-1, 0, 1, 3}, {6, 5, 2}, {7, 3, 5}},
      {4, {-1, 0, 1, 3}, {6, 6, -2}, {7, 4, 4}},
      {3, {-1, 0, 1, 2, 3}, {-2, 4, 1}, {8, 3, 6}},
  };
  std::ostringstream d;
  bool ok = true;
  for (const Config& cfg : configs) {
    bool some_primitive = false;
    for (Elem g : f->primitive_elements()) {
      std::vector<Elem> alpha;
      for (int pw : cfg.alpha_powers)
        alpha.push_back(pw < 0 ? 0 : f->pow(g, pw));
      const auto elem = [&](int pw) {
        return pw == -2 ? Elem{0} : f->pow(g, pw);
      };
      const ConstructionParams p =
          params(f, alpha, cfg.k, elem(cfg.triple_powers[0]),
                 elem(cfg.triple_powers[1]), elem(cfg.triple_powers[2]));
      const Classification cls = classify(c2_code(p));
      if (cls.verdict == Verdict::kMds && cls.n == cfg.expect[0] &&
          cls.k == cfg.expect[1] && cls.d == cfg.expect[2]) {
        some_primitive = true;
        break;
      }
    }
    if (!some_primitive) {
      ok = false;
      d << "no primitive realizes [" << cfg.expect[0] << "," << cfg.expect[1]
        << "," << cfg.expect[2] << "]\n";
    }
  }
  detail = d.str();
  return ok;
}

// ---- criteria 4 and 5 share the configuration sweep -------------------------

template <typename Fn>
void sweep_configs(Fn&& per_config) {
  for (int q : {4, 5, 7}) {
    const auto pm = factor_prime_power(q);
    FieldPtr f = make_field(pm->first, pm->second);
    for (int n : {3, 4}) {
      for_each_combination(q, n, [&](const std::vector<int>& idx) {
        std::vector<Elem> alpha;
        for (int i : idx) alpha.push_back(static_cast<Elem>(i));
        const std::int64_t total =
            static_cast<std::int64_t>(q) * q * q;
        std::atomic<std::int64_t> mism{0};
        parallel_for_index(total, hardware_jobs(), [&](std::int64_t i) {
          const ConstructionParams p = params(
              f, alpha, 3, static_cast<Elem>(i / (q * q)),
              static_cast<Elem>((i / q) % q), static_cast<Elem>(i % q));
          if (!per_config(p)) mism.fetch_add(1, std::memory_order_relaxed);
        });
        if (mism.load() != 0)
          throw std::runtime_error("mismatches in configuration sweep");
        return true;
      });
    }
  }
}

bool criterion4(std::string& detail) {
  std::atomic<std::int64_t> configs{0};
  try {
    sweep_configs([&](const ConstructionParams& p) {
      configs.fetch_add(1, std::memory_order_relaxed);
      const int n = p.n();
      const LinearCode c2 = c2_code(p);
      const int d = c2.minimum_distance();
      const int d_dual = c2.dual().minimum_distance();

      if (mds_conditions(p).overall != (d == n + 1)) return false;
      if (mds_by_minors(c2) != (d == n + 1)) return false;
      if (c2_amds_conditions(p).overall != (d == n)) return false;
      if (dual_amds_conditions(p).overall != (d_dual == p.k)) return false;
      const ConditionReport mds = mds_conditions(p);
      if (mds.leaf("cond1") && mds.leaf("cond2")) {
        const bool nmds = d == n && d_dual == p.k;
        if (nmds_conditions(p).overall != nmds) return false;
      }
      return true;
    });
  } catch (const std::exception&) {
    detail = "criterion predicates disagree with measured distances";
    return false;
  }
  detail = std::to_string(configs.load()) + " configurations, zero mismatches";
  return true;
}

bool criterion5(std::string& detail) {
  std::atomic<std::int64_t> configs{0};
  try {
    sweep_configs([&](const ConstructionParams& p) {
      configs.fetch_add(1, std::memory_order_relaxed);
      const LinearCode c2 = c2_code(p);
      const LinearCode rl = roth_lempel(p.field, p.alpha, p.delta, p.k);
      if (!extend_with_u(rl, extension_vector(p)).same_code(c2)) return false;
      const Matrix h = c2_parity_matrix(p);
      if (!(c2.generator() * h.transpose()).is_zero()) return false;
      if (h.rank() != p.n() + 3 - p.k) return false;
      return true;
    });
  } catch (const std::exception&) {
    detail = "extension identity or parity annihilation failed";
    return false;
  }
  detail = std::to_string(configs.load()) +
           " configurations: u-extension equals the three-column code and "
           "the parity matrix annihilates it";
  return true;
}

// ---- criterion 6 ------------------------------------------------------------

bool criterion6(std::string& detail) {
  std::ostringstream d;
  bool ok = true;

  // GF(8) reference data: alpha = (0, 1, g, g^2), triple (g^2, g^2, g^5).
  {
    FieldPtr f = make_field(2, 3);
    bool some = false;
    std::ostringstream scan;
    for (Elem g : f->primitive_elements()) {
      const Elem g2 = f->mul(g, g);
      const ConstructionParams p = params(
          f, {0, 1, g, g2}, 3, g2, g2, f->pow(g, 5));
      const CoveringReport r = verify_covering(p);
      scan << "  g=" << static_cast<int>(g) << ": rho=" << r.rho
           << " u_distance=" << r.u_distance
           << " criteria=" << (r.mds_criteria_hold ? "hold" : "fail") << "\n";
      if (r.rho == 3 && r.deep_hole) some = true;
    }
    if (!some) {
      ok = false;
      d << "GF(8) (g^2,g^2,g^5) with alpha (0,1,g,g^2): no primitive gives "
           "a deep hole\n"
        << scan.str()
        << "  the four MDS conditions fail for every primitive as well;\n"
        << "  nearest working data: (g^5,g^5,g^4) passes all claims for "
           "g in {2,4,6}\n";
    }
  }

  // GF(9) reference data: alpha = (0, 1, g, g^2), triple (g^6, g^5, 1).
  {
    FieldPtr f = make_field(3, 2);
    bool some = false;
    for (Elem g : f->primitive_elements()) {
      const ConstructionParams p =
          params(f, {0, 1, g, f->mul(g, g)}, 3, f->pow(g, 6), f->pow(g, 5), 1);
      const CoveringReport r = verify_covering(p);
      if (r.rho == 3 && r.deep_hole && r.mds_criteria_hold) some = true;
    }
    if (!some) {
      ok = false;
      d << "GF(9) (g^6,g^5,1): no primitive confirms rho = 3 with a deep "
           "hole\n";
    }
  }

  // GF(5), alpha = (1,2,3,4): rho = 3 iff delta = 0, and no triple is MDS.
  {
    FieldPtr f = make_field(5, 1);
    const std::vector<Elem> alpha{1, 2, 3, 4};
    int mds_count = 0;
    for (const CoveringReport& r : sweep_covering(f, alpha, 3)) {
      mds_count += r.mds_criteria_hold;
      const int expected = r.delta == 0 ? 3 : 2;
      if (r.rho != expected) {
        ok = false;
        d << "GF(5) delta=" << static_cast<int>(r.delta) << ": rho=" << r.rho
          << "\n";
      }
    }
    if (mds_count != 0) {
      ok = false;
      d << "GF(5): " << mds_count << " triples pass the MDS criteria\n";
    }
  }

  detail = d.str();
  return ok;
}

// ---- criterion 7 ------------------------------------------------------------

bool criterion7(std::string& detail) {
  std::int64_t checked = 0;
  std::ostringstream d;
  bool ok = true;
  for (int q : {5, 7, 8, 9}) {
    const auto pm = factor_prime_power(q);
    FieldPtr f = make_field(pm->first, pm->second);
    for (int n = 4; n <= std::min(q - 1, 6); ++n) {
      // Every subset of the nonzero elements.
      for_each_combination(q - 1, n, [&](const std::vector<int>& idx) {
        std::vector<Elem> alpha;
        for (int i : idx) alpha.push_back(static_cast<Elem>(i + 1));
        const ExtendabilityReport r = extendability_verdict(f, alpha);
        ++checked;
        if (r.predicted_dual_distance != r.measured_dual_distance) {
          ok = false;
          d << "GF(" << q << ") n=" << n << ": prediction "
            << r.predicted_dual_distance << " measured "
            << r.measured_dual_distance << "\n";
        }
        return true;
      });
      // Every subset that contains zero.
      for_each_combination(q - 1, n - 1, [&](const std::vector<int>& idx) {
        std::vector<Elem> alpha{0};
        for (int i : idx) alpha.push_back(static_cast<Elem>(i + 1));
        const ExtendabilityReport r = extendability_verdict(f, alpha);
        ++checked;
        if (r.verdict != Extendability::kNeither ||
            r.measured_dual_distance != 2) {
          ok = false;
          d << "GF(" << q << ") n=" << n
            << " zero-containing set measured d_dual="
            << r.measured_dual_distance << "\n";
        }
        return true;
      });
    }
  }
  if (ok) detail = std::to_string(checked) + " point sets, zero mismatches";
  else detail = d.str();
  return ok;
}

// ---- criterion 8 ------------------------------------------------------------

bool check_axioms(const Field& f) {
  const int q = f.q();
  for (int a = 0; a < q; ++a) {
    const Elem ea = static_cast<Elem>(a);
    if (f.add(ea, 0) != ea || f.mul(ea, 1) != ea) return false;
    if (f.add(ea, f.neg(ea)) != 0) return false;
    if (a != 0 && f.mul(ea, f.inv(ea)) != 1) return false;
    for (int b = 0; b < q; ++b) {
      const Elem eb = static_cast<Elem>(b);
      if (f.add(ea, eb) != f.add(eb, ea)) return false;
      if (f.mul(ea, eb) != f.mul(eb, ea)) return false;
      for (int c = 0; c < q; ++c) {
        const Elem ec = static_cast<Elem>(c);
        if (f.add(f.add(ea, eb), ec) != f.add(ea, f.add(eb, ec))) return false;
        if (f.mul(f.mul(ea, eb), ec) != f.mul(ea, f.mul(eb, ec))) return false;
        if (f.mul(ea, f.add(eb, ec)) !=
            f.add(f.mul(ea, eb), f.mul(ea, ec)))
          return false;
      }
    }
  }
  return true;
}

bool criterion8(std::string& detail) {
  std::ostringstream d;
  bool ok = true;

  // Exhaustive axioms for every prime power up to 64.
  int fields = 0;
  for (int q = 2; q <= 64; ++q) {
    const auto pm = factor_prime_power(q);
    if (!pm) continue;
    ++fields;
    if (!check_axioms(*make_field(pm->first, pm->second))) {
      ok = false;
      d << "axioms fail in GF(" << q << ")\n";
    }
  }

  std::mt19937 gen(987654321);
  const std::vector<FieldPtr> pool{make_field(7, 1), make_field(2, 3),
                                   make_field(3, 2), make_field(2, 4),
                                   make_field(5, 2)};
  const auto random_distinct = [&](const Field& f, int count) {
    std::vector<Elem> all(f.q());
    for (int i = 0; i < f.q(); ++i) all[i] = static_cast<Elem>(i);
    std::shuffle(all.begin(), all.end(), gen);
    all.resize(count);
    return all;
  };

  // Factorization of generalized alternant determinants, random instances.
  int gvand_bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const FieldPtr& f = pool[trial % pool.size()];
    const int m = 1 + static_cast<int>(gen() % 4);
    const std::vector<Elem> pts = random_distinct(*f, m + 1);
    std::vector<int> exps(m);
    int e = 0;
    for (int i = 0; i < m; ++i) exps[i] = (e += 1 + static_cast<int>(gen() % 3));
    const Elem lhs =
        Matrix::generalized_vandermonde(f, exps, pts).determinant();
    const Elem rhs = f->mul(gvand_factor(*f, exps, pts),
                            Matrix::vandermonde(f, pts, m + 1).determinant());
    gvand_bad += lhs != rhs;
  }
  if (gvand_bad != 0) {
    ok = false;
    d << gvand_bad << " factorization mismatches\n";
  }

  // Complete homogeneous sums: table recursion against direct monomial
  // enumeration for all r, l up to 6.
  int homog_bad = 0;
  const auto direct = [&](const Field& f, int r, const std::vector<Elem>& vals,
                          auto&& self, size_t from) -> Elem {
    if (r == 0) return 1;
    if (from == vals.size()) return 0;
    Elem acc = 0;
    Elem power = 1;
    for (int i = 0; i <= r; ++i) {
      acc = f.add(acc, f.mul(power, self(f, r - i, vals, self, from + 1)));
      power = f.mul(power, vals[from]);
    }
    return acc;
  };
  for (int l = 1; l <= 6; ++l)
    for (int r = 0; r <= 6; ++r)
      for (int trial = 0; trial < 5; ++trial) {
        const FieldPtr& f = pool[(l + r + trial) % pool.size()];
        std::vector<Elem> vals(l);
        for (auto& v : vals) v = static_cast<Elem>(gen() % f->q());
        if (homogeneous_poly(*f, r, vals) != direct(*f, r, vals, direct, 0))
          ++homog_bad;
      }
  if (homog_bad != 0) {
    ok = false;
    d << homog_bad << " homogeneous-sum mismatches\n";
  }

  // Weighted power sums of the unit-solution weights: zero below degree
  // n-1, one at n-1, then the two moments a and b.
  int moment_bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const FieldPtr& f = pool[trial % pool.size()];
    const int n = 3 + static_cast<int>(gen() % std::min(4, f->q() - 2));
    const std::vector<Elem> pts = random_distinct(*f, n);
    const std::vector<Elem> w = cramer_unit_solution(*f, pts);
    const auto [a, b] = moment_pair(*f, pts);
    for (int r = 0; r <= n + 1; ++r) {
      Elem s = 0;
      for (int i = 0; i < n; ++i)
        s = f->add(s, f->mul(w[i], f->pow(pts[i], r)));
      const Elem expect = r < n - 1 ? Elem{0}
                          : r == n - 1 ? Elem{1}
                          : r == n ? a
                                   : b;
      moment_bad += s != expect;
    }
  }
  if (moment_bad != 0) {
    ok = false;
    d << moment_bad << " moment-identity mismatches\n";
  }

  if (ok)
    detail = std::to_string(fields) +
             " fields exhaustively checked; 1000 factorization trials; "
             "1000 moment trials";
  else
    detail = d.str();
  return ok;
}

// ---- best-effort smoke test --------------------------------------------------

bool smoke_non_grs(std::string& detail) {
  // Dimension-3 codes coming from polynomial evaluation have generator
  // columns lying on a single nonzero conic. The six columns of the GF(4)
  // [6,3,4] code admit no such conic: the 6 x 6 system built from the
  // monomials x^2, y^2, z^2, xy, xz, yz has full rank.
  FieldPtr f = make_field(2, 2);
  const LinearCode c = c2_code(params(f, {0, 1, 2}, 3, 0, 3, 2));
  if (classify(c).verdict != Verdict::kMds) {
    detail = "expected the [6,3,4] code";
    return false;
  }
  const Matrix& g = c.generator();
  Matrix monomials(f, 6, 6);
  for (int col = 0; col < 6; ++col) {
    const Elem x = g(0, col), y = g(1, col), z = g(2, col);
    monomials.set(col, 0, f->mul(x, x));
    monomials.set(col, 1, f->mul(y, y));
    monomials.set(col, 2, f->mul(z, z));
    monomials.set(col, 3, f->mul(x, y));
    monomials.set(col, 4, f->mul(x, z));
    monomials.set(col, 5, f->mul(y, z));
  }
  if (monomials.rank() != 6) {
    detail = "a conic passes through all six generator columns";
    return false;
  }
  detail = "no conic contains the six generator points of the GF(4) code";
  return true;
}

}  // namespace

int main() {
  criterion("1. GF(4): each of the four point sets has exactly one MDS triple",
            criterion1);
  criterion("2. GF(5) (2,0,1) is MDS; GF(7) {2,3,5} has exactly 28 MDS triples",
            criterion2);
  criterion("3. GF(8): the three reference configurations are MDS for some "
            "primitive",
            criterion3);
  criterion("4. criteria match measured distances on every small-field "
            "configuration",
            criterion4);
  criterion("5. u-extension identity and parity-matrix annihilation on the "
            "same sweep",
            criterion5);
  criterion("6. covering radii: GF(8)/GF(9) reference data and the GF(5) "
            "full sweep",
            criterion6);
  criterion("7. identity-augmentation predictions match measured dual "
            "distances up to GF(9)",
            criterion7);
  criterion("8. field axioms, determinant factorization, homogeneous sums, "
            "moment identities",
            criterion8);
  criterion("9. smoke: the GF(4) [6,3,4] code is not an evaluation code",
            smoke_non_grs);

  if (g_failures != 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
