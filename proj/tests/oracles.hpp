#pragma once

// Reference implementations used only by the tests. Each one favors the
// most direct formulation available (cofactor expansion, full enumeration)
// so the library's optimized routines have something independent to agree
// with.

#include <random>
#include <vector>

#include "rlext/code.hpp"
#include "rlext/gf.hpp"
#include "rlext/matrix.hpp"

namespace rlext::testing {

// Determinant by cofactor expansion along the first row. Exponential; keep
// the order at 6 or below.
inline Elem oracle_det(const Matrix& m) {
  const Field& f = m.field();
  const int n = m.rows();
  if (n == 1) return m(0, 0);
  Elem acc = 0;
  for (int c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    Matrix minor(m.field_ptr(), n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int col = 0; col < n; ++col) {
        if (col == c) continue;
        minor.set(r - 1, cc++, m(r, col));
      }
    }
    Elem term = f.mul(m(0, c), oracle_det(minor));
    if (c % 2 == 1) term = f.neg(term);
    acc = f.add(acc, term);
  }
  return acc;
}

// Codeword for one ranked message, by plain dot products.
inline std::vector<Elem> oracle_codeword(const LinearCode& code, long long rank) {
  const Field& f = code.field();
  const Matrix& g = code.generator();
  std::vector<Elem> cw(code.length(), 0);
  for (int i = 0; i < code.dimension(); ++i) {
    const Elem mi = static_cast<Elem>(rank % f.q());
    rank /= f.q();
    for (int c = 0; c < code.length(); ++c)
      cw[c] = f.add(cw[c], f.mul(mi, g(i, c)));
  }
  return cw;
}

inline int weight(const std::vector<Elem>& v) {
  int w = 0;
  for (Elem x : v) w += x != 0;
  return w;
}

inline long long oracle_size(const LinearCode& code) {
  long long total = 1;
  for (int i = 0; i < code.dimension(); ++i) total *= code.field().q();
  return total;
}

inline int oracle_min_distance(const LinearCode& code) {
  int best = kInfiniteDistance;
  for (long long r = 1; r < oracle_size(code); ++r)
    best = std::min(best, weight(oracle_codeword(code, r)));
  return best;
}

inline int oracle_distance_to_code(const std::vector<Elem>& v,
                                   const LinearCode& code) {
  const Field& f = code.field();
  int best = code.length() + 1;
  for (long long r = 0; r < oracle_size(code); ++r) {
    const std::vector<Elem> cw = oracle_codeword(code, r);
    int d = 0;
    for (size_t i = 0; i < v.size(); ++i) d += f.sub(v[i], cw[i]) != 0;
    best = std::min(best, d);
  }
  return best;
}

// Covering radius by scanning the whole ambient space. q^(n+k) work; only
// for very small codes.
inline int oracle_covering_radius(const LinearCode& code) {
  const Field& f = code.field();
  const int n = code.length();
  long long space = 1;
  for (int i = 0; i < n; ++i) space *= f.q();
  int rho = 0;
  std::vector<Elem> v(n);
  for (long long r = 0; r < space; ++r) {
    long long x = r;
    for (int i = 0; i < n; ++i) {
      v[i] = static_cast<Elem>(x % f.q());
      x /= f.q();
    }
    rho = std::max(rho, oracle_distance_to_code(v, code));
  }
  return rho;
}

// Complete homogeneous symmetric polynomial by explicit enumeration of all
// exponent compositions i1 + ... + il = r.
inline Elem oracle_homogeneous(const Field& f, int r,
                               const std::vector<Elem>& values, size_t from = 0) {
  if (r == 0) return 1;
  if (from == values.size()) return 0;
  Elem acc = 0;
  Elem power = 1;
  for (int e = 0; e <= r; ++e) {
    acc = f.add(acc, f.mul(power, oracle_homogeneous(f, r - e, values, from + 1)));
    power = f.mul(power, values[from]);
  }
  return acc;
}

// Deterministic RNG helpers shared by the property tests.
inline std::mt19937& rng() {
  static std::mt19937 gen(20240817);
  return gen;
}

inline Elem random_element(const Field& f) {
  return static_cast<Elem>(rng()() % f.q());
}

inline std::vector<Elem> random_distinct(const Field& f, int count) {
  std::vector<Elem> all(f.q());
  for (int i = 0; i < f.q(); ++i) all[i] = static_cast<Elem>(i);
  std::shuffle(all.begin(), all.end(), rng());
  all.resize(count);
  return all;
}

}  // namespace rlext::testing
