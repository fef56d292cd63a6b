#include "rlext/construct.hpp"

#include <stdexcept>
#include <unordered_set>

namespace rlext {
namespace {

void require_distinct(const Field& f, std::span<const Elem> alpha) {
  std::unordered_set<Elem> seen;
  for (Elem a : alpha) {
    f.check(a);
    if (!seen.insert(a).second)
      throw std::invalid_argument("evaluation points must be distinct");
  }
}

}  // namespace

void ConstructionParams::validate() const {
  if (!field) throw std::invalid_argument("params need a field");
  require_distinct(*field, alpha);
  if (alpha.empty()) throw std::invalid_argument("alpha must be nonempty");
  if (k < 3) throw std::invalid_argument("dimension k must be at least 3");
  if (n() < k) throw std::invalid_argument("need at least k evaluation points");
  field->check(delta);
  field->check(tau);
  field->check(pi);
}

bool ConstructionParams::within_stated_range() const {
  return 4 <= k + 1 && k + 1 <= n() && n() <= field->q();
}

LinearCode grs(const FieldPtr& field, std::span<const Elem> alpha,
               std::span<const Elem> v, int k) {
  const Field& f = *field;
  require_distinct(f, alpha);
  const int n = static_cast<int>(alpha.size());
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("need one multiplier per point");
  for (Elem vi : v)
    if (f.check(vi) == 0) throw std::invalid_argument("multipliers must be nonzero");

  Matrix g(field, k, n);
  for (int j = 0; j < n; ++j) {
    Elem cell = v[j];
    for (int i = 0; i < k; ++i) {
      g.set(i, j, cell);
      cell = f.mul(cell, alpha[j]);
    }
  }
  return LinearCode(std::move(g));
}

LinearCode roth_lempel(const FieldPtr& field, std::span<const Elem> alpha,
                       Elem delta, int k) {
  const Field& f = *field;
  require_distinct(f, alpha);
  f.check(delta);
  const int n = static_cast<int>(alpha.size());
  if (k < 3) throw std::invalid_argument("dimension k must be at least 3");
  if (n < k) throw std::invalid_argument("need at least k evaluation points");

  Matrix g(field, k, n + 2);
  for (int j = 0; j < n; ++j) {
    Elem cell = 1;
    for (int i = 0; i < k; ++i) {
      g.set(i, j, cell);
      cell = f.mul(cell, alpha[j]);
    }
  }
  g.set(k - 1, n, 1);
  g.set(k - 2, n + 1, 1);
  g.set(k - 1, n + 1, delta);
  return LinearCode(std::move(g));
}

LinearCode c2_code(const ConstructionParams& p) {
  p.validate();
  const Field& f = *p.field;
  const int n = p.n();
  const int k = p.k;

  Matrix g(p.field, k, n + 3);
  for (int j = 0; j < n; ++j) {
    Elem cell = 1;
    for (int i = 0; i < k; ++i) {
      g.set(i, j, cell);
      cell = f.mul(cell, p.alpha[j]);
    }
  }
  g.set(k - 1, n, 1);
  g.set(k - 2, n + 1, 1);
  g.set(k - 1, n + 1, p.delta);
  g.set(k - 3, n + 2, 1);
  g.set(k - 2, n + 2, p.tau);
  g.set(k - 1, n + 2, p.pi);
  return LinearCode(std::move(g));
}

std::pair<Elem, Elem> moment_pair(const Field& f, std::span<const Elem> alpha) {
  Elem a = 0;
  Elem e2 = 0;
  const int n = static_cast<int>(alpha.size());
  for (int i = 0; i < n; ++i) {
    e2 = f.add(e2, f.mul(alpha[i], a));
    a = f.add(a, alpha[i]);
  }
  const Elem b = f.sub(f.mul(a, a), e2);
  return {a, b};
}

std::vector<Elem> extension_vector(const ConstructionParams& p) {
  p.validate();
  const Field& f = *p.field;
  const int n = p.n();
  const auto w = cramer_unit_solution(f, p.alpha);
  const auto [a, b] = moment_pair(f, p.alpha);

  std::vector<Elem> u(n + 2, 0);
  for (int i = 0; i < n; ++i)
    u[i] = f.mul(w[i], f.pow(p.alpha[i], n + 2 - p.k));
  const Elem tau_shift = f.sub(p.tau, a);
  u[n] = f.sub(f.sub(p.pi, f.mul(tau_shift, p.delta)), b);
  u[n + 1] = tau_shift;
  return u;
}

Matrix c2_parity_matrix(const ConstructionParams& p) {
  p.validate();
  const Field& f = *p.field;
  const int n = p.n();
  const int k = p.k;
  const int rows = n + 3 - k;
  const auto w = cramer_unit_solution(f, p.alpha);
  const auto [a, b] = moment_pair(f, p.alpha);

  Matrix h(p.field, rows, n + 3);
  for (int j = 0; j < n; ++j) {
    Elem cell = w[j];
    for (int r = 0; r < rows; ++r) {
      h.set(r, j, cell);
      cell = f.mul(cell, p.alpha[j]);
    }
  }
  const Elem tau_shift = f.sub(p.tau, a);
  h.set(n - k, n, f.neg(1));
  h.set(n + 1 - k, n, f.sub(p.delta, a));
  h.set(n + 2 - k, n, f.sub(f.sub(p.pi, b), f.mul(p.delta, tau_shift)));
  h.set(n + 1 - k, n + 1, f.neg(1));
  h.set(n + 2 - k, n + 1, tau_shift);
  h.set(n + 2 - k, n + 2, f.neg(1));
  return h;
}

}  // namespace rlext
