#include "rlext/code.hpp"

#include <algorithm>
#include <mutex>
#include <optional>

#include "rlext/util.hpp"

namespace rlext {
namespace {

// q^e, saturating at cap + 1 to keep comparisons against cap meaningful.
std::int64_t ipow_sat(std::int64_t q, int e, std::int64_t cap) {
  std::int64_t out = 1;
  for (int i = 0; i < e; ++i) {
    if (out > cap / q) return cap + 1;
    out *= q;
  }
  return out;
}

// Number of vector evaluations in a full weight scan up to weight wmax.
std::int64_t weight_scan_work(int n, int q, int wmax, std::int64_t cap) {
  long double total = 0;
  long double binom = 1;  // C(n, w)
  long double vals = 1;   // (q-1)^w
  for (int w = 0; w <= wmax; ++w) {
    total += binom * vals;
    if (total > static_cast<long double>(cap)) return cap + 1;
    binom = binom * (n - w) / (w + 1);
    vals *= (q - 1);
  }
  return static_cast<std::int64_t>(total);
}

int hamming_weight(std::span<const Elem> v) {
  int w = 0;
  for (Elem e : v) w += (e != 0);
  return w;
}

std::int64_t syndrome_key(std::span<const Elem> syn, int q) {
  std::int64_t key = 0;
  for (int i = static_cast<int>(syn.size()) - 1; i >= 0; --i) key = key * q + syn[i];
  return key;
}

// Visits the syndrome h * v^T of every length-n vector v of weight exactly w,
// in lexicographic support order. fn returns false to stop; the function
// then returns false as well.
template <typename Fn>
bool scan_weight_syndromes(const Matrix& h, int w, Fn&& fn) {
  const Field& f = h.field();
  const int n = h.cols();
  const int rows = h.rows();
  const int q = f.q();
  std::vector<Elem> syn(rows, 0);
  std::vector<int> support(w, 0);

  auto rec = [&](auto&& self, int depth, int start) -> bool {
    if (depth == w) return fn(static_cast<std::span<const Elem>>(syn));
    for (int pos = start; pos <= n - (w - depth); ++pos) {
      for (int val = 1; val < q; ++val) {
        for (int r = 0; r < rows; ++r)
          syn[r] = f.add(syn[r], f.mul(static_cast<Elem>(val), h(r, pos)));
        const bool keep = self(self, depth + 1, pos + 1);
        for (int r = 0; r < rows; ++r)
          syn[r] = f.sub(syn[r], f.mul(static_cast<Elem>(val), h(r, pos)));
        if (!keep) return false;
      }
    }
    return true;
  };
  return rec(rec, 0, 0);
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kMds: return "MDS";
    case Verdict::kNmds: return "NMDS";
    case Verdict::kAmds: return "AMDS";
    case Verdict::kOther: return "other";
  }
  return "other";
}

struct LinearCode::State {
  Matrix gen;
  Matrix canon;
  mutable std::mutex mu;
  mutable std::optional<int> dist;
  mutable std::shared_ptr<const LinearCode> dual_code;
  State(Matrix g, Matrix c) : gen(std::move(g)), canon(std::move(c)) {}
};

LinearCode::LinearCode(Matrix generator) {
  if (generator.cols() < 1) throw std::invalid_argument("code length must be positive");
  Matrix canon = generator.rref();
  if (generator.rows() > 0) {
    // Full row rank keeps the presented dimension honest.
    int rank = 0;
    for (int r = 0; r < canon.rows(); ++r) {
      bool nonzero = false;
      for (int c = 0; c < canon.cols(); ++c)
        if (canon(r, c) != 0) {
          nonzero = true;
          break;
        }
      rank += nonzero;
    }
    if (rank != generator.rows())
      throw std::invalid_argument("generator rows are linearly dependent");
  }
  st_ = std::make_shared<State>(std::move(generator), std::move(canon));
}

int LinearCode::length() const { return st_->gen.cols(); }
int LinearCode::dimension() const { return st_->gen.rows(); }
const Field& LinearCode::field() const { return st_->gen.field(); }
const FieldPtr& LinearCode::field_ptr() const { return st_->gen.field_ptr(); }
const Matrix& LinearCode::generator() const { return st_->gen; }
const Matrix& LinearCode::canonical_generator() const { return st_->canon; }

const LinearCode& LinearCode::dual() const {
  {
    std::lock_guard<std::mutex> lk(st_->mu);
    if (st_->dual_code) return *st_->dual_code;
  }
  auto computed = std::make_shared<const LinearCode>(LinearCode(st_->gen.null_space()));
  std::lock_guard<std::mutex> lk(st_->mu);
  if (!st_->dual_code) st_->dual_code = std::move(computed);
  return *st_->dual_code;
}

int LinearCode::distance_by_enumeration(std::int64_t budget) const {
  const int k = dimension();
  if (k == 0) return kInfiniteDistance;
  const std::int64_t words = ipow_sat(field().q(), k, budget);
  if (words > budget)
    throw BudgetExceeded("codeword enumeration exceeds the budget");
  int best = length() + 1;
  for_each_codeword(*this, [&](std::span<const Elem> cw) {
    const int w = hamming_weight(cw);
    if (w > 0 && w < best) best = w;
  });
  return best;
}

int LinearCode::distance_by_column_scan() const {
  if (dimension() == 0) return kInfiniteDistance;
  return min_dependent_columns(dual().generator());
}

int LinearCode::minimum_distance(std::int64_t enumeration_threshold) const {
  {
    std::lock_guard<std::mutex> lk(st_->mu);
    if (st_->dist) return *st_->dist;
  }
  int d;
  if (dimension() == 0) {
    d = kInfiniteDistance;
  } else if (ipow_sat(field().q(), dimension(), enumeration_threshold) <=
             enumeration_threshold) {
    d = distance_by_enumeration(enumeration_threshold);
  } else {
    d = distance_by_column_scan();
  }
  std::lock_guard<std::mutex> lk(st_->mu);
  if (!st_->dist) st_->dist = d;
  return *st_->dist;
}

bool LinearCode::contains(std::span<const Elem> word) const {
  if (static_cast<int>(word.size()) != length())
    throw std::invalid_argument("word length does not match code length");
  const Field& f = field();
  std::vector<Elem> rem(word.begin(), word.end());
  const Matrix& canon = st_->canon;
  for (int r = 0; r < canon.rows(); ++r) {
    int pivot = -1;
    for (int c = 0; c < canon.cols(); ++c)
      if (canon(r, c) != 0) {
        pivot = c;
        break;
      }
    if (pivot < 0) continue;
    const Elem factor = rem[pivot];
    if (factor == 0) continue;
    for (int c = pivot; c < canon.cols(); ++c)
      rem[c] = f.sub(rem[c], f.mul(factor, canon(r, c)));
  }
  return std::all_of(rem.begin(), rem.end(), [](Elem e) { return e == 0; });
}

std::vector<Elem> LinearCode::encode(std::span<const Elem> message) const {
  if (static_cast<int>(message.size()) != dimension())
    throw std::invalid_argument("message length does not match dimension");
  const Field& f = field();
  const Matrix& g = st_->gen;
  std::vector<Elem> out(length(), 0);
  for (int i = 0; i < g.rows(); ++i) {
    if (message[i] == 0) continue;
    for (int c = 0; c < g.cols(); ++c)
      out[c] = f.add(out[c], f.mul(message[i], g(i, c)));
  }
  return out;
}

bool LinearCode::same_code(const LinearCode& other) const {
  return st_->canon == other.st_->canon;
}

Classification classify(const LinearCode& c, std::int64_t enumeration_threshold) {
  const int n = c.length();
  const int k = c.dimension();
  if (k == 0 || k == n)
    throw std::domain_error("classification needs 1 <= k < n");
  Classification out;
  out.n = n;
  out.k = k;
  out.d = c.minimum_distance(enumeration_threshold);
  out.d_dual = c.dual().minimum_distance(enumeration_threshold);
  out.singleton_defect = n - k + 1 - out.d;
  if (out.d == n - k + 1)
    out.verdict = Verdict::kMds;
  else if (out.d == n - k && out.d_dual == k)
    out.verdict = Verdict::kNmds;
  else if (out.d == n - k)
    out.verdict = Verdict::kAmds;
  else
    out.verdict = Verdict::kOther;
  return out;
}

LinearCode extend_with_u(const LinearCode& c, std::span<const Elem> u) {
  if (static_cast<int>(u.size()) != c.length())
    throw std::invalid_argument("u must have one entry per coordinate");
  const Field& f = c.field();
  bool nonzero = false;
  for (Elem e : u) nonzero |= (f.check(e) != 0);
  if (!nonzero) throw std::invalid_argument("u must be nonzero");
  const Matrix& g = c.generator();
  Matrix col(c.field_ptr(), g.rows(), 1);
  for (int r = 0; r < g.rows(); ++r) {
    Elem acc = 0;
    for (int j = 0; j < g.cols(); ++j) acc = f.add(acc, f.mul(g(r, j), u[j]));
    col.set(r, 0, acc);
  }
  return LinearCode(g.hconcat(col));
}

int distance_to_code(std::span<const Elem> v, const LinearCode& c, std::int64_t budget) {
  if (static_cast<int>(v.size()) != c.length())
    throw std::invalid_argument("vector length does not match code length");
  const Field& f = c.field();
  for (Elem e : v) f.check(e);
  const int q = f.q();
  const int k = c.dimension();

  if (ipow_sat(q, k, budget) <= budget) {
    int best = c.length() + 1;
    for_each_codeword(c, [&](std::span<const Elem> cw) {
      int dist = 0;
      for (size_t i = 0; i < cw.size(); ++i) dist += (cw[i] != v[i]);
      if (dist < best) best = dist;
    });
    return best;
  }

  // Coset-leader search: the distance is the weight of the lightest vector
  // with the same syndrome.
  const Matrix& h = c.dual().generator();
  const int redundancy = h.rows();
  if (weight_scan_work(c.length(), q, redundancy, budget) > budget)
    throw BudgetExceeded("coset search exceeds the budget");
  const std::int64_t target = syndrome_key(h.mul_vector(v), q);
  if (target == 0) return 0;
  for (int w = 1; w <= redundancy; ++w) {
    bool found = false;
    scan_weight_syndromes(h, w, [&](std::span<const Elem> syn) {
      if (syndrome_key(syn, q) == target) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) return w;
  }
  throw std::logic_error("syndrome not reachable");
}

int covering_radius(const LinearCode& c, std::int64_t budget) {
  const Field& f = c.field();
  const int q = f.q();
  const int n = c.length();
  const int redundancy = n - c.dimension();
  if (redundancy == 0) return 0;
  const std::int64_t syndromes = ipow_sat(q, redundancy, (std::int64_t(1) << 26));
  if (syndromes > (std::int64_t(1) << 26))
    throw BudgetExceeded("syndrome table too large");
  if (weight_scan_work(n, q, redundancy, budget) > budget)
    throw BudgetExceeded("covering radius scan exceeds the budget");

  const Matrix& h = c.dual().generator();
  std::vector<char> seen(static_cast<size_t>(syndromes), 0);
  seen[0] = 1;
  std::int64_t count = 1;
  int radius = 0;
  for (int w = 1; w <= redundancy && count < syndromes; ++w) {
    bool any_new = false;
    scan_weight_syndromes(h, w, [&](std::span<const Elem> syn) {
      const std::int64_t key = syndrome_key(syn, q);
      if (!seen[static_cast<size_t>(key)]) {
        seen[static_cast<size_t>(key)] = 1;
        ++count;
        any_new = true;
      }
      return count < syndromes;
    });
    if (any_new) radius = w;
  }
  return radius;
}

bool is_deep_hole(std::span<const Elem> v, const LinearCode& c, std::int64_t budget) {
  return distance_to_code(v, c, budget) == covering_radius(c, budget);
}

}  // namespace rlext
