#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

#include "rlext/matrix.hpp"

namespace rlext {

// Sentinel distance of a zero-dimensional code.
inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

// Default cap on brute-force work, counted in vector evaluations.
inline constexpr std::int64_t kDefaultBudget = 10'000'000;

// Raised when an exhaustive computation would exceed its budget; callers
// get a refusal instead of a silently wrong partial answer.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Verdict { kMds, kNmds, kAmds, kOther };
std::string to_string(Verdict v);

struct Classification {
  int n = 0;
  int k = 0;
  int d = 0;
  int d_dual = 0;
  Verdict verdict = Verdict::kOther;
  int singleton_defect = 0;  // n - k + 1 - d
};

// A linear [n, k] code presented by a generator matrix with independent
// rows. k == 0 codes are degenerate placeholders that arise as duals of
// the whole space. Instances share immutable state; the distance and dual
// caches are write-once and thread-safe.
class LinearCode {
 public:
  explicit LinearCode(Matrix generator);

  int length() const;
  int dimension() const;
  const Field& field() const;
  const FieldPtr& field_ptr() const;
  const Matrix& generator() const;
  // Reduced row-echelon form; equal canonical generators mean equal codes.
  const Matrix& canonical_generator() const;

  const LinearCode& dual() const;

  // Exact minimum distance. Enumerates q^k messages when that fits the
  // threshold, otherwise scans parity-check column subsets of ascending
  // size. Both strategies are exposed separately for cross-checking.
  int minimum_distance(std::int64_t enumeration_threshold = kDefaultBudget) const;
  int distance_by_enumeration(std::int64_t budget = kDefaultBudget) const;
  int distance_by_column_scan() const;

  bool contains(std::span<const Elem> word) const;
  std::vector<Elem> encode(std::span<const Elem> message) const;
  bool same_code(const LinearCode& other) const;

 private:
  struct State;
  std::shared_ptr<State> st_;
};

Classification classify(const LinearCode& c,
                        std::int64_t enumeration_threshold = kDefaultBudget);

// Appends the coordinate G u^T to every generator row: [G | G u^T].
LinearCode extend_with_u(const LinearCode& c, std::span<const Elem> u);

// Exact Hamming distance from v to the nearest codeword.
int distance_to_code(std::span<const Elem> v, const LinearCode& c,
                     std::int64_t budget = kDefaultBudget);

// Exact covering radius via coset-leader weights.
int covering_radius(const LinearCode& c, std::int64_t budget = kDefaultBudget);

bool is_deep_hole(std::span<const Elem> v, const LinearCode& c,
                  std::int64_t budget = kDefaultBudget);

// Visits every codeword, starting from zero, updating incrementally as the
// message odometer advances. fn receives std::span<const Elem>.
template <typename Fn>
void for_each_codeword(const LinearCode& code, Fn&& fn) {
  const Matrix& g = code.generator();
  const Field& f = code.field();
  const int k = code.dimension();
  const int n = code.length();
  const int q = f.q();
  std::vector<Elem> msg(k, 0);
  std::vector<Elem> cw(n, 0);
  fn(std::span<const Elem>(cw));
  if (k == 0) return;
  while (true) {
    int i = 0;
    while (i < k && msg[i] == q - 1) ++i;
    if (i == k) return;
    if (i > 0) {
      const Elem wrap = f.neg(static_cast<Elem>(q - 1));
      for (int j = 0; j < i; ++j) {
        msg[j] = 0;
        for (int c = 0; c < n; ++c) cw[c] = f.add(cw[c], f.mul(wrap, g(j, c)));
      }
    }
    const Elem old = msg[i];
    msg[i] = static_cast<Elem>(old + 1);
    const Elem delta = f.sub(msg[i], old);
    for (int c = 0; c < n; ++c) cw[c] = f.add(cw[c], f.mul(delta, g(i, c)));
    fn(std::span<const Elem>(cw));
  }
}

}  // namespace rlext
