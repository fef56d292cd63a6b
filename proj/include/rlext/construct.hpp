#pragma once

#include <span>
#include <utility>
#include <vector>

#include "rlext/code.hpp"
#include "rlext/gf.hpp"
#include "rlext/matrix.hpp"

namespace rlext {

// Shared parameter block for the Roth-Lempel family and its three-column
// extension: evaluation points alpha, dimension k, and the tail entries
// delta, tau, pi.
struct ConstructionParams {
  FieldPtr field;
  std::vector<Elem> alpha;
  int k = 0;
  Elem delta = 0;
  Elem tau = 0;
  Elem pi = 0;

  int n() const { return static_cast<int>(alpha.size()); }

  // Throws std::invalid_argument unless alpha is distinct and in range,
  // k >= 3 and n >= k.
  void validate() const;

  // True when 4 <= k+1 <= n <= q. Parameters outside this window are still
  // accepted (validate() permits n == k), but results carry a warning flag.
  bool within_stated_range() const;
};

// Generalized Reed-Solomon code: row i of the generator is
// (v_1 a_1^i, ..., v_n a_n^i) for 0 <= i < k. Always MDS.
LinearCode grs(const FieldPtr& field, std::span<const Elem> alpha,
               std::span<const Elem> v, int k);

// Roth-Lempel code [n+2, k]: Vandermonde block on alpha plus the two columns
// (0,...,0,0,1)^T and (0,...,0,1,delta)^T.
LinearCode roth_lempel(const FieldPtr& field, std::span<const Elem> alpha,
                       Elem delta, int k);

// The [n+3, k] three-column extension: Vandermonde block plus
// (0,...,0,0,0,1)^T, (0,...,0,1,delta)^T and (0,...,1,tau,pi)^T,
// the single 1 entries sitting in rows k-1, k-2 and k-3.
LinearCode c2_code(const ConstructionParams& p);

// Extension vector u of length n+2 with u_i = a_i^{n+2-k} / prod_{j!=i}(a_i-a_j)
// for i < n, and the last two entries chosen so that the u-extension of the
// Roth-Lempel code equals c2_code(p).
std::vector<Elem> extension_vector(const ConstructionParams& p);

// (n+3-k) x (n+3) parity-check matrix of c2_code(p): weighted power rows
// w_i a_i^r plus a lower-triangular tail built from the moments a, b.
Matrix c2_parity_matrix(const ConstructionParams& p);

// The two power moments of the point set: a = sum a_i and
// b = (sum a_i)^2 - sum_{i<j} a_i a_j.
std::pair<Elem, Elem> moment_pair(const Field& f, std::span<const Elem> alpha);

}  // namespace rlext
