#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rlext {

// Canonical integer encoding of a field element: the polynomial residue
// c0 + c1 x + ... + c_{m-1} x^{m-1} over GF(p) is stored as sum ci * p^i.
using Elem = std::uint16_t;

// Exact arithmetic in GF(p^m) through log/antilog tables built once at
// construction. Immutable after construction; safe to share across threads.
class Field {
 public:
  static constexpr int kDefaultTableBound = 1 << 16;

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }

  // Monic modulus coefficients c0..cm in ascending degree; empty for m == 1.
  const std::vector<int>& modulus() const { return modulus_; }

  // Smallest-encoded element of multiplicative order q - 1.
  Elem primitive() const { return primitive_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem div(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  // pow(a, 0) == 1 for every a; negative exponents require a != 0.
  Elem pow(Elem a, long long e) const;

  // Discrete log base the canonical primitive element; requires a != 0.
  int log(Elem a) const;
  // primitive^e for any integer e.
  Elem exp(long long e) const;

  // Multiplicative order; requires a != 0.
  int order(Elem a) const;
  // All elements of order q - 1 in ascending encoding.
  std::vector<Elem> primitive_elements() const;

  // Range-checks an encoding and returns it unchanged.
  Elem check(Elem a) const;

  bool operator==(const Field& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
  }
  bool operator!=(const Field& other) const { return !(*this == other); }

 private:
  Field() = default;
  friend std::shared_ptr<const Field> make_field(
      int, int, const std::optional<std::vector<int>>&, int);

  int p_ = 0;
  int m_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
  Elem primitive_ = 0;
  std::vector<Elem> exp_;  // size 2(q-1); exp_[i] = primitive^i
  std::vector<int> log_;   // size q; log_[0] = -1
};

using FieldPtr = std::shared_ptr<const Field>;

// Builds GF(p^m). Without an override the modulus is the monic irreducible
// degree-m polynomial with the smallest integer encoding, found by ascending
// scan with trial division against all monic polynomials of degree <= m/2.
FieldPtr make_field(int p, int m,
                    const std::optional<std::vector<int>>& modulus_override = std::nullopt,
                    int table_bound = Field::kDefaultTableBound);

bool is_prime(int n);

// Splits q into (p, m) with p prime and p^m == q, if such a pair exists.
std::optional<std::pair<int, int>> factor_prime_power(int q);

// Accepts a canonical integer ("7") or a power of the canonical primitive
// ("g^3", "g"; exponents may be negative).
Elem parse_element(const Field& f, std::string_view text);

// "0" for zero, otherwise "g^k".
std::string power_repr(const Field& f, Elem a);

// Human rendering of an element: "0", "1", or "<int>=g^<k>".
std::string element_repr(const Field& f, Elem a);

// "x^2+x+1" style rendering of the modulus; "x" alone for m == 1 fields.
std::string modulus_repr(const Field& f);

}  // namespace rlext
