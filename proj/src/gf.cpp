#include "rlext/gf.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace rlext {
namespace {

// Polynomials over GF(p) as coefficient vectors in ascending degree.
using Poly = std::vector<int>;

int poly_degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// Remainder of f modulo a monic divisor g.
Poly poly_rem(Poly f, const Poly& g, int p) {
  const int dg = poly_degree(g);
  for (int df = poly_degree(f); df >= dg; df = poly_degree(f)) {
    const int c = f[df];
    for (int i = 0; i <= dg; ++i)
      f[df - dg + i] = ((f[df - dg + i] - c * g[i]) % p + p) % p;
  }
  return f;
}

// Trial division against every monic polynomial of degree 1..deg(f)/2.
bool is_irreducible(const Poly& f, int p) {
  const int m = poly_degree(f);
  if (m < 1) return false;
  for (int d = 1; 2 * d <= m; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long t = 0; t < count; ++t) {
      Poly g(d + 1, 0);
      long long x = t;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(x % p);
        x /= p;
      }
      g[d] = 1;
      if (poly_degree(poly_rem(f, g, p)) < 0) return false;
    }
  }
  return true;
}

std::vector<int> decode_digits(int v, int p, int m) {
  std::vector<int> d(m, 0);
  for (int i = 0; i < m && v; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

int encode_digits(const std::vector<int>& d, int p, int m) {
  int v = 0;
  for (int i = m - 1; i >= 0; --i) v = v * p + d[i];
  return v;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<int, int>> factor_prime_power(int q) {
  if (q < 2) return std::nullopt;
  int p = 2;
  while (q % p != 0) {
    ++p;
    if (static_cast<long long>(p) * p > q) {
      p = q;
      break;
    }
  }
  if (!is_prime(p)) return std::nullopt;
  int m = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, m);
}

FieldPtr make_field(int p, int m, const std::optional<std::vector<int>>& modulus_override,
                    int table_bound) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (m < 1) throw std::invalid_argument("extension degree must be at least 1");
  if (table_bound > Field::kDefaultTableBound) table_bound = Field::kDefaultTableBound;
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > table_bound)
      throw std::invalid_argument("field size exceeds the table bound");
  }

  Poly modulus;
  if (m == 1) {
    if (modulus_override && !modulus_override->empty())
      throw std::invalid_argument("prime fields take no modulus");
  } else if (modulus_override) {
    modulus = *modulus_override;
    if (static_cast<int>(modulus.size()) != m + 1 || modulus[m] != 1)
      throw std::invalid_argument("modulus must be monic of degree m");
    for (int c : modulus)
      if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (!is_irreducible(modulus, p))
      throw std::invalid_argument("modulus is reducible");
  } else {
    // Ascending lower-coefficient encoding; the leading term contributes p^m
    // uniformly, so this scan is ascending in the full integer encoding.
    long long lower = 1;
    for (int i = 0; i < m; ++i) lower *= p;
    for (long long t = 0; t < lower; ++t) {
      Poly cand(m + 1, 0);
      long long x = t;
      for (int i = 0; i < m; ++i) {
        cand[i] = static_cast<int>(x % p);
        x /= p;
      }
      cand[m] = 1;
      if (is_irreducible(cand, p)) {
        modulus = std::move(cand);
        break;
      }
    }
  }

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->m_ = m;
  f->q_ = static_cast<int>(q);
  f->modulus_ = modulus;

  // Table-free multiply used only while bootstrapping the tables.
  auto slow_mul = [&](Elem a, Elem b) -> Elem {
    if (m == 1) return static_cast<Elem>((static_cast<int>(a) * b) % p);
    const auto da = decode_digits(a, p, m);
    const auto db = decode_digits(b, p, m);
    Poly prod(2 * m - 1, 0);
    for (int i = 0; i < m; ++i) {
      if (!da[i]) continue;
      for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    prod = poly_rem(std::move(prod), modulus, p);
    prod.resize(m, 0);
    return static_cast<Elem>(encode_digits(prod, p, m));
  };

  const int qi = f->q_;
  Elem g = 0;
  for (int cand = 1; cand < qi; ++cand) {
    Elem x = 1;
    int ord = 0;
    do {
      x = slow_mul(x, static_cast<Elem>(cand));
      ++ord;
    } while (x != 1);
    if (ord == qi - 1) {
      g = static_cast<Elem>(cand);
      break;
    }
  }
  f->primitive_ = g;

  f->exp_.assign(2 * (qi - 1), 1);
  f->log_.assign(qi, -1);
  Elem x = 1;
  for (int i = 0; i < qi - 1; ++i) {
    f->exp_[i] = x;
    f->log_[x] = i;
    x = slow_mul(x, g);
  }
  for (int i = qi - 1; i < 2 * (qi - 1); ++i) f->exp_[i] = f->exp_[i - (qi - 1)];
  return f;
}

Elem Field::check(Elem a) const {
  if (a >= q_) throw std::invalid_argument("element encoding out of range for this field");
  return a;
}

Elem Field::add(Elem a, Elem b) const {
  check(a);
  check(b);
  if (p_ == 2) return a ^ b;
  if (m_ == 1) return static_cast<Elem>((a + b) % p_);
  int out = 0, mult = 1;
  int x = a, y = b;
  for (int i = 0; i < m_; ++i) {
    out += ((x % p_ + y % p_) % p_) * mult;
    x /= p_;
    y /= p_;
    mult *= p_;
  }
  return static_cast<Elem>(out);
}

Elem Field::neg(Elem a) const {
  check(a);
  if (p_ == 2) return a;
  if (m_ == 1) return static_cast<Elem>((p_ - a) % p_);
  int out = 0, mult = 1;
  int x = a;
  for (int i = 0; i < m_; ++i) {
    out += ((p_ - x % p_) % p_) * mult;
    x /= p_;
    mult *= p_;
  }
  return static_cast<Elem>(out);
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  check(a);
  check(b);
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

Elem Field::inv(Elem a) const {
  check(a);
  if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
  return exp_[(q_ - 1) - log_[a]];
}

Elem Field::div(Elem a, Elem b) const {
  check(a);
  if (b == 0) throw std::domain_error("division by zero");
  if (a == 0) return 0;
  return exp_[log_[a] - log_[b] + (q_ - 1)];
}

Elem Field::pow(Elem a, long long e) const {
  check(a);
  if (e == 0) return 1;
  if (a == 0) {
    if (e < 0) throw std::domain_error("zero raised to a negative power");
    return 0;
  }
  const int n = q_ - 1;
  long long r = e % n;
  if (r < 0) r += n;
  if (n == 1) return 1;
  return exp_[(static_cast<long long>(log_[a]) * r) % n];
}

int Field::log(Elem a) const {
  check(a);
  if (a == 0) throw std::domain_error("discrete log of zero");
  return log_[a];
}

Elem Field::exp(long long e) const {
  const int n = q_ - 1;
  long long r = e % n;
  if (r < 0) r += n;
  return exp_[r];
}

int Field::order(Elem a) const {
  check(a);
  if (a == 0) throw std::domain_error("multiplicative order of zero");
  return (q_ - 1) / std::gcd(q_ - 1, log_[a]);
}

std::vector<Elem> Field::primitive_elements() const {
  std::vector<Elem> out;
  for (int a = 1; a < q_; ++a)
    if (order(static_cast<Elem>(a)) == q_ - 1) out.push_back(static_cast<Elem>(a));
  return out;
}

Elem parse_element(const Field& f, std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty element literal");
  if (text.front() == 'g') {
    long long e = 1;
    if (text.size() > 1) {
      if (text[1] != '^') throw std::invalid_argument("malformed element literal");
      const auto body = text.substr(2);
      auto res = std::from_chars(body.data(), body.data() + body.size(), e);
      if (res.ec != std::errc{} || res.ptr != body.data() + body.size())
        throw std::invalid_argument("malformed primitive power");
    }
    return f.exp(e);
  }
  int v = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw std::invalid_argument("malformed element literal");
  if (v < 0 || v >= f.q()) throw std::invalid_argument("element encoding out of range");
  return static_cast<Elem>(v);
}

std::string power_repr(const Field& f, Elem a) {
  if (a == 0) return "0";
  return "g^" + std::to_string(f.log(a));
}

std::string element_repr(const Field& f, Elem a) {
  if (a == 0 || a == 1) return std::to_string(a);
  return std::to_string(a) + "=" + power_repr(f, a);
}

std::string modulus_repr(const Field& f) {
  if (f.m() == 1) return "x";
  std::string out;
  const auto& c = f.modulus();
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] != 1) out += std::to_string(c[i]) + "*";
      out += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace rlext
