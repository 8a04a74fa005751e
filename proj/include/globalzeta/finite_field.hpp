#pragma once

// Arithmetic in F_q (q a prime power) and in F_q[T], enough to enumerate the
// monic irreducible polynomials that index the finite places of F_q(T).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "globalzeta/errors.hpp"

namespace gz {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::int64_t n = 2; n <= bound; ++n) {
    if (composite[static_cast<std::size_t>(n)]) continue;
    primes.push_back(n);
    for (std::int64_t m = n * n; m <= bound; m += n) composite[static_cast<std::size_t>(m)] = true;
  }
  return primes;
}

struct PrimePower {
  std::int64_t prime;
  int exponent;
};

inline std::optional<PrimePower> prime_power_decomposition(std::int64_t q) {
  if (q < 2) return std::nullopt;
  std::int64_t p = q;
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  int exponent = 0;
  while (q % p == 0) {
    q /= p;
    ++exponent;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{p, exponent};
}

/// The field with q = p^k elements.  An element is a code in [0, q) whose
/// base-p digits are its coordinates in the basis 1, x, ..., x^{k-1} of
/// F_p[x]/(f), f the first monic irreducible of degree k in code order.
class FiniteField {
 public:
  using Element = std::uint32_t;

  explicit FiniteField(std::int64_t q) {
    const auto pp = prime_power_decomposition(q);
    if (!pp) throw DomainError("finite field order " + std::to_string(q) + " is not a prime power");
    if (q > (std::int64_t{1} << 24)) throw DomainError("finite field order " + std::to_string(q) + " is too large");
    p_ = static_cast<std::uint32_t>(pp->prime);
    k_ = pp->exponent;
    q_ = static_cast<std::uint32_t>(q);
    if (k_ > 1) modulus_ = first_irreducible_over_prime_field(p_, k_);
  }

  std::int64_t order() const noexcept { return q_; }
  std::int64_t characteristic() const noexcept { return p_; }
  int degree() const noexcept { return k_; }
  bool is_prime_field() const noexcept { return k_ == 1; }

  Element add(Element a, Element b) const {
    if (k_ == 1) return (a + b) % p_;
    Element out = 0;
    Element scale = 1;
    for (int i = 0; i < k_; ++i) {
      out += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return out;
  }

  Element neg(Element a) const {
    if (k_ == 1) return (p_ - a) % p_;
    Element out = 0;
    Element scale = 1;
    for (int i = 0; i < k_; ++i) {
      out += ((p_ - a % p_) % p_) * scale;
      a /= p_;
      scale *= p_;
    }
    return out;
  }

  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  Element mul(Element a, Element b) const {
    if (k_ == 1) return static_cast<Element>((std::uint64_t{a} * b) % p_);
    const auto x = digits(a);
    const auto y = digits(b);
    std::vector<std::uint64_t> product(2 * static_cast<std::size_t>(k_) - 1, 0);
    for (int i = 0; i < k_; ++i) {
      for (int j = 0; j < k_; ++j) product[i + j] = (product[i + j] + std::uint64_t{x[i]} * y[j]) % p_;
    }
    // reduce by the monic modulus, highest degree first
    for (int d = 2 * k_ - 2; d >= k_; --d) {
      const auto c = product[d];
      if (c == 0) continue;
      for (int i = 0; i <= k_; ++i) {
        const auto idx = static_cast<std::size_t>(d - k_ + i);
        product[idx] = (product[idx] + (p_ - c) * modulus_[i]) % p_;
      }
    }
    Element out = 0;
    for (int i = k_ - 1; i >= 0; --i) out = out * p_ + static_cast<Element>(product[i]);
    return out;
  }

  Element pow(Element a, std::uint64_t e) const {
    Element result = 1;
    while (e > 0) {
      if (e & 1U) result = mul(result, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return result;
  }

  Element inv(Element a) const {
    if (a == 0) throw DomainError("inverse of zero in F_" + std::to_string(q_));
    return pow(a, q_ - 2);
  }

  std::string format(Element a) const {
    if (k_ == 1) return std::to_string(a);
    return "(" + std::to_string(a) + ")";
  }

 private:
  std::vector<Element> digits(Element a) const {
    std::vector<Element> out(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) {
      out[i] = a % p_;
      a /= p_;
    }
    return out;
  }

  // Coefficients low to high, monic, length k + 1.
  static std::vector<std::uint32_t> first_irreducible_over_prime_field(std::uint32_t p, int k);

  std::uint32_t p_ = 2;
  int k_ = 1;
  std::uint32_t q_ = 2;
  std::vector<std::uint32_t> modulus_;
};

/// Polynomials over a FiniteField, coefficients low to high, no trailing zeros.
namespace poly {

using Coefficients = std::vector<FiniteField::Element>;

inline void trim(Coefficients& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int degree(const Coefficients& f) { return static_cast<int>(f.size()) - 1; }

inline Coefficients sub(const FiniteField& F, Coefficients f, const Coefficients& g) {
  if (g.size() > f.size()) f.resize(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) f[i] = F.sub(f[i], g[i]);
  trim(f);
  return f;
}

inline Coefficients mod(const FiniteField& F, Coefficients f, const Coefficients& g) {
  trim(f);
  const int dg = degree(g);
  const auto lead_inv = F.inv(g.back());
  while (degree(f) >= dg) {
    const auto c = F.mul(f.back(), lead_inv);
    const auto shift = static_cast<std::size_t>(degree(f) - dg);
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] = F.sub(f[shift + i], F.mul(c, g[i]));
    trim(f);
  }
  return f;
}

inline Coefficients mul(const FiniteField& F, const Coefficients& f, const Coefficients& g) {
  if (f.empty() || g.empty()) return {};
  Coefficients out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(f[i], g[j]));
  }
  trim(out);
  return out;
}

inline Coefficients mul_mod(const FiniteField& F, const Coefficients& f, const Coefficients& g,
                            const Coefficients& m) {
  return mod(F, mul(F, f, g), m);
}

inline Coefficients pow_mod(const FiniteField& F, Coefficients base, std::uint64_t e, const Coefficients& m) {
  Coefficients result{1};
  base = mod(F, std::move(base), m);
  while (e > 0) {
    if (e & 1U) result = mul_mod(F, result, base, m);
    base = mul_mod(F, base, base, m);
    e >>= 1U;
  }
  return result;
}

inline Coefficients gcd(const FiniteField& F, Coefficients f, Coefficients g) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    auto r = mod(F, f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

/// Ben-Or: monic f of degree n is irreducible iff gcd(f, T^{q^i} - T) = 1
/// for 1 <= i <= n/2.
inline bool is_irreducible(const FiniteField& F, const Coefficients& f) {
  const int n = degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  const Coefficients t{0, 1};
  Coefficients h = t;
  for (int i = 1; i <= n / 2; ++i) {
    h = pow_mod(F, h, static_cast<std::uint64_t>(F.order()), f);
    if (degree(gcd(F, f, sub(F, h, t))) > 0) return false;
  }
  return true;
}

/// Monic polynomial of degree n whose lower coefficients are the base-q
/// digits of code (constant term least significant).
inline Coefficients monic_from_code(const FiniteField& F, std::uint64_t code, int n) {
  Coefficients f(static_cast<std::size_t>(n) + 1, 0);
  const auto q = static_cast<std::uint64_t>(F.order());
  for (int i = 0; i < n; ++i) {
    f[i] = static_cast<FiniteField::Element>(code % q);
    code /= q;
  }
  f[n] = 1;
  return f;
}

inline std::uint64_t code_of_monic(const FiniteField& F, const Coefficients& f) {
  std::uint64_t code = 0;
  const auto q = static_cast<std::uint64_t>(F.order());
  for (int i = degree(f) - 1; i >= 0; --i) code = code * q + f[i];
  return code;
}

/// All monic irreducibles of degree n in ascending code order.
inline std::vector<Coefficients> monic_irreducibles(const FiniteField& F, int n) {
  std::vector<Coefficients> out;
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) count *= static_cast<std::uint64_t>(F.order());
  for (std::uint64_t code = 0; code < count; ++code) {
    auto f = monic_from_code(F, code, n);
    if (is_irreducible(F, f)) out.push_back(std::move(f));
  }
  return out;
}

/// "T^2+T+1" style rendering; non-prime-field coefficients appear as "(c)".
inline std::string format(const FiniteField& F, const Coefficients& f) {
  std::string out;
  for (int i = degree(f); i >= 0; --i) {
    const auto c = f[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    const bool show_coefficient = c != 1 || i == 0;
    if (show_coefficient) out += F.format(c);
    if (i > 0) {
      if (show_coefficient) out += "*";
      out += "T";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace poly

inline std::vector<std::uint32_t> FiniteField::first_irreducible_over_prime_field(std::uint32_t p, int k) {
  const FiniteField prime_field(p);
  std::uint64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    auto f = poly::monic_from_code(prime_field, code, k);
    if (poly::is_irreducible(prime_field, f)) return f;
  }
  throw DomainError("no irreducible polynomial found");  // unreachable for prime p
}

}  // namespace gz
