#pragma once

// Global-field descriptors (Q, quadratic fields, F_q(T) and curve function
// fields given by their L-polynomial), their finite places with residual
// cardinalities q_v, local Euler factors, and the adelic covolume.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "globalzeta/analytic_kernel.hpp"
#include "globalzeta/errors.hpp"
#include "globalzeta/finite_field.hpp"

namespace gz {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Number fields

enum class NumberFieldKind { rationals, quadratic };

/// Q or Q(sqrt d).  Carries the discriminant and the signature (r1, r2).
class NumberFieldDescriptor {
 public:
  NumberFieldKind kind() const noexcept { return kind_; }
  /// Squarefree d of Q(sqrt d); 1 for Q.
  std::int64_t radicand() const noexcept { return radicand_; }
  std::int64_t discriminant() const noexcept { return discriminant_; }
  int r1() const noexcept { return r1_; }
  int r2() const noexcept { return r2_; }
  int degree() const noexcept { return r1_ + 2 * r2_; }
  bool is_rationals() const noexcept { return kind_ == NumberFieldKind::rationals; }

  friend bool operator==(const NumberFieldDescriptor&, const NumberFieldDescriptor&) = default;

 private:
  NumberFieldDescriptor(NumberFieldKind kind, std::int64_t radicand, std::int64_t discriminant, int r1, int r2)
      : kind_(kind), radicand_(radicand), discriminant_(discriminant), r1_(r1), r2_(r2) {}

  friend NumberFieldDescriptor make_rationals();
  friend NumberFieldDescriptor make_quadratic(std::int64_t d);

  NumberFieldKind kind_;
  std::int64_t radicand_;
  std::int64_t discriminant_;
  int r1_;
  int r2_;
};

inline NumberFieldDescriptor make_rationals() { return {NumberFieldKind::rationals, 1, 1, 1, 0}; }

inline NumberFieldDescriptor make_quadratic(std::int64_t d) {
  if (d == 0 || d == 1) throw DomainError("make_quadratic: d must not be 0 or 1");
  if (!detail::is_squarefree(d)) throw DomainError("make_quadratic: d = " + std::to_string(d) + " is not squarefree");
  const auto mod4 = ((d % 4) + 4) % 4;
  const std::int64_t discriminant = mod4 == 1 ? d : 4 * d;
  if (d > 0) return {NumberFieldKind::quadratic, d, discriminant, 2, 0};
  return {NumberFieldKind::quadratic, d, discriminant, 0, 1};
}

// ---------------------------------------------------------------------------
// Function fields

/// Numerator P(T) = a_0 + a_1 T + ... + a_{2g} T^{2g} of a function-field
/// zeta in T = q^{-s}.  Exact integer coefficients.
class LPolynomial {
 public:
  LPolynomial() : coefficients_{1} {}

  explicit LPolynomial(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw DomainError("LPolynomial: empty coefficient list");
  }

  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  const BigInt& operator[](std::size_t i) const { return coefficients_.at(i); }

  friend bool operator==(const LPolynomial&, const LPolynomial&) = default;

 private:
  std::vector<BigInt> coefficients_;
};

/// First i in [0, g) with a_{2g-i} != q^{g-i} a_i, if any.
inline std::optional<std::size_t> first_symmetry_violation(std::int64_t q, const LPolynomial& lpoly) {
  const auto& a = lpoly.coefficients();
  const int g = lpoly.degree() / 2;
  for (int i = 0; i < g; ++i) {
    const BigInt expected = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(g - i)) * a[i];
    if (a[static_cast<std::size_t>(2 * g - i)] != expected) return static_cast<std::size_t>(i);
  }
  return std::nullopt;
}

struct test_access;

/// Function field with constant field F_q and genus g.  Genus 0 means F_q(T).
class FunctionFieldDescriptor {
 public:
  std::int64_t q() const noexcept { return q_; }
  int genus() const noexcept { return genus_; }
  const LPolynomial& lpoly() const noexcept { return lpoly_; }
  bool is_rational() const noexcept { return genus_ == 0; }

  friend bool operator==(const FunctionFieldDescriptor&, const FunctionFieldDescriptor&) = default;

 private:
  FunctionFieldDescriptor(std::int64_t q, LPolynomial lpoly)
      : q_(q), genus_(lpoly.degree() / 2), lpoly_(std::move(lpoly)) {}

  friend FunctionFieldDescriptor make_rational_function_field(std::int64_t q);
  friend FunctionFieldDescriptor make_curve_function_field(std::int64_t q, LPolynomial lpoly);
  friend struct test_access;

  std::int64_t q_;
  int genus_;
  LPolynomial lpoly_;
};

inline void require_prime_power(std::int64_t q, const char* what) {
  if (!prime_power_decomposition(q))
    throw DomainError(std::string(what) + ": q = " + std::to_string(q) + " is not a prime power");
}

inline FunctionFieldDescriptor make_rational_function_field(std::int64_t q) {
  require_prime_power(q, "make_rational_function_field");
  return {q, LPolynomial{}};
}

inline FunctionFieldDescriptor make_curve_function_field(std::int64_t q, LPolynomial lpoly) {
  require_prime_power(q, "make_curve_function_field");
  if (lpoly.degree() % 2 != 0)
    throw DomainError("make_curve_function_field: L-polynomial degree " + std::to_string(lpoly.degree()) +
                      " is odd");
  if (lpoly[0] != 1) throw DomainError("make_curve_function_field: constant coefficient must be 1");
  if (const auto violation = first_symmetry_violation(q, lpoly)) {
    const int g = lpoly.degree() / 2;
    const int i = static_cast<int>(*violation);
    const int j = 2 * g - i;
    const BigInt expected = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(g - i)) * lpoly[*violation];
    throw SymmetryError("L-polynomial coefficient a_" + std::to_string(j) + " = " +
                        lpoly[static_cast<std::size_t>(j)].str() + " but q^" + std::to_string(g - i) + " * a_" +
                        std::to_string(i) + " = " + expected.str());
  }
  return {q, std::move(lpoly)};
}

/// Diagnostic for a coefficient outside |a_i| <= C(2g, i) q^{i/2}.
struct WeilBoundWarning {
  std::size_t index;
  BigInt coefficient;
  std::string message;
};

struct PointCountResult {
  LPolynomial lpoly;
  std::vector<WeilBoundWarning> warnings;
};

/// Rebuilds P(T) from N_1..N_g, the numbers of F_{q^m}-rational points.
/// With p_m = q^m + 1 - N_m (power sums of the inverse roots), Newton's
/// identities give m a_m = -(p_1 a_{m-1} + ... + p_m a_0); the upper half
/// follows from a_{2g-i} = q^{g-i} a_i.
inline PointCountResult lpoly_from_point_counts(std::int64_t q, int genus, const std::vector<std::int64_t>& counts) {
  require_prime_power(q, "lpoly_from_point_counts");
  if (genus < 0) throw DomainError("lpoly_from_point_counts: negative genus");
  if (counts.size() != static_cast<std::size_t>(genus))
    throw DomainError("lpoly_from_point_counts: expected " + std::to_string(genus) + " point counts, got " +
                      std::to_string(counts.size()));
  for (const auto n : counts) {
    if (n < 0) throw DomainError("lpoly_from_point_counts: negative point count " + std::to_string(n));
  }

  const auto g = static_cast<std::size_t>(genus);
  std::vector<BigInt> power_sums(g + 1);
  for (std::size_t m = 1; m <= g; ++m)
    power_sums[m] = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(m)) + 1 - counts[m - 1];

  std::vector<BigInt> a(2 * g + 1);
  a[0] = 1;
  for (std::size_t m = 1; m <= g; ++m) {
    BigInt acc = 0;
    for (std::size_t i = 1; i <= m; ++i) acc += power_sums[i] * a[m - i];
    if (acc % m != 0)
      throw DomainError("lpoly_from_point_counts: point counts give a non-integral coefficient a_" +
                        std::to_string(m));
    a[m] = -acc / m;
  }
  for (std::size_t i = 0; i < g; ++i)
    a[2 * g - i] = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(g - i)) * a[i];

  PointCountResult result{LPolynomial(a), {}};
  for (std::size_t i = 1; i <= 2 * g; ++i) {
    // |a_i| <= C(2g, i) q^{i/2}  <=>  a_i^2 <= C(2g, i)^2 q^i
    BigInt binomial = 1;
    for (std::size_t j = 0; j < i; ++j) binomial = binomial * (2 * g - j) / (j + 1);
    if (a[i] * a[i] > binomial * binomial * boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(i))) {
      result.warnings.push_back({i, a[i],
                                 "|a_" + std::to_string(i) + "| = " + BigInt(abs(a[i])).str() +
                                     " exceeds the Weil bound C(" + std::to_string(2 * g) + "," + std::to_string(i) +
                                     ") q^(" + std::to_string(i) + "/2)"});
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

using FieldDescriptor = std::variant<NumberFieldDescriptor, FunctionFieldDescriptor>;

/// beta(A/k): sqrt|D| for number fields, q^{g-1} for function fields.
class Covolume {
 public:
  static Covolume square_root_of(BigInt radicand) {
    Covolume c;
    c.radicand_ = std::move(radicand);
    return c;
  }

  static Covolume rational(BigRational value) {
    Covolume c;
    c.rational_ = std::move(value);
    return c;
  }

  /// Exact rational value when there is one (perfect-square radicand).
  std::optional<BigRational> exact() const {
    if (rational_) return rational_;
    const BigInt root = boost::multiprecision::sqrt(*radicand_);
    if (root * root == *radicand_) return BigRational(root);
    return std::nullopt;
  }

  double value() const {
    if (rational_) return rational_->convert_to<double>();
    return std::sqrt(radicand_->convert_to<double>());
  }

  /// Natural log, computed from the exact representation.
  double log() const {
    if (rational_) {
      using boost::multiprecision::denominator;
      using boost::multiprecision::numerator;
      return std::log(numerator(*rational_).convert_to<double>()) -
             std::log(denominator(*rational_).convert_to<double>());
    }
    return 0.5 * std::log(radicand_->convert_to<double>());
  }

  /// "2", "1/5", "sqrt(5)".
  std::string to_string() const {
    if (const auto e = exact()) return e->str();
    return "sqrt(" + radicand_->str() + ")";
  }

 private:
  Covolume() = default;

  std::optional<BigInt> radicand_;
  std::optional<BigRational> rational_;
};

inline Covolume covolume(const NumberFieldDescriptor& field) {
  const auto d = field.discriminant();
  return Covolume::square_root_of(BigInt(d < 0 ? -d : d));
}

inline Covolume covolume(const FunctionFieldDescriptor& field) {
  const BigInt q = field.q();
  const int exponent = field.genus() - 1;
  if (exponent >= 0) return Covolume::rational(BigRational(boost::multiprecision::pow(q, static_cast<unsigned>(exponent))));
  return Covolume::rational(BigRational(BigInt(1), q));
}

inline Covolume covolume(const FieldDescriptor& field) {
  return std::visit([](const auto& f) { return covolume(f); }, field);
}

// ---------------------------------------------------------------------------
// Places

enum class Splitting { rational, split, inert, ramified };

inline const char* to_string(Splitting s) {
  switch (s) {
    case Splitting::rational:
      return "rational";
    case Splitting::split:
      return "split";
    case Splitting::inert:
      return "inert";
    case Splitting::ramified:
      return "ramified";
  }
  return "?";
}

/// A place above the rational prime p.  index tells apart the two places
/// above a split prime (0 or 1), and is 0 otherwise.
struct PrimePlace {
  std::int64_t p;
  Splitting splitting;
  int index = 0;
  friend bool operator==(const PrimePlace&, const PrimePlace&) = default;
};

/// The place of F_q(T) attached to a monic irreducible polynomial.
struct IrreduciblePlace {
  std::int64_t q;
  poly::Coefficients polynomial;
  friend bool operator==(const IrreduciblePlace&, const IrreduciblePlace&) = default;
};

/// The place at infinity of F_q(T), degree 1.
struct InfinitePlace {
  std::int64_t q;
  friend bool operator==(const InfinitePlace&, const InfinitePlace&) = default;
};

struct Place {
  std::variant<PrimePlace, IrreduciblePlace, InfinitePlace> where;
  std::int64_t residual_cardinality;

  std::string label() const {
    if (const auto* pp = std::get_if<PrimePlace>(&where)) {
      std::string out = "p=" + std::to_string(pp->p);
      if (pp->splitting != Splitting::rational) out += std::string(",") + to_string(pp->splitting);
      if (pp->splitting == Splitting::split) out += "," + std::to_string(pp->index + 1);
      return out;
    }
    if (const auto* ip = std::get_if<IrreduciblePlace>(&where)) return poly::format(FiniteField(ip->q), ip->polynomial);
    return "inf";
  }

  friend bool operator==(const Place&, const Place&) = default;
};

inline Splitting splitting_type(const NumberFieldDescriptor& field, std::int64_t p) {
  if (field.is_rationals()) throw DomainError("splitting_type: field must be quadratic");
  if (!is_prime(p)) throw DomainError("splitting_type: " + std::to_string(p) + " is not prime");
  if (field.discriminant() % p == 0) return Splitting::ramified;
  return kronecker_chi(field.discriminant(), p) == 1 ? Splitting::split : Splitting::inert;
}

namespace detail {

inline void require_enumerable(const FunctionFieldDescriptor& field, const char* what) {
  if (!field.is_rational())
    throw DomainError(std::string(what) +
                      ": places of a positive-genus function field are not modeled; only F_q(T) is supported");
}

inline bool place_belongs_to(const FieldDescriptor& field, const Place& place) {
  if (const auto* nf = std::get_if<NumberFieldDescriptor>(&field)) {
    const auto* pp = std::get_if<PrimePlace>(&place.where);
    if (pp == nullptr || !is_prime(pp->p)) return false;
    if (nf->is_rationals()) return pp->splitting == Splitting::rational && place.residual_cardinality == pp->p;
    const auto kind = splitting_type(*nf, pp->p);
    if (pp->splitting != kind) return false;
    if (kind == Splitting::split) return (pp->index == 0 || pp->index == 1) && place.residual_cardinality == pp->p;
    return pp->index == 0 && place.residual_cardinality == (kind == Splitting::inert ? pp->p * pp->p : pp->p);
  }
  const auto& ff = std::get<FunctionFieldDescriptor>(field);
  if (!ff.is_rational()) return false;
  if (const auto* inf = std::get_if<InfinitePlace>(&place.where))
    return inf->q == ff.q() && place.residual_cardinality == ff.q();
  if (const auto* ip = std::get_if<IrreduciblePlace>(&place.where)) {
    if (ip->q != ff.q() || ip->polynomial.empty() || ip->polynomial.back() != 1) return false;
    const FiniteField F(ff.q());
    std::int64_t expected = 1;
    for (int i = 0; i < poly::degree(ip->polynomial); ++i) expected *= ff.q();
    return poly::is_irreducible(F, ip->polynomial) && place.residual_cardinality == expected;
  }
  return false;
}

inline ComplexValue euler_factor_for_norm(std::int64_t qv, ComplexValue s) {
  const ComplexValue local = 1.0 - std::exp(-s * std::log(static_cast<double>(qv)));
  if (std::abs(local) < pole_exclusion_radius)
    throw DomainError("local Euler factor: 1 - q_v^{-s} vanishes (q_v = " + std::to_string(qv) + ")");
  return 1.0 / local;
}

}  // namespace detail

/// (1 - q_v^{-s})^{-1} for the single place v.
inline ComplexValue local_euler_factor(const FieldDescriptor& field, const Place& place, ComplexValue s) {
  detail::require_finite(s, "local_euler_factor");
  if (!detail::place_belongs_to(field, place))
    throw DomainError("local_euler_factor: place " + place.label() + " does not belong to the field");
  return detail::euler_factor_for_norm(place.residual_cardinality, s);
}

/// All places with q_v <= norm_bound, ordered by q_v, then by p and index
/// (number fields) or infinite place first, then polynomial code (F_q(T)).
inline std::vector<Place> enumerate_places(const FieldDescriptor& field, std::int64_t norm_bound) {
  if (norm_bound < 2) throw DomainError("enumerate_places: norm bound must be at least 2");
  std::vector<Place> places;

  if (const auto* nf = std::get_if<NumberFieldDescriptor>(&field)) {
    for (const auto p : primes_up_to(norm_bound)) {
      if (nf->is_rationals()) {
        places.push_back({PrimePlace{p, Splitting::rational, 0}, p});
        continue;
      }
      const auto kind = splitting_type(*nf, p);
      if (kind == Splitting::split) {
        places.push_back({PrimePlace{p, kind, 0}, p});
        places.push_back({PrimePlace{p, kind, 1}, p});
      } else if (kind == Splitting::ramified) {
        places.push_back({PrimePlace{p, kind, 0}, p});
      } else if (p <= norm_bound / p) {
        places.push_back({PrimePlace{p, kind, 0}, p * p});
      }
    }
    std::stable_sort(places.begin(), places.end(), [](const Place& x, const Place& y) {
      const auto& px = std::get<PrimePlace>(x.where);
      const auto& py = std::get<PrimePlace>(y.where);
      return std::tie(x.residual_cardinality, px.p, px.index) < std::tie(y.residual_cardinality, py.p, py.index);
    });
    return places;
  }

  const auto& ff = std::get<FunctionFieldDescriptor>(field);
  detail::require_enumerable(ff, "enumerate_places");
  const FiniteField F(ff.q());
  if (ff.q() <= norm_bound) places.push_back({InfinitePlace{ff.q()}, ff.q()});
  std::int64_t qv = ff.q();
  for (int n = 1; qv <= norm_bound; ++n) {
    for (auto& f : poly::monic_irreducibles(F, n)) places.push_back({IrreduciblePlace{ff.q(), std::move(f)}, qv});
    if (qv > norm_bound / ff.q()) break;
    qv *= ff.q();
  }
  return places;
}

/// Product of the local factors over the places above p:
/// (1-p^{-s})^{-2} split, (1-p^{-2s})^{-1} inert, (1-p^{-s})^{-1} ramified or over Q.
inline ComplexValue prime_euler_factor(const NumberFieldDescriptor& field, std::int64_t p, ComplexValue s) {
  if (!is_prime(p)) throw DomainError("prime_euler_factor: " + std::to_string(p) + " is not prime");
  if (field.is_rationals()) return detail::euler_factor_for_norm(p, s);
  switch (splitting_type(field, p)) {
    case Splitting::split: {
      const auto f = detail::euler_factor_for_norm(p, s);
      return f * f;
    }
    case Splitting::inert:
      return detail::euler_factor_for_norm(p * p, s);
    default:
      return detail::euler_factor_for_norm(p, s);
  }
}

inline ComplexValue truncated_euler_product(const FieldDescriptor& field, ComplexValue s, std::int64_t norm_bound) {
  detail::require_finite(s, "truncated_euler_product");
  if (s.real() <= 1.0) throw DomainError("truncated_euler_product: requires Re s > 1");
  if (const auto* ff = std::get_if<FunctionFieldDescriptor>(&field))
    detail::require_enumerable(*ff, "truncated_euler_product");
  ComplexValue product = 1.0;
  for (const auto& place : enumerate_places(field, norm_bound))
    product *= detail::euler_factor_for_norm(place.residual_cardinality, s);
  return product;
}

}  // namespace gz
