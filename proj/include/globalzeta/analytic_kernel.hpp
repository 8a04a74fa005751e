#pragma once

// Complex special functions: log-Gamma, Hurwitz and Riemann zeta with
// analytic continuation, Kronecker characters, and Dirichlet L-functions.
//
// Everything is evaluated in binary64 at the interface.  Euler-Maclaurin
// sums whose terms grow (Re s < 0) are accumulated in a wider floating type
// so that the cancellation between the partial sum and the tail does not eat
// the result.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "globalzeta/errors.hpp"

namespace gz {

using ComplexValue = std::complex<double>;

/// Radius around every pole inside which evaluation raises PoleError.
inline constexpr double pole_exclusion_radius = 1e-3;

namespace detail {

namespace mp = boost::multiprecision;

inline void require_finite(ComplexValue z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError(std::string(what) + ": non-finite value");
}

inline std::string format_complex(ComplexValue z) {
  return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

// Godfrey's Lanczos coefficients, g = 607/128, 15 terms.
inline constexpr double lanczos_g = 607.0 / 128.0;
inline constexpr std::array<double, 15> lanczos_coefficients{
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,
    .15808870322491248884e-3,   -.21026444172410488319e-3,
    .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,
    .36899182659531622704e-5};

// Valid for Re z >= 0.5, where it is the principal branch.
inline ComplexValue log_gamma_lanczos(ComplexValue z) {
  constexpr double half_log_two_pi = 0.91893853320467274178;
  const ComplexValue x = z - 1.0;
  ComplexValue series = lanczos_coefficients[0];
  for (std::size_t k = 1; k < lanczos_coefficients.size(); ++k)
    series += lanczos_coefficients[k] / (x + static_cast<double>(k));
  const ComplexValue t = x + (lanczos_g + 0.5);
  return half_log_two_pi + (x + 0.5) * std::log(t) - t + std::log(series);
}

// B_2, B_4, ..., B_24.
struct BernoulliRatio {
  std::int64_t numerator;
  std::int64_t denominator;
};

inline constexpr std::array<BernoulliRatio, 12> even_bernoulli{{
    {1, 6},
    {-1, 30},
    {1, 42},
    {-1, 30},
    {5, 66},
    {-691, 2730},
    {7, 6},
    {-3617, 510},
    {43867, 798},
    {-174611, 330},
    {854513, 138},
    {-236364091, 2730},
}};

inline constexpr int euler_maclaurin_order = static_cast<int>(even_bernoulli.size());

inline int euler_maclaurin_shift(ComplexValue s) {
  return std::max(20, static_cast<int>(std::ceil(std::abs(s))));
}

template <class Real>
struct complex_of;
template <>
struct complex_of<double> {
  using type = std::complex<double>;
};
template <>
struct complex_of<mp::cpp_bin_float_50> {
  using type = mp::cpp_complex_50;
};
template <>
struct complex_of<mp::cpp_bin_float_100> {
  using type = mp::cpp_complex_100;
};

template <class Real>
using complex_t = typename complex_of<Real>::type;

inline ComplexValue to_value(const std::complex<double>& z) { return z; }

template <class Complex>
ComplexValue to_value(const Complex& z) {
  return {z.real().template convert_to<double>(), z.imag().template convert_to<double>()};
}

template <class Real>
complex_t<Real> from_value(ComplexValue z) {
  return complex_t<Real>(Real(z.real()), Real(z.imag()));
}

// (e^u - 1) / u, accurate near u = 0.
template <class Real>
complex_t<Real> expm1_over(const complex_t<Real>& u) {
  using std::abs;
  using std::exp;
  if (abs(u) > Real(0.5)) return (exp(u) - Real(1)) / u;
  complex_t<Real> term(Real(1), Real(0));
  complex_t<Real> sum = term;
  const Real eps = std::numeric_limits<Real>::epsilon();
  for (int k = 2; k < 400; ++k) {
    term *= u / Real(k);
    sum += term;
    if (abs(term) <= eps * abs(sum)) break;
  }
  return sum;
}

// Euler-Maclaurin split of the Hurwitz zeta:
//   zeta(s, a) = regular + pole_part + 1/(s - 1),
// pole_part = ((N + a)^{1-s} - 1)/(s - 1) is finite at s = 1.
template <class Real>
struct HurwitzTerms {
  complex_t<Real> regular;
  complex_t<Real> pole_part;
};

template <class Real>
HurwitzTerms<Real> hurwitz_terms(const complex_t<Real>& s, const Real& a, int shift) {
  using Complex = complex_t<Real>;
  using std::exp;
  using std::log;

  Complex sum(Real(0), Real(0));
  for (int n = 0; n < shift; ++n) sum += exp(-s * log(Real(n) + a));

  const Real w = Real(shift) + a;
  const Real log_w = log(w);
  const Real w_squared = w * w;
  const Complex w_power = exp(-s * log_w);

  // B_{2k}/(2k)! * s(s+1)...(s+2k-2) * w^{-s-2k+1}
  Complex tail = w_power / Real(2);
  Complex rising = s;
  Complex power = w_power / w;
  Real factorial = 2;
  for (int k = 1; k <= euler_maclaurin_order; ++k) {
    if (k > 1) {
      rising *= (s + Real(2 * k - 3)) * (s + Real(2 * k - 2));
      power /= w_squared;
      factorial *= Real(2 * k - 1) * Real(2 * k);
    }
    const auto& b = even_bernoulli[static_cast<std::size_t>(k - 1)];
    tail += (Real(b.numerator) / Real(b.denominator) / factorial) * rising * power;
  }

  const Complex u = (Real(1) - s) * log_w;
  return {sum + tail, -log_w * expm1_over<Real>(u)};
}

// Picks the accumulation type from the size of the largest summand
// (about (N+1)^{1-Re s}) relative to binary64.
template <class Fn>
ComplexValue with_summation_precision(ComplexValue s, int shift, Fn&& fn) {
  if (s.real() >= 0.0) return fn.template operator()<double>();
  const double growth_digits = (1.0 - s.real()) * std::log10(shift + 1.0);
  if (growth_digits <= 28.0) return fn.template operator()<mp::cpp_bin_float_50>();
  return fn.template operator()<mp::cpp_bin_float_100>();
}

inline void check_zeta_pole(ComplexValue s, const char* what) {
  if (std::abs(s - 1.0) < pole_exclusion_radius)
    throw PoleError(std::string(what) + ": s = " + format_complex(s) +
                    " is within the exclusion radius of the pole at 1");
}

/// Hurwitz zeta for any a > 0 (the public entry point restricts a to (0, 1]).
inline ComplexValue hurwitz_zeta_any(ComplexValue s, double a) {
  require_finite(s, "hurwitz_zeta");
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("hurwitz_zeta: a must be positive");
  check_zeta_pole(s, "hurwitz_zeta");
  const int shift = euler_maclaurin_shift(s);
  const ComplexValue value = with_summation_precision(s, shift, [&]<class Real>() {
    const auto sc = from_value<Real>(s);
    const auto terms = hurwitz_terms<Real>(sc, Real(a), shift);
    return to_value(terms.regular + terms.pole_part + Real(1) / (sc - Real(1)));
  });
  require_finite(value, "hurwitz_zeta");
  return value;
}

inline int jacobi_symbol(std::int64_t a, std::int64_t n) {
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const auto r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

inline bool is_squarefree(std::int64_t n) {
  if (n < 0) n = -n;
  if (n == 0) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

inline bool is_fundamental_discriminant(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  const auto mod4 = ((d % 4) + 4) % 4;
  if (mod4 == 1) return is_squarefree(d);
  if (mod4 != 0) return false;
  const std::int64_t m = d / 4;
  const auto m_mod4 = ((m % 4) + 4) % 4;
  return (m_mod4 == 2 || m_mod4 == 3) && is_squarefree(m);
}

}  // namespace detail

namespace detail {

// log Gamma without the pole-radius check; callers guarantee s is off the poles.
inline ComplexValue log_gamma_unchecked(ComplexValue s) {
  using namespace std::complex_literals;
  constexpr double pi = std::numbers::pi;
  if (s.real() >= 0.5) return log_gamma_lanczos(s);

  // Reflection in the closed upper half-plane, with log sin(pi z) continued
  // from z = 1/2:  log sin(pi z) = -i pi z + log(1 - e^{2 pi i z}) + i pi/2 - log 2.
  const bool lower = s.imag() < 0.0;
  const ComplexValue z = lower ? std::conj(s) : s;
  const double reduced = z.real() - std::round(z.real());
  const ComplexValue unit = std::exp(2.0 * pi * 1i * ComplexValue(reduced, z.imag()));
  const ComplexValue log_sin = -1i * pi * z + std::log(1.0 - unit) + 1i * (pi / 2.0) - std::numbers::ln2;
  const ComplexValue value = std::log(pi) - log_sin - log_gamma_lanczos(1.0 - z);
  require_finite(value, "log_gamma");
  return lower ? std::conj(value) : value;
}

/// Distance from s to the nearest of 0, -1, -2, ...
inline double gamma_pole_distance(ComplexValue s) {
  const double nearest = std::min(0.0, std::round(s.real()));
  return std::abs(s - nearest);
}

}  // namespace detail

/// Principal branch of log Gamma, continuous on C \ (-inf, 0].  On the
/// negative real axis the limit from the upper half-plane is returned, so
/// exp(log_gamma(s)) is Gamma(s) everywhere off the poles.
inline ComplexValue log_gamma(ComplexValue s) {
  detail::require_finite(s, "log_gamma");
  if (detail::gamma_pole_distance(s) < pole_exclusion_radius)
    throw PoleError("log_gamma: s = " + detail::format_complex(s) +
                    " is within the exclusion radius of a pole of Gamma");
  return detail::log_gamma_unchecked(s);
}

/// Hurwitz zeta(s, a) for 0 < a <= 1, continued to s != 1.
inline ComplexValue hurwitz_zeta(ComplexValue s, double a) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_zeta: a must lie in (0, 1]");
  return detail::hurwitz_zeta_any(s, a);
}

inline ComplexValue riemann_zeta(ComplexValue s) {
  detail::require_finite(s, "riemann_zeta");
  detail::check_zeta_pole(s, "riemann_zeta");
  return detail::hurwitz_zeta_any(s, 1.0);
}

/// Kronecker symbol (D/n) for n >= 1, via quadratic reciprocity.
inline int kronecker_chi(std::int64_t discriminant, std::int64_t n) {
  if (n <= 0) throw DomainError("kronecker_chi: n must be positive, got " + std::to_string(n));
  int result = 1;
  while (n % 2 == 0) {
    if (discriminant % 2 == 0) return 0;
    n /= 2;
    const auto r = ((discriminant % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }
  return result * detail::jacobi_symbol(discriminant, n);
}

/// Real character n -> (D/n) attached to a fundamental discriminant D
/// (or D = 1, the principal character).
class KroneckerCharacter {
 public:
  explicit KroneckerCharacter(std::int64_t discriminant) : discriminant_(discriminant) {
    if (discriminant != 1 && !detail::is_fundamental_discriminant(discriminant))
      throw DomainError("KroneckerCharacter: " + std::to_string(discriminant) +
                        " is not a fundamental discriminant");
  }

  std::int64_t discriminant() const noexcept { return discriminant_; }
  std::int64_t modulus() const noexcept { return discriminant_ < 0 ? -discriminant_ : discriminant_; }
  bool is_principal() const noexcept { return discriminant_ == 1; }

  int operator()(std::int64_t n) const { return kronecker_chi(discriminant_, n); }

 private:
  std::int64_t discriminant_;
};

/// L(s, chi_D) = |D|^{-s} sum_{r=1}^{|D|} chi(r) zeta(s, r/|D|).  Entire when
/// D != 1: the 1/(s-1) parts of the Hurwitz terms cancel because the
/// character sums to zero, so they are dropped before summation.
inline ComplexValue dirichlet_l(ComplexValue s, const KroneckerCharacter& chi) {
  detail::require_finite(s, "dirichlet_l");
  if (chi.is_principal()) return riemann_zeta(s);

  const std::int64_t m = chi.modulus();
  const int shift = detail::euler_maclaurin_shift(s);
  const ComplexValue value = detail::with_summation_precision(s, shift, [&]<class Real>() {
    using std::exp;
    using std::log;
    const auto sc = detail::from_value<Real>(s);
    detail::complex_t<Real> sum(Real(0), Real(0));
    for (std::int64_t r = 1; r <= m; ++r) {
      const int sign = chi(r);
      if (sign == 0) continue;
      const auto terms = detail::hurwitz_terms<Real>(sc, Real(r) / Real(m), shift);
      if (sign > 0)
        sum += terms.regular + terms.pole_part;
      else
        sum -= terms.regular + terms.pole_part;
    }
    return detail::to_value(exp(-sc * log(Real(m))) * sum);
  });
  detail::require_finite(value, "dirichlet_l");
  return value;
}

}  // namespace gz
