#pragma once

// Text form of a field descriptor:
//
//   Q
//   Q(sqrt=<d>)
//   Fq(T)?q=<q>
//   curve?q=<q>&L=<a0,a1,...,a2g>
//   curve?q=<q>&N=<N1,...,Ng>

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "globalzeta/errors.hpp"
#include "globalzeta/field_catalog.hpp"

namespace gz {

struct ParsedField {
  FieldDescriptor field;
  std::vector<std::string> warnings;
};

namespace detail {

inline std::int64_t parse_int64(std::string_view token) {
  std::int64_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last)
    throw ParseError(std::string(token), "expected an integer");
  return value;
}

inline BigInt parse_bigint(std::string_view token) {
  std::size_t start = (!token.empty() && (token[0] == '-' || token[0] == '+')) ? 1 : 0;
  if (start == token.size()) throw ParseError(std::string(token), "expected an integer");
  for (std::size_t i = start; i < token.size(); ++i) {
    if (token[i] < '0' || token[i] > '9') throw ParseError(std::string(token), "expected an integer");
  }
  if (token[0] == '+') token.remove_prefix(1);
  return BigInt(std::string(token));
}

inline std::vector<std::string_view> split(std::string_view text, char separator) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(separator, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace detail

/// Parses the field grammar above.  Syntax errors raise ParseError naming the
/// offending token; construction errors (DomainError, SymmetryError) pass
/// through.  Weil-bound diagnostics from point counts land in `warnings`.
inline ParsedField parse_field_spec(std::string_view spec) {
  if (spec == "Q") return {make_rationals(), {}};

  constexpr std::string_view quadratic_prefix = "Q(sqrt=";
  if (spec.starts_with(quadratic_prefix)) {
    if (!spec.ends_with(")")) throw ParseError(std::string(spec), "missing closing parenthesis");
    const auto body = spec.substr(quadratic_prefix.size(), spec.size() - quadratic_prefix.size() - 1);
    return {make_quadratic(detail::parse_int64(body)), {}};
  }

  constexpr std::string_view rational_prefix = "Fq(T)?";
  constexpr std::string_view curve_prefix = "curve?";
  const bool rational = spec.starts_with(rational_prefix);
  const bool curve = spec.starts_with(curve_prefix);
  if (!rational && !curve) {
    const auto head = spec.substr(0, spec.find_first_of("?(&"));
    throw ParseError(std::string(head.empty() ? spec : head), "unknown field kind (expected Q, Q(sqrt=d), Fq(T)?q=, curve?q=)");
  }

  const auto query = spec.substr(rational ? rational_prefix.size() : curve_prefix.size());
  std::optional<std::int64_t> q;
  std::optional<std::string_view> l_values;
  std::optional<std::string_view> n_values;
  for (const auto param : detail::split(query, '&')) {
    const auto eq = param.find('=');
    if (eq == std::string_view::npos) throw ParseError(std::string(param), "expected key=value");
    const auto key = param.substr(0, eq);
    const auto value = param.substr(eq + 1);
    if (key == "q" && !q) {
      q = detail::parse_int64(value);
    } else if (curve && key == "L" && !l_values && !n_values) {
      l_values = value;
    } else if (curve && key == "N" && !l_values && !n_values) {
      n_values = value;
    } else {
      throw ParseError(std::string(param), "unexpected or repeated parameter");
    }
  }
  if (!q) throw ParseError(std::string(spec), "missing q=<q>");

  if (rational) return {make_rational_function_field(*q), {}};

  if (l_values) {
    std::vector<BigInt> coefficients;
    for (const auto token : detail::split(*l_values, ',')) coefficients.push_back(detail::parse_bigint(token));
    return {make_curve_function_field(*q, LPolynomial(std::move(coefficients))), {}};
  }
  if (!n_values) throw ParseError(std::string(spec), "curve needs L=<coefficients> or N=<point counts>");

  std::vector<std::int64_t> counts;
  if (!n_values->empty()) {
    for (const auto token : detail::split(*n_values, ',')) counts.push_back(detail::parse_int64(token));
  }
  auto result = lpoly_from_point_counts(*q, static_cast<int>(counts.size()), counts);
  ParsedField parsed{make_curve_function_field(*q, std::move(result.lpoly)), {}};
  for (auto& w : result.warnings) parsed.warnings.push_back(std::move(w.message));
  return parsed;
}

/// Canonical spec string; genus-0 function fields print as Fq(T).
inline std::string format_field_spec(const FieldDescriptor& field) {
  if (const auto* nf = std::get_if<NumberFieldDescriptor>(&field)) {
    if (nf->is_rationals()) return "Q";
    return "Q(sqrt=" + std::to_string(nf->radicand()) + ")";
  }
  const auto& ff = std::get<FunctionFieldDescriptor>(field);
  if (ff.is_rational()) return "Fq(T)?q=" + std::to_string(ff.q());
  std::string out = "curve?q=" + std::to_string(ff.q()) + "&L=";
  const auto& a = ff.lpoly().coefficients();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) out += ",";
    out += a[i].str();
  }
  return out;
}

}  // namespace gz
