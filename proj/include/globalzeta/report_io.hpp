#pragma once

// Serialization of functional-equation reports.
//
// JSON: {"reports":[{"s_re":..,"s_im":..,"lhs_re":..,"lhs_im":..,"rhs_re":..,
//        "rhs_im":..,"residual":..,"pole_distance":..,"status":".."},...],
//        "summary":{"field":..,"grid":..,"count_ok":..,"count_skipped":..,
//        "count_failed":..,"max_residual":..}}
// Values that were not computed (skipped points) are null in JSON and empty
// in CSV.  Reals carry 17 significant digits, so parse + render reproduces
// the input byte for byte.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "globalzeta/errors.hpp"
#include "globalzeta/fe_verifier.hpp"
#include "globalzeta/number_format.hpp"

namespace gz {

enum class OutputFormat { json, csv };

inline OutputFormat parse_output_format(std::string_view text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  throw ParseError(std::string(text), "output format must be json or csv");
}

/// Flat JSON object with keys in insertion order.
class JsonObjectWriter {
 public:
  JsonObjectWriter& field(std::string_view key, double value) { return raw(key, format_real(value)); }
  JsonObjectWriter& field(std::string_view key, std::optional<double> value) {
    return raw(key, value ? format_real(*value) : "null");
  }
  JsonObjectWriter& field(std::string_view key, std::size_t value) { return raw(key, std::to_string(value)); }
  JsonObjectWriter& field(std::string_view key, std::int64_t value) { return raw(key, std::to_string(value)); }
  JsonObjectWriter& field(std::string_view key, bool value) { return raw(key, value ? "true" : "false"); }
  JsonObjectWriter& field(std::string_view key, std::string_view value) {
    return raw(key, nlohmann::json(std::string(value)).dump());
  }
  JsonObjectWriter& field(std::string_view key, const char* value) { return field(key, std::string_view(value)); }

  /// `json` must already be serialized JSON.
  JsonObjectWriter& raw(std::string_view key, std::string_view json) {
    if (!body_.empty()) body_ += ",";
    body_ += nlohmann::json(std::string(key)).dump();
    body_ += ":";
    body_ += json;
    return *this;
  }

  std::string str() const { return "{" + body_ + "}"; }

 private:
  std::string body_;
};

namespace detail {

inline std::optional<double> real_part(const std::optional<ComplexValue>& z) {
  return z ? std::optional<double>(z->real()) : std::nullopt;
}
inline std::optional<double> imag_part(const std::optional<ComplexValue>& z) {
  return z ? std::optional<double>(z->imag()) : std::nullopt;
}

inline std::string csv_cell(std::optional<double> value) { return value ? format_real(*value) : std::string(); }

}  // namespace detail

inline std::string render_report_json(const FunctionalEquationReport& r) {
  return JsonObjectWriter{}
      .field("s_re", r.s.real())
      .field("s_im", r.s.imag())
      .field("lhs_re", detail::real_part(r.lhs))
      .field("lhs_im", detail::imag_part(r.lhs))
      .field("rhs_re", detail::real_part(r.rhs))
      .field("rhs_im", detail::imag_part(r.rhs))
      .field("residual", r.residual)
      .field("pole_distance", r.pole_distance)
      .field("status", to_string(r.status))
      .str();
}

inline std::string render_summary_json(const SweepSummary& s) {
  return JsonObjectWriter{}
      .field("field", s.field)
      .field("grid", s.grid)
      .field("count_ok", s.count_ok)
      .field("count_skipped", s.count_skipped)
      .field("count_failed", s.count_failed)
      .field("max_residual", s.max_residual)
      .str();
}

inline constexpr std::string_view report_csv_header = "s_re,s_im,lhs_re,lhs_im,rhs_re,rhs_im,residual,pole_distance,status";

inline std::string render_report(const std::vector<FunctionalEquationReport>& reports, const SweepSummary& summary,
                                 OutputFormat format) {
  std::string out;
  if (format == OutputFormat::json) {
    out = "{\"reports\":[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i > 0) out += ",";
      out += render_report_json(reports[i]);
    }
    out += "],\"summary\":" + render_summary_json(summary) + "}\n";
    return out;
  }

  out = std::string(report_csv_header) + "\n";
  for (const auto& r : reports) {
    out += format_real(r.s.real()) + "," + format_real(r.s.imag()) + "," + detail::csv_cell(detail::real_part(r.lhs)) +
           "," + detail::csv_cell(detail::imag_part(r.lhs)) + "," + detail::csv_cell(detail::real_part(r.rhs)) + "," +
           detail::csv_cell(detail::imag_part(r.rhs)) + "," + detail::csv_cell(r.residual) + "," +
           format_real(r.pole_distance) + "," + to_string(r.status) + "\n";
  }
  out += "# ok=" + std::to_string(summary.count_ok) + ",skipped=" + std::to_string(summary.count_skipped) +
         ",failed=" + std::to_string(summary.count_failed) + ",max_residual=" + format_real(summary.max_residual) +
         "\n";
  return out;
}

inline CheckStatus parse_status(std::string_view text) {
  if (text == "ok") return CheckStatus::ok;
  if (text == "near_pole_skipped") return CheckStatus::near_pole_skipped;
  if (text == "failed") return CheckStatus::failed;
  throw ParseError(std::string(text), "unknown report status");
}

struct ParsedReport {
  std::vector<FunctionalEquationReport> reports;
  SweepSummary summary;
};

/// Inverse of render_report(..., OutputFormat::json).
inline ParsedReport parse_report_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("report", e.what());
  }

  const auto optional_real = [](const nlohmann::json& v) -> std::optional<double> {
    if (v.is_null()) return std::nullopt;
    return v.get<double>();
  };
  const auto optional_complex = [&](const nlohmann::json& re, const nlohmann::json& im) -> std::optional<ComplexValue> {
    const auto r = optional_real(re);
    const auto i = optional_real(im);
    if (!r || !i) return std::nullopt;
    return ComplexValue(*r, *i);
  };

  ParsedReport parsed;
  try {
    for (const auto& item : doc.at("reports")) {
      parsed.reports.push_back({{item.at("s_re").get<double>(), item.at("s_im").get<double>()},
                                optional_complex(item.at("lhs_re"), item.at("lhs_im")),
                                optional_complex(item.at("rhs_re"), item.at("rhs_im")),
                                optional_real(item.at("residual")),
                                item.at("pole_distance").get<double>(),
                                parse_status(item.at("status").get<std::string>())});
    }
    const auto& s = doc.at("summary");
    parsed.summary = {s.at("field").get<std::string>(),          s.at("grid").get<std::string>(),
                      s.at("count_ok").get<std::size_t>(),       s.at("count_skipped").get<std::size_t>(),
                      s.at("count_failed").get<std::size_t>(),   s.at("max_residual").get<double>()};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("report", e.what());
  }
  return parsed;
}

}  // namespace gz
