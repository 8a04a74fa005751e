#pragma once

// Command-line front end of the globalzeta tool.
//
//   globalzeta eval        --field F --s S
//   globalzeta check       --field F --s S [--tol T]
//   globalzeta sweep       --field F --grid re0:re1:n,im0:im1:m [--tol T] [--threads K]
//   globalzeta covolume    --field F
//   globalzeta places      --field F --norm-bound B
//   globalzeta euler-check --field F --s S --norm-bound B
//
// Every command accepts --format json|csv (default from GLOBALZETA_FORMAT,
// else json) and --output PATH.  Exit codes: 0 success, 1 a check failed,
// 2 usage, parse or domain error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "globalzeta/globalzeta.hpp"

namespace gz::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

inline constexpr const char* format_environment_variable = "GLOBALZETA_FORMAT";

namespace detail {

inline double parse_double(std::string_view token, std::string_view whole) {
  const std::string text(token);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError(std::string(whole), "expected a number");
  }
  if (used != text.size() || !std::isfinite(value)) throw ParseError(std::string(whole), "expected a finite number");
  return value;
}

}  // namespace detail

/// "2", "-1.5", "0.5+14.1i", "0.5-3i", "2i", or "re,im".
inline ComplexValue parse_complex(std::string_view text) {
  if (text.empty()) throw ParseError("", "expected a complex number");
  if (const auto comma = text.find(','); comma != std::string_view::npos)
    return {detail::parse_double(text.substr(0, comma), text), detail::parse_double(text.substr(comma + 1), text)};
  if (text.back() != 'i') return {detail::parse_double(text, text), 0.0};

  const auto body = text.substr(0, text.size() - 1);
  // split at the last sign that is not a leading sign or part of an exponent
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      const auto im = body.substr(i);
      const double im_value = (im == "+" || im == "-") ? (im == "+" ? 1.0 : -1.0) : detail::parse_double(im, text);
      return {detail::parse_double(body.substr(0, i), text), im_value};
    }
  }
  if (body.empty() || body == "+") return {0.0, 1.0};
  if (body == "-") return {0.0, -1.0};
  return {0.0, detail::parse_double(body, text)};
}

/// "re_min:re_max:steps,im_min:im_max:steps"
inline Grid parse_grid(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw ParseError(std::string(text), "grid needs re_min:re_max:steps,im_min:im_max:steps");
  const auto axis = [&](std::string_view part) {
    const auto c1 = part.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : part.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw ParseError(std::string(part), "grid axis needs min:max:steps");
    const double lo = detail::parse_double(part.substr(0, c1), part);
    const double hi = detail::parse_double(part.substr(c1 + 1, c2 - c1 - 1), part);
    const auto steps = gz::detail::parse_int64(part.substr(c2 + 1));
    if (steps < 1 || steps > 1'000'000) throw ParseError(std::string(part), "steps must be between 1 and 1000000");
    return std::tuple{lo, hi, static_cast<int>(steps)};
  };
  const auto [re_lo, re_hi, re_n] = axis(text.substr(0, comma));
  const auto [im_lo, im_hi, im_n] = axis(text.substr(comma + 1));
  Grid grid{re_lo, re_hi, re_n, im_lo, im_hi, im_n};
  grid.validate();
  return grid;
}

struct CommandRequest {
  std::string command;
  std::string field_spec;
  std::string s_text;
  std::string grid_text;
  double tolerance = 1e-9;
  std::int64_t norm_bound = 0;
  unsigned threads = 1;
  std::string format_text;
  std::string output_path;
};

namespace detail {

inline std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += ",";
    const auto& c = cells[i];
    if (c.find_first_of(",\"\n") != std::string::npos) {
      out += "\"";
      for (const char ch : c) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      out += "\"";
    } else {
      out += c;
    }
  }
  return out + "\n";
}

inline std::string render_evaluation(const std::string& field, const EvaluationRecord& r, OutputFormat format) {
  if (format == OutputFormat::json) {
    return JsonObjectWriter{}
               .field("field", field)
               .field("s_re", r.s.real())
               .field("s_im", r.s.imag())
               .field("zeta_re", r.zeta_value.real())
               .field("zeta_im", r.zeta_value.imag())
               .field("gamma_factor_re", r.gamma_factor_value.real())
               .field("gamma_factor_im", r.gamma_factor_value.imag())
               .field("completed_re", r.completed_value.real())
               .field("completed_im", r.completed_value.imag())
               .field("pole_distance", r.pole_distance)
               .field("precision_cliff", r.precision_cliff)
               .str() +
           "\n";
  }
  return csv_line({"field", "s_re", "s_im", "zeta_re", "zeta_im", "gamma_factor_re", "gamma_factor_im", "completed_re",
                   "completed_im", "pole_distance", "precision_cliff"}) +
         csv_line({field, format_real(r.s.real()), format_real(r.s.imag()), format_real(r.zeta_value.real()),
                   format_real(r.zeta_value.imag()), format_real(r.gamma_factor_value.real()),
                   format_real(r.gamma_factor_value.imag()), format_real(r.completed_value.real()),
                   format_real(r.completed_value.imag()), format_real(r.pole_distance),
                   r.precision_cliff ? "true" : "false"});
}

inline std::string render_covolume(const std::string& field, const Covolume& beta, OutputFormat format) {
  if (format == OutputFormat::json)
    return JsonObjectWriter{}.field("field", field).field("covolume", beta.value()).field("exact", beta.to_string()).str() +
           "\n";
  return csv_line({"field", "covolume", "exact"}) + csv_line({field, format_real(beta.value()), beta.to_string()});
}

inline const char* place_kind(const Place& place) {
  if (std::holds_alternative<PrimePlace>(place.where)) return "prime";
  if (std::holds_alternative<IrreduciblePlace>(place.where)) return "irreducible";
  return "infinite";
}

inline std::string render_places(const std::string& field, std::int64_t bound, const std::vector<Place>& places,
                                 OutputFormat format) {
  if (format == OutputFormat::json) {
    std::string list = "[";
    for (std::size_t i = 0; i < places.size(); ++i) {
      if (i > 0) list += ",";
      list += JsonObjectWriter{}
                  .field("label", places[i].label())
                  .field("kind", place_kind(places[i]))
                  .field("residual_cardinality", places[i].residual_cardinality)
                  .str();
    }
    list += "]";
    return JsonObjectWriter{}.field("field", field).field("norm_bound", bound).raw("places", list).str() + "\n";
  }
  std::string out = csv_line({"label", "kind", "residual_cardinality"});
  for (const auto& p : places) out += csv_line({p.label(), place_kind(p), std::to_string(p.residual_cardinality)});
  return out;
}

inline std::string render_euler(const std::string& field, ComplexValue s, std::int64_t bound, const EulerConsistency& e,
                                OutputFormat format) {
  if (format == OutputFormat::json) {
    return JsonObjectWriter{}
               .field("field", field)
               .field("s_re", s.real())
               .field("s_im", s.imag())
               .field("norm_bound", bound)
               .field("closed_form_re", e.closed_form.real())
               .field("closed_form_im", e.closed_form.imag())
               .field("truncated_re", e.truncated.real())
               .field("truncated_im", e.truncated.imag())
               .field("gap", e.gap)
               .field("tail_bound", e.tail_bound)
               .field("pass", e.pass)
               .str() +
           "\n";
  }
  return csv_line({"field", "s_re", "s_im", "norm_bound", "closed_form_re", "closed_form_im", "truncated_re",
                   "truncated_im", "gap", "tail_bound", "pass"}) +
         csv_line({field, format_real(s.real()), format_real(s.imag()), std::to_string(bound),
                   format_real(e.closed_form.real()), format_real(e.closed_form.imag()),
                   format_real(e.truncated.real()), format_real(e.truncated.imag()), format_real(e.gap),
                   format_real(e.tail_bound), e.pass ? "true" : "false"});
}

inline OutputFormat resolve_format(const std::string& flag) {
  if (!flag.empty()) return parse_output_format(flag);
  if (const char* env = std::getenv(format_environment_variable); env != nullptr && *env != '\0')
    return parse_output_format(env);
  return OutputFormat::json;
}

struct Outcome {
  std::string text;
  int exit_code;
};

inline Outcome run(const CommandRequest& request, std::ostream& err) {
  const OutputFormat format = resolve_format(request.format_text);
  const auto parsed = parse_field_spec(request.field_spec);
  for (const auto& w : parsed.warnings) err << "warning: " << w << "\n";
  const auto& field = parsed.field;
  const std::string spec = format_field_spec(field);

  if (request.command == "eval") {
    const auto s = parse_complex(request.s_text);
    return {render_evaluation(spec, completed_zeta(field, s), format), exit_ok};
  }
  if (request.command == "check") {
    const auto s = parse_complex(request.s_text);
    const std::vector reports{check_point(field, s, request.tolerance)};
    const auto summary = summarize(spec, "point", reports);
    return {render_report(reports, summary, format), summary.count_failed > 0 ? exit_check_failed : exit_ok};
  }
  if (request.command == "sweep") {
    const auto result = sweep(field, parse_grid(request.grid_text), request.tolerance, request.threads);
    return {render_report(result.reports, result.summary, format),
            result.summary.count_failed > 0 ? exit_check_failed : exit_ok};
  }
  if (request.command == "covolume") return {render_covolume(spec, covolume(field), format), exit_ok};
  if (request.command == "places")
    return {render_places(spec, request.norm_bound, enumerate_places(field, request.norm_bound), format), exit_ok};
  if (request.command == "euler-check") {
    const auto s = parse_complex(request.s_text);
    const auto e = euler_consistency_check(field, s, request.norm_bound);
    return {render_euler(spec, s, request.norm_bound, e, format), e.pass ? exit_ok : exit_check_failed};
  }
  throw ParseError(request.command, "unknown command");
}

}  // namespace detail

/// Parses argv (program name first), runs one command, writes the result to
/// `out` (or --output) and diagnostics to `err`.  Returns the exit code.
inline int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Completed zeta functions of global fields and their functional equation", "globalzeta"};
  app.require_subcommand(1);
  CommandRequest request;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", request.field_spec, "Field spec: Q | Q(sqrt=d) | Fq(T)?q=q | curve?q=q&L=... | curve?q=q&N=...")
        ->required();
    sub->add_option("--format", request.format_text, "json or csv (default: $GLOBALZETA_FORMAT, else json)");
    sub->add_option("--output", request.output_path, "Write the result to this file instead of stdout");
  };

  auto* eval = app.add_subcommand("eval", "Evaluate zeta_k, the Gamma factor and Z_k at s");
  add_common(eval);
  eval->add_option("--s", request.s_text, "Point s, e.g. 2, 0.5+14i, 0.5,14")->required();

  auto* check = app.add_subcommand("check", "Check Z(1-s) = beta^(2s-1) Z(s) at one point");
  add_common(check);
  check->add_option("--s", request.s_text, "Point s")->required();
  check->add_option("--tol", request.tolerance, "Relative tolerance")->check(CLI::PositiveNumber);

  auto* sweep_cmd = app.add_subcommand("sweep", "Check the functional equation on a grid");
  add_common(sweep_cmd);
  sweep_cmd->add_option("--grid", request.grid_text, "re_min:re_max:steps,im_min:im_max:steps")->required();
  sweep_cmd->add_option("--tol", request.tolerance, "Relative tolerance")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--threads", request.threads, "Worker threads")->check(CLI::Range(1U, 64U));

  auto* covolume_cmd = app.add_subcommand("covolume", "Print beta(A/k)");
  add_common(covolume_cmd);

  auto* places = app.add_subcommand("places", "List the places with q_v <= norm bound");
  add_common(places);
  places->add_option("--norm-bound", request.norm_bound, "Largest q_v")->required();

  auto* euler = app.add_subcommand("euler-check", "Compare zeta_k with its truncated Euler product");
  add_common(euler);
  euler->add_option("--s", request.s_text, "Point s with Re s > 1")->required();
  euler->add_option("--norm-bound", request.norm_bound, "Largest q_v in the product")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }
  request.command = app.get_subcommands().front()->get_name();

  detail::Outcome outcome;
  try {
    outcome = detail::run(request, err);
  } catch (const SymmetryError& e) {
    err << "error: SymmetryError: " << e.what() << "\n";
    return exit_usage;
  } catch (const PoleError& e) {
    err << "error: PoleError: " << e.what() << "\n";
    return exit_usage;
  } catch (const DomainError& e) {
    err << "error: DomainError: " << e.what() << "\n";
    return exit_usage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  if (request.output_path.empty()) {
    out << outcome.text;
  } else {
    std::ofstream file(request.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open output file '" << request.output_path << "'\n";
      return exit_usage;
    }
    file << outcome.text;
  }
  return outcome.exit_code;
}

}  // namespace gz::cli
