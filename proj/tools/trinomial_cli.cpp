// Command-line front end: solve / verify / sweep / decompose with
// deterministic JSON, CSV, and plain output.
//
// Exit codes: 0 success, 1 verify mismatch, 2 outside the series radius with
// oracle fallback disabled, 3 numeric failure, 64 usage error.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trinomial/trinomial.hpp"

using namespace trinomial;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitOutsideRadius = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string fmt17(double v) { return fmt_sig(v, 17); }
std::string fmt12(double v) { return fmt_sig(v, 12); }

std::string complex_str(Complex z, int digits) {
  std::string im = fmt_sig(z.imag(), digits);
  if (im.front() != '-') im.insert(im.begin(), '+');
  return fmt_sig(z.real(), digits) + im + "i";
}

struct ReportRow {
  Complex root{};
  double residual = 0.0;
  std::string provenance;
  int multiplicity = 1;
};

struct SolveReport {
  int degree = 0;
  Complex t{};
  std::string method;
  double radius = 0.0;
  long terms_used = 0;
  std::vector<ReportRow> rows;
};

SolveReport report_from_root_set(const RootSet& set, const std::string& method,
                                 long terms) {
  SolveReport report;
  report.degree = set.degree;
  report.t = set.t;
  report.method = method;
  report.radius = convergence_radius(set.degree);
  report.terms_used = terms;
  for (std::size_t i = 0; i < set.roots.size(); ++i)
    report.rows.push_back({set.roots[i], set.residuals[i], set.provenance[i].str(),
                           set.provenance[i].multiplicity});
  return report;
}

std::string to_json(const SolveReport& r) {
  std::ostringstream out;
  out << "{\n"
      << "  \"metadata\": {\n"
      << "    \"degree\": " << r.degree << ",\n"
      << "    \"t\": {\"re\": " << fmt17(r.t.real()) << ", \"im\": "
      << fmt17(r.t.imag()) << "},\n"
      << "    \"method\": \"" << r.method << "\",\n"
      << "    \"radius\": " << fmt17(r.radius) << ",\n"
      << "    \"terms_used\": " << r.terms_used << "\n"
      << "  },\n"
      << "  \"roots\": [\n";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const ReportRow& row = r.rows[i];
    out << "    {\"re\": " << fmt17(row.root.real()) << ", \"im\": "
        << fmt17(row.root.imag()) << ", \"residual\": " << fmt17(row.residual)
        << ", \"provenance\": \"" << row.provenance << "\"}"
        << (i + 1 < r.rows.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

constexpr const char* kCsvHeader =
    "t_re,t_im,method,root_index,root_re,root_im,residual,terms_used,converged";

void append_csv_rows(std::ostringstream& out, const SolveReport& r) {
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const ReportRow& row = r.rows[i];
    out << fmt17(r.t.real()) << ',' << fmt17(r.t.imag()) << ',' << r.method << ','
        << i << ',' << fmt17(row.root.real()) << ',' << fmt17(row.root.imag()) << ','
        << fmt17(row.residual) << ',' << r.terms_used << ",1\n";
  }
}

std::string to_csv(const SolveReport& r) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  append_csv_rows(out, r);
  return out.str();
}

std::string to_plain(const SolveReport& r) {
  std::ostringstream out;
  out << "degree: " << r.degree << '\n'
      << "t: " << complex_str(r.t, 12) << '\n'
      << "method: " << r.method << '\n'
      << "radius: " << fmt12(r.radius) << " (|t| = " << fmt12(std::abs(r.t)) << ")\n"
      << "terms: " << r.terms_used << '\n';
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const ReportRow& row = r.rows[i];
    out << "root[" << i << "] = " << complex_str(row.root, 12)
        << "  residual = " << fmt_sig(row.residual, 3) << "  [" << row.provenance << ']';
    if (row.multiplicity > 1) out << "  (multiplicity " << row.multiplicity << ')';
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// solve

RootSet decomposition_roots(const TrinomialProblem& problem, const SolverConfig& cfg,
                            long& terms) {
  // same radius gate as the direct series
  const double limit = convergence_radius(problem.degree) * (1.0 - cfg.radius_margin);
  if (!(std::abs(problem.t) < limit))
    throw OutsideRadiusError("|t| = " + std::to_string(std::abs(problem.t)) +
                             " not below " + std::to_string(limit));
  std::vector<Complex> roots;
  std::vector<RootTag> tags;
  Complex sum{};
  for (int j = 0; j <= problem.degree - 2; ++j) {
    const SeriesResult r =
        evaluate_decomposition(decompose(problem, BranchIndex{j}), cfg);
    terms += r.terms_used;
    roots.push_back(r.value);
    tags.push_back({RootOrigin::series_branch, j, 1});
    sum += r.value;
  }
  roots.push_back(Complex(vieta_sum_target(problem.degree), 0.0) - sum);
  tags.push_back({RootOrigin::sum_rule, -1, 1});
  RootSet out = make_root_set(problem, std::move(roots), std::move(tags));
  if (!(out.residuals.back() <= cfg.residual_tol))
    throw ResidualError("decomposition sum-rule root residual " +
                        std::to_string(out.residuals.back()));
  return out;
}

RootSet series_roots_with_terms(const TrinomialProblem& problem,
                                const SolverConfig& cfg, long& terms) {
  std::vector<Complex> roots;
  std::vector<RootTag> tags;
  Complex sum{};
  for (int j = 0; j <= problem.degree - 2; ++j) {
    const SeriesResult r = series_root(problem, BranchIndex{j}, cfg);
    terms += r.terms_used;
    roots.push_back(r.value);
    tags.push_back({RootOrigin::series_branch, j, 1});
    sum += r.value;
  }
  roots.push_back(Complex(vieta_sum_target(problem.degree), 0.0) - sum);
  tags.push_back({RootOrigin::sum_rule, -1, 1});
  RootSet out = make_root_set(problem, std::move(roots), std::move(tags));
  if (!(out.residuals.back() <= cfg.residual_tol))
    throw ResidualError("sum-rule root residual " +
                        std::to_string(out.residuals.back()));
  return out;
}

SolveReport run_solve_method(const TrinomialProblem& problem, const std::string& method,
                             const SolverConfig& cfg, bool oracle_fallback) {
  long terms = 0;
  if (method == "series") {
    const RootSet set = series_roots_with_terms(problem, cfg, terms);
    return report_from_root_set(set, "series", terms);
  }
  if (method == "decomposition") {
    const RootSet set = decomposition_roots(problem, cfg, terms);
    return report_from_root_set(set, "decomposition", terms);
  }
  if (method == "closed-form") {
    if (problem.degree == 2)
      return report_from_root_set(quadratic_roots(problem.t), "closed-form", 0);
    if (problem.degree == 3)
      return report_from_root_set(cubic_roots(problem.t), "closed-form", 0);
    if (problem.degree == 5) {
      const SeriesResult r = quintic_small_root(problem.t, cfg);
      SolveReport report;
      report.degree = 5;
      report.t = problem.t;
      report.method = "closed-form";
      report.radius = convergence_radius(5);
      report.terms_used = r.terms_used;
      report.rows.push_back(
          {r.value, residual(problem, r.value), "closed-form", 1});
      return report;
    }
    throw UsageError("closed-form supports degree 2 and 3 (full set) or 5 "
                     "(small-root branch only)");
  }
  if (method == "oracle")
    return report_from_root_set(oracle_roots(problem), "oracle", 0);
  if (method == "auto") {
    if (problem.degree == 2 || problem.degree == 3)
      return run_solve_method(problem, "closed-form", cfg, oracle_fallback);
    try {
      return run_solve_method(problem, "series", cfg, oracle_fallback);
    } catch (const OutsideRadiusError&) {
      if (!oracle_fallback) throw;
      return run_solve_method(problem, "oracle", cfg, oracle_fallback);
    }
  }
  throw UsageError("unknown method '" + method + "'");
}

int cmd_solve(int degree, double t_re, double t_im, const std::string& method,
              const std::string& format, const SolverConfig& cfg,
              bool oracle_fallback) {
  const TrinomialProblem problem(degree, {t_re, t_im});
  const SolveReport report = run_solve_method(problem, method, cfg, oracle_fallback);
  for (const ReportRow& row : report.rows)
    if (!(row.residual <= cfg.residual_tol)) {
      std::cerr << "residual " << fmt17(row.residual) << " above residual_tol\n";
      return kExitNumeric;
    }
  if (format == "json")
    std::cout << to_json(report);
  else if (format == "csv")
    std::cout << to_csv(report);
  else
    std::cout << to_plain(report);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyCase {
  int degree;
  double t;
  std::string method;
  std::optional<double> distance;  // empty when skipped
  std::string note;
  bool ok = true;
};

VerifyCase verify_one(int degree, double t, const std::string& method,
                      const SolverConfig& cfg, bool allow_skip) {
  VerifyCase result{degree, t, method, std::nullopt, "", true};
  const TrinomialProblem problem(degree, {t, 0.0});
  const double limit = convergence_radius(degree) * (1.0 - cfg.radius_margin);
  const bool series_like = method == "series" || method == "decomposition";

  if (series_like && !(std::abs(t) < limit)) {
    if (!allow_skip)
      throw UsageError("t = " + std::to_string(t) + " outside the degree-" +
                       std::to_string(degree) +
                       " radius; rerun with --allow-skip");
    result.note = "skipped (OutsideRadius)";
    return result;
  }

  const RootSet oracle = oracle_roots(problem);
  if (method == "series") {
    result.distance = match_roots(all_roots_series(problem, cfg), oracle).max_distance;
  } else if (method == "decomposition") {
    long terms = 0;
    result.distance =
        match_roots(decomposition_roots(problem, cfg, terms), oracle).max_distance;
  } else if (method == "closed-form") {
    if (degree == 2) {
      result.distance = match_roots(quadratic_roots({t, 0.0}), oracle).max_distance;
    } else if (degree == 3) {
      result.distance = match_roots(cubic_roots({t, 0.0}), oracle).max_distance;
    } else if (degree == 5 && std::abs(3125.0 * std::pow(t, 4) / 256.0) < 1.0) {
      const Complex small = quintic_small_root({t, 0.0}, cfg).value;
      double best = std::numeric_limits<double>::infinity();
      for (Complex x : oracle.roots) best = std::min(best, std::abs(x - small));
      result.distance = best;
      result.note = "small-root branch only";
    } else {
      result.note = "skipped (no closed form)";
      return result;
    }
  }
  result.ok = *result.distance <= cfg.residual_tol;
  return result;
}

int cmd_verify(const std::vector<int>& degrees, const std::vector<double>& t_values,
               const std::string& method_filter, const SolverConfig& cfg,
               bool allow_skip) {
  const std::vector<std::string> all_methods = {"series", "decomposition",
                                                "closed-form"};
  std::vector<std::string> methods;
  if (method_filter.empty())
    methods = all_methods;
  else if (std::find(all_methods.begin(), all_methods.end(), method_filter) !=
           all_methods.end())
    methods = {method_filter};
  else
    throw UsageError("verify --method must be series, decomposition, or closed-form");

  int failures = 0, skipped = 0, cases = 0;
  std::ostringstream out;
  for (int degree : degrees) {
    for (double t : t_values) {
      for (const std::string& method : methods) {
        const VerifyCase c = verify_one(degree, t, method, cfg, allow_skip);
        ++cases;
        out << "N=" << degree << " t=" << fmt_sig(t, 12) << " method=" << method;
        if (c.distance) {
          out << " max-distance=" << fmt_sig(*c.distance, 3) << ' '
              << (c.ok ? "ok" : "FAIL");
          if (!c.ok) ++failures;
        } else {
          out << ' ' << c.note;
          ++skipped;
        }
        if (c.distance && !c.note.empty()) out << " (" << c.note << ')';
        out << '\n';
      }
    }
  }
  out << "verify: " << cases << " cases, " << failures << " failures, " << skipped
      << " skipped (distance tolerance " << fmt_sig(cfg.residual_tol, 3) << ")\n";
  std::cout << out.str();
  return failures == 0 ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------
// sweep

void sweep_sentinel_row(std::ostringstream& out, Complex t, const std::string& method) {
  out << fmt17(t.real()) << ',' << fmt17(t.imag()) << ',' << method
      << ",-1,nan,nan,nan,0,0\n";
}

int cmd_sweep(int degree, double t_min, double t_max, int steps,
              const SolverConfig& cfg) {
  if (steps < 2) throw UsageError("sweep needs --steps >= 2");
  std::ostringstream out;
  out << kCsvHeader << '\n';
  const double limit = convergence_radius(degree) * (1.0 - cfg.radius_margin);

  for (int k = 0; k < steps; ++k) {
    const double t = t_min + (t_max - t_min) * k / (steps - 1);
    const TrinomialProblem problem(degree, {t, 0.0});
    const bool inside = std::abs(t) < limit;

    if (inside) {
      long terms = 0;
      const RootSet series_set = series_roots_with_terms(problem, cfg, terms);
      append_csv_rows(out, report_from_root_set(series_set, "series", terms));
      long dec_terms = 0;
      const RootSet dec = decomposition_roots(problem, cfg, dec_terms);
      append_csv_rows(out, report_from_root_set(dec, "decomposition", dec_terms));
    } else {
      sweep_sentinel_row(out, {t, 0.0}, "series");
      sweep_sentinel_row(out, {t, 0.0}, "decomposition");
      append_csv_rows(out, report_from_root_set(oracle_roots(problem), "oracle", 0));
    }

    if (degree == 2) {
      append_csv_rows(out, report_from_root_set(quadratic_roots({t, 0.0}),
                                                "closed-form", 0));
    } else if (degree == 3) {
      append_csv_rows(out,
                      report_from_root_set(cubic_roots({t, 0.0}), "closed-form", 0));
    } else if (degree == 5 && std::abs(3125.0 * std::pow(t, 4) / 256.0) < 1.0) {
      const SeriesResult r = quintic_small_root({t, 0.0}, cfg);
      out << fmt17(t) << ",0,closed-form,0," << fmt17(r.value.real()) << ','
          << fmt17(r.value.imag()) << ',' << fmt17(residual(problem, r.value)) << ','
          << r.terms_used << ",1\n";
    }
  }
  std::cout << out.str();
  return kExitOk;
}

// ---------------------------------------------------------------------------
// decompose

std::string argument_str(int degree) {
  const Rational scale = argument_scale(degree);
  std::string out = scale.str();
  if (degree == 2) return out + "t";
  return out + " t^" + std::to_string(degree - 1);
}

int cmd_decompose(int degree, const std::string& format) {
  std::ostringstream out;
  const std::string arg = argument_str(degree);
  if (format == "json") {
    const Rational scale = argument_scale(degree);
    out << "{\n  \"degree\": " << degree << ",\n  \"argument\": {\"scale\": \""
        << scale.str() << "\", \"power\": " << degree - 1 << "},\n  \"classes\": [\n";
    for (int q = 0; q <= degree - 2; ++q) {
      const ClassParameters params = class_parameters(degree, q);
      out << "    {\"q\": " << q << ", \"upper\": [";
      for (std::size_t i = 0; i < params.upper.size(); ++i)
        out << '"' << params.upper[i].str() << '"'
            << (i + 1 < params.upper.size() ? ", " : "");
      out << "], \"lower\": [";
      for (std::size_t i = 0; i < params.lower.size(); ++i)
        out << '"' << params.lower[i].str() << '"'
            << (i + 1 < params.lower.size() ? ", " : "");
      out << "]}" << (q < degree - 2 ? "," : "") << '\n';
    }
    out << "  ]\n}\n";
  } else if (format == "csv") {
    throw UsageError("decompose prints plain or json output");
  } else {
    out << "degree: " << degree << '\n' << "argument: " << arg << '\n';
    for (int q = 0; q <= degree - 2; ++q) {
      const ClassParameters params = class_parameters(degree, q);
      out << "class q=" << q << ": " << params.upper.size() << 'F'
          << params.lower.size() << '(';
      for (std::size_t i = 0; i < params.upper.size(); ++i)
        out << params.upper[i].str() << (i + 1 < params.upper.size() ? ", " : "");
      out << "; ";
      for (std::size_t i = 0; i < params.lower.size(); ++i)
        out << params.lower[i].str() << (i + 1 < params.lower.size() ? ", " : "");
      out << "; " << arg << ")\n";
    }
  }
  std::cout << out.str();
  return kExitOk;
}

// ---------------------------------------------------------------------------

std::vector<int> parse_degrees(const std::string& text) {
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo < 2 || hi < lo) throw UsageError("bad degree range '" + text + "'");
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const int n = std::stoi(item);
    if (n < 2) throw UsageError("degree must be >= 2");
    out.push_back(n);
  }
  if (out.empty()) throw UsageError("no degrees given");
  return out;
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) out.push_back(std::stod(item));
  if (out.empty()) throw UsageError("no values given");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"roots of the reduced trinomial x^N - x + t = 0"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "optional key=value config file");

  SolverConfig cfg;
  std::string format = "plain";
  app.add_option("--tol", cfg.tol, "series tail target")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--residual-tol", cfg.residual_tol, "root residual bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-terms", cfg.max_terms, "series term cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--radius-margin", cfg.radius_margin,
                 "refused fraction of the convergence radius")
      ->check(CLI::Range(0.0, 0.999))
      ->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();

  // solve
  auto* solve = app.add_subcommand("solve", "all roots for one (degree, t)");
  int degree = 2;
  double t_re = 0.0, t_im = 0.0;
  std::string method = "auto";
  bool no_fallback = false;
  solve->add_option("--degree", degree, "degree N >= 2")
      ->required()
      ->check(CLI::Range(2, 64));
  solve->add_option("--t", t_re, "Re(t)")->required();
  solve->add_option("--t-im", t_im, "Im(t)")->capture_default_str();
  solve->add_option("--method", method, "series|decomposition|closed-form|oracle|auto")
      ->check(CLI::IsMember({"series", "decomposition", "closed-form", "oracle", "auto"}))
      ->capture_default_str();
  solve->add_flag("--no-oracle-fallback", no_fallback,
                  "fail with exit 2 instead of falling back to the oracle");

  // verify
  auto* verify = app.add_subcommand("verify", "cross-check methods against the oracle");
  std::string degrees_text = "2..5";
  std::string t_text = "0.05,0.1,0.15";
  std::string verify_method;
  bool allow_skip = false;
  verify->add_option("--degrees", degrees_text, "range 'A..B' or comma list")
      ->capture_default_str();
  verify->add_option("--t-values", t_text, "comma list of real t")
      ->capture_default_str();
  verify->add_option("--method", verify_method,
                     "restrict to one method (default: all)");
  verify->add_flag("--allow-skip,--allow-oracle-only", allow_skip,
                   "report out-of-radius cases as skipped instead of failing");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "CSV stream over a t interval");
  int sweep_degree = 2;
  double t_min = 0.0, t_max = 0.2;
  int steps = 2;
  sweep->add_option("--degree", sweep_degree, "degree N >= 2")
      ->required()
      ->check(CLI::Range(2, 64));
  sweep->add_option("--t-min", t_min, "interval start")->required();
  sweep->add_option("--t-max", t_max, "interval end")->required();
  sweep->add_option("--steps", steps, "number of samples (>= 2)")->required();

  // decompose
  auto* decompose_cmd =
      app.add_subcommand("decompose", "print the residue-class pFq specs");
  int decompose_degree = 2;
  decompose_cmd->add_option("--degree", decompose_degree, "degree N in [2, 15]")
      ->required()
      ->check(CLI::Range(2, 15));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (solve->parsed())
      return cmd_solve(degree, t_re, t_im, method, format, cfg, !no_fallback);
    if (verify->parsed())
      return cmd_verify(parse_degrees(degrees_text), parse_reals(t_text),
                        verify_method, cfg, allow_skip);
    if (sweep->parsed()) return cmd_sweep(sweep_degree, t_min, t_max, steps, cfg);
    if (decompose_cmd->parsed()) return cmd_decompose(decompose_degree, format);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OutsideRadiusError& e) {
    std::cerr << "outside radius: " << e.what() << '\n';
    return kExitOutsideRadius;
  } catch (const Error& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
