#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tlab/export.hpp"
#include "tlab/format.hpp"
#include "tlab/hyponormality.hpp"
#include "tlab/operators.hpp"
#include "tlab/symbol_io.hpp"

namespace tlab::cli {
namespace {

const std::map<std::string, Command>& command_names() {
  static const std::map<std::string, Command> names = {
      {"analyze", Command::kAnalyze},
      {"check-hyponormal", Command::kCheckHyponormal},
      {"commutator-norm", Command::kCommutatorNorm},
      {"spectrum", Command::kSpectrum},
      {"verify-bounds", Command::kVerifyBounds},
      {"sweep", Command::kSweep},
  };
  return names;
}

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string describe(const AnalyticPolynomial& p) {
  std::string s;
  const auto c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + format_complex(c[i]);
  return s.empty() ? "0" : s;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

AnalyticPolynomial parse_analytic_file(const std::filesystem::path& path) {
  const auto phi = parse_symbol_file(path);
  auto p = phi.to_analytic();
  if (!p) {
    throw SymbolParseError(0, path.string() + ": expected nonnegative indices only");
  }
  return *p;
}

void require_inputs(const RunConfig& config, std::size_t n) {
  if (config.inputs.size() != n) {
    throw UsageError("expected " + std::to_string(n) + " input file(s), got " +
                     std::to_string(config.inputs.size()));
  }
}

void print_report(std::ostream& out, const BoundsReport& r) {
  auto pass = [](const std::optional<bool>& b) {
    return b ? std::string(*b ? "pass" : "FAIL") : std::string("not applicable");
  };
  out << "commutator_norm=" << format_double(r.commutator_norm) << '\n'
      << "area=" << format_double(r.area) << '\n'
      << "error_budget=" << format_double(r.error_budget) << '\n'
      << "putnam_rhs=" << format_double(r.putnam_rhs) << '\n'
      << "lower_bound=" << format_double(r.lower_bound) << '\n'
      << "corollary_rhs=" << format_double(r.corollary_rhs) << '\n'
      << "thm21_lhs_applicable=" << (r.thm21_applicable ? "true" : "false") << '\n'
      << "putnam: " << (r.hyponormal ? (r.putnam_pass ? "pass" : "FAIL") : "not applicable")
      << " (margin " << format_double(r.putnam_margin) << ")\n"
      << "commutator lower bound: " << pass(r.thm21_pass) << " (margin "
      << format_double(r.thm21_margin) << ")\n"
      << "area lower bound: " << pass(r.corollary_pass) << " (margin "
      << format_double(r.corollary_margin) << ")\n";
  if (!r.thm21_applicable && r.corollary_margin < 0.0) {
    out << "note: area + budget is below pi ||P(phi) - phi(0)||^2; h(0) != 0 so no bound is "
           "claimed\n";
  }
}

int run_analyze(const RunConfig& config, std::ostream& out) {
  require_inputs(config, 1);
  const auto phi = parse_symbol_file(config.inputs[0]);
  const auto parts = split_symbol(phi);
  const auto verdict = check_hyponormal(phi, config.tol.cf);
  out << "f=" << describe(parts.f) << '\n' << "g=" << describe(parts.g) << '\n';
  out << to_key_value(verdict);

  const bool applicable = verdict.is_hyponormal && verdict.witness_h.value_at_zero() == Complex{};
  auto report = assess_bounds(phi, applicable, config.grid, config.samples,
                              bounds_options(config.tol));
  report.id = config.inputs[0].filename().string();
  print_report(out, report);
  if (config.csv_path) {
    auto csv = open_output(*config.csv_path);
    write_bounds_csv(csv, std::span(&report, 1));
  }
  if (std::isfinite(verdict.cf_norm) && std::abs(verdict.cf_norm - 1.0) < config.tol.boundary) {
    return kExitIndeterminate;
  }
  if (report.hyponormal && report.violation()) return kExitViolation;
  return kExitOk;
}

int run_check(const RunConfig& config, std::ostream& out) {
  require_inputs(config, 1);
  const auto verdict = check_hyponormal(parse_symbol_file(config.inputs[0]), config.tol.cf);
  out << to_key_value(verdict);
  if (std::isfinite(verdict.cf_norm) && std::abs(verdict.cf_norm - 1.0) < config.tol.boundary) {
    return kExitIndeterminate;
  }
  return kExitOk;
}

int run_commutator(const RunConfig& config, std::ostream& out) {
  require_inputs(config, 1);
  const auto parts = split_symbol(parse_symbol_file(config.inputs[0]));
  const auto c = self_commutator(parts.f, parts.g);
  const auto eig = hermitian_eigenvalues(c.matrix);
  out << "support_dim=" << c.support_dim << '\n'
      << "commutator_norm=" << format_double(std::max(std::abs(eig.front()), std::abs(eig.back())))
      << '\n'
      << "min_eigenvalue=" << format_double(eig.front()) << '\n'
      << "max_eigenvalue=" << format_double(eig.back()) << '\n';
  if (config.csv_path) {
    auto csv = open_output(*config.csv_path);
    write_matrix_csv(csv, c.matrix.matrix());
  }
  return kExitOk;
}

int run_spectrum(const RunConfig& config, std::ostream& out) {
  require_inputs(config, 1);
  const auto phi = parse_symbol_file(config.inputs[0]);
  const auto raster =
      rasterize_spectrum(phi, config.grid, config.samples, bounds_options(config.tol).raster);
  out << "area=" << format_double(raster.area) << '\n'
      << "error_budget=" << format_double(raster.error_budget) << '\n'
      << "components=" << connected_components(raster) << '\n';
  if (config.csv_path) {
    auto csv = open_output(*config.csv_path);
    write_raster_csv(csv, raster);
  }
  if (config.svg_path) {
    auto svg = open_output(*config.svg_path);
    write_raster_svg(svg, raster);
  }
  return kExitOk;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  require_inputs(config, 2);
  const auto f = parse_analytic_file(config.inputs[0]);
  const auto h = parse_analytic_file(config.inputs[1]);
  auto report = verify_bounds(f, h, config.grid, config.samples, bounds_options(config.tol));
  report.id = config.inputs[0].filename().string();
  print_report(out, report);
  if (config.csv_path) {
    auto csv = open_output(*config.csv_path);
    write_bounds_csv(csv, std::span(&report, 1));
  }
  return report.violation() ? kExitViolation : kExitOk;
}

int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!config.inputs.empty()) throw UsageError("sweep takes no input files");
  if (config.trials < 1) throw UsageError("--trials must be at least 1");
  const auto options = bounds_options(config.tol);
  const auto family = random_test_family(config.seed, config.trials, config.degree_cap);

  std::vector<BoundsReport> reports;
  reports.reserve(family.size() + 1);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& [f, h] = family[i];
    const auto phi = build_symbol(f, h, nullptr, options.sup_tolerance);
    const std::size_t samples = std::max(config.samples, min_curve_samples(phi));
    auto r = verify_bounds(f, h, config.grid, samples, options);
    r.id = std::to_string(i);
    reports.push_back(std::move(r));
  }
  if (config.inject_violation) {
    // z^2 + 10 conj(z): built from h = 10z, far outside the unit ball.
    const AnalyticPolynomial f{0.0, 0.0, 1.0};
    const auto g = toeplitz_compress(f, AnalyticPolynomial{0.0, 10.0});
    auto r = assess_bounds(LaurentPolynomial(f) + conjugate_on_circle(g), true, config.grid,
                           config.samples, options);
    r.id = "injected";
    reports.push_back(std::move(r));
  }

  std::ostringstream csv;
  write_bounds_csv(csv, reports);
  std::ostream& summary = config.csv_path ? out : err;
  if (config.csv_path) {
    auto file = open_output(*config.csv_path);
    file << csv.str();
  } else {
    out << csv.str();
  }

  std::size_t violations = 0;
  double min_ratio = std::numeric_limits<double>::infinity();
  for (const auto& r : reports) {
    if (r.violation()) {
      ++violations;
      summary << "violation: id=" << r.id << " hyponormal=" << (r.hyponormal ? "true" : "false")
              << " putnam_margin=" << format_double(r.putnam_margin)
              << " thm21_margin=" << format_double(r.thm21_margin)
              << " corollary_margin=" << format_double(r.corollary_margin) << '\n';
    }
    if (r.thm21_applicable && r.lower_bound > 0.0) {
      min_ratio = std::min(min_ratio, r.commutator_norm / r.lower_bound);
    }
  }
  summary << "trials=" << reports.size() << " violations=" << violations
          << " min_norm_to_bound_ratio=" << format_double(min_ratio) << '\n';
  return violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

bool apply_tolerance(Tolerances& tol, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) return false;
  const std::string name = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size() ||
      !(value >= 0.0) || !std::isfinite(value)) {
    return false;
  }
  const std::map<std::string, double Tolerances::*> fields = {
      {"cf", &Tolerances::cf},           {"thm21", &Tolerances::thm21},
      {"supnorm", &Tolerances::sup_norm}, {"boundary", &Tolerances::boundary},
      {"pad", &Tolerances::padding},      {"oncurve", &Tolerances::on_curve},
  };
  const auto it = fields.find(name);
  if (it == fields.end()) return false;
  tol.*(it->second) = value;
  return true;
}

LaurentPolynomial parse_symbol_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return parse_symbol_text(in);
  } catch (const SymbolParseError& e) {
    throw SymbolParseError(e.line(), path.string() + ": " + e.what());
  }
}

double TestRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

int TestRng::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

Complex TestRng::unit_square() {
  const double re = 2.0 * uniform() - 1.0;
  const double im = 2.0 * uniform() - 1.0;
  return {re, im};
}

Complex TestRng::disk(double radius) {
  const double r = radius * std::sqrt(uniform());
  const double t = 2.0 * std::numbers::pi * uniform();
  return std::polar(r, t);
}

namespace {

AnalyticPolynomial rescale_into_ball(AnalyticPolynomial h, bool always) {
  const double est = sup_norm_estimate(h).value;
  if (est > 0.0 && (always || est > kFamilySupTarget)) h *= kFamilySupTarget / est;
  return h;
}

}  // namespace

std::vector<std::pair<AnalyticPolynomial, AnalyticPolynomial>> random_test_family(
    std::uint64_t seed, int trials, int degree_cap) {
  const int cap = std::max(1, degree_cap);
  TestRng rng(seed);
  std::vector<std::pair<AnalyticPolynomial, AnalyticPolynomial>> family;
  family.reserve(static_cast<std::size_t>(std::max(0, trials)));
  for (int i = 0; i < trials; ++i) {
    const int deg_f = rng.integer(1, cap);
    std::vector<Complex> fc(static_cast<std::size_t>(deg_f) + 1);
    for (auto& c : fc) c = rng.unit_square();
    AnalyticPolynomial f(std::move(fc));

    AnalyticPolynomial h;
    switch (i % 4) {
      case 0:
        break;
      case 1:
        h = AnalyticPolynomial::monomial(rng.integer(1, cap));
        break;
      case 2: {
        const BlaschkeProduct b({Complex{}, rng.disk(0.9)});
        h = rescale_into_ball(blaschke_to_polynomial(b, cap), false);
        break;
      }
      default: {
        std::vector<Complex> hc(static_cast<std::size_t>(rng.integer(1, cap)) + 1);
        for (std::size_t k = 1; k < hc.size(); ++k) hc[k] = rng.unit_square();
        h = rescale_into_ball(AnalyticPolynomial(std::move(hc)), true);
        break;
      }
    }
    family.emplace_back(std::move(f), std::move(h));
  }
  return family;
}

LaurentPolynomial random_symbol(TestRng& rng, int degree_cap) {
  const int neg = rng.integer(0, degree_cap);
  const int pos = rng.integer(0, degree_cap);
  LaurentPolynomial::Terms terms;
  for (int n = -neg; n <= pos; ++n) terms[n] = rng.unit_square();
  return LaurentPolynomial(std::move(terms));
}

BoundsOptions bounds_options(const Tolerances& tol) {
  BoundsOptions o;
  o.raster.padding = tol.padding;
  o.raster.on_curve_cells = tol.on_curve;
  o.thm21_tolerance = tol.thm21;
  o.sup_tolerance = tol.sup_norm;
  o.cf_tolerance = tol.cf;
  return o;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::kAnalyze: return run_analyze(config, out);
      case Command::kCheckHyponormal: return run_check(config, out);
      case Command::kCommutatorNorm: return run_commutator(config, out);
      case Command::kSpectrum: return run_spectrum(config, out);
      case Command::kVerifyBounds: return run_verify(config, out);
      case Command::kSweep: return run_sweep(config, out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SymbolParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::logic_error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitUsage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toeplitz operator laboratory: hyponormality, self-commutators, spectral areas",
               "toeplitz-lab"};
  RunConfig config;
  std::string command;
  std::vector<std::string> tolerances;
  std::vector<std::string> inputs;
  std::string csv, svg;

  std::vector<std::string> names;
  for (const auto& [name, cmd] : command_names()) names.push_back(name);
  app.add_option("command", command, "analyze | check-hyponormal | commutator-norm | spectrum | "
                                      "verify-bounds | sweep")
      ->required()
      ->check(CLI::IsMember(names));
  app.add_option("inputs", inputs, "Symbol files (verify-bounds: F-FILE H-FILE)");
  app.add_option("--grid", config.grid, "Raster grid size G")->check(CLI::Range(64, 16384));
  app.add_option("--samples", config.samples, "Curve samples S")->check(CLI::PositiveNumber);
  app.add_option("--trials", config.trials, "Sweep trials")->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "64-bit sweep seed");
  app.add_option("--deg", config.degree_cap, "Sweep degree cap")->check(CLI::Range(1, 64));
  app.add_option("--csv", csv, "CSV output path");
  app.add_option("--svg", svg, "SVG output path");
  app.add_option("--tol", tolerances,
                 "Tolerance override NAME=VALUE; names: cf thm21 supnorm boundary pad oncurve");
  app.add_flag("--inject-violation", config.inject_violation,
               "Test hook: add a non-hyponormal sample to the sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  config.command = command_names().at(command);
  for (const auto& in : inputs) config.inputs.emplace_back(in);
  if (!csv.empty()) config.csv_path = csv;
  if (!svg.empty()) config.svg_path = svg;
  for (const auto& t : tolerances) {
    if (!apply_tolerance(config.tol, t)) {
      err << "usage error: bad --tol '" << t << "'\n";
      return kExitUsage;
    }
  }
  return run(config, out, err);
}

}  // namespace tlab::cli
