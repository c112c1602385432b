#include "tlab/hyponormality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "tlab/format.hpp"
#include "tlab/operators.hpp"

namespace tlab {

std::string_view to_string(HyponormalityReason reason) {
  switch (reason) {
    case HyponormalityReason::kCfContractive: return "CF_CONTRACTIVE";
    case HyponormalityReason::kCfExpansive: return "CF_EXPANSIVE";
    case HyponormalityReason::kDegreeExcess: return "DEGREE_EXCESS";
    case HyponormalityReason::kCoanalyticNonconstant: return "COANALYTIC_NONCONSTANT";
    case HyponormalityReason::kNormalConstant: return "NORMAL_CONSTANT";
  }
  return "UNKNOWN";
}

SymbolParts split_symbol(const LaurentPolynomial& phi) {
  SymbolParts parts;
  parts.f = riesz_projection(phi);
  const auto bottom = phi.bottom_index();
  if (bottom && *bottom < 0) {
    std::vector<Complex> g(static_cast<std::size_t>(-*bottom) + 1);
    for (int n = 1; n <= -*bottom; ++n) g[static_cast<std::size_t>(n)] = std::conj(phi.coefficient(-n));
    parts.g = AnalyticPolynomial(std::move(g));
  }
  return parts;
}

WitnessSolution solve_witness(const AnalyticPolynomial& f, const AnalyticPolynomial& g) {
  const int deg_f = f.degree();
  const int deg_g = g.degree();
  WitnessSolution out;
  if (deg_f <= 0 && deg_g >= 1) {
    out.status = WitnessStatus::kCoanalyticNonconstant;
    return out;
  }
  if (deg_g > deg_f) {
    out.status = WitnessStatus::kDegreeExcess;
    return out;
  }
  if (deg_f <= 0) {
    out.c = g.value_at_zero();
    return out;
  }

  // Row n = M - j determines h_j from h_0..h_{j-1}.
  const auto m = static_cast<std::size_t>(deg_f);
  const Complex lead = f.coefficient(deg_f);
  std::vector<Complex> hbar(m);
  for (std::size_t j = 0; j < m; ++j) {
    const int n = deg_f - static_cast<int>(j);
    Complex rhs = g.coefficient(n);
    for (std::size_t i = 0; i < j; ++i) rhs -= hbar[i] * f.coefficient(n + static_cast<int>(i));
    hbar[j] = rhs / lead;
  }
  Complex c = g.value_at_zero();
  for (std::size_t i = 0; i < m; ++i) c -= hbar[i] * f.coefficient(static_cast<int>(i));

  std::vector<Complex> h(m);
  std::transform(hbar.begin(), hbar.end(), h.begin(), [](Complex z) { return std::conj(z); });
  out.h = AnalyticPolynomial(std::move(h));
  out.c = c;
  return out;
}

CfCertificate caratheodory_fejer_test(const AnalyticPolynomial& h, double tolerance) {
  const auto m = h.size();
  if (m == 0 || h.is_zero()) return {true, 0.0};
  ComplexMatrix a(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k <= j; ++k) a(j, k) = h.coefficient(static_cast<int>(j - k));
  }
  const double norm = operator_norm(a);
  return {norm <= 1.0 + tolerance, norm};
}

HyponormalityVerdict check_hyponormal(const LaurentPolynomial& phi, double tolerance) {
  const auto parts = split_symbol(phi);
  const auto witness = solve_witness(parts.f, parts.g);
  HyponormalityVerdict v;
  switch (witness.status) {
    case WitnessStatus::kCoanalyticNonconstant:
      v.reason = HyponormalityReason::kCoanalyticNonconstant;
      v.cf_norm = std::numeric_limits<double>::infinity();
      return v;
    case WitnessStatus::kDegreeExcess:
      v.reason = HyponormalityReason::kDegreeExcess;
      v.cf_norm = std::numeric_limits<double>::infinity();
      return v;
    case WitnessStatus::kSolved:
      break;
  }
  v.witness_h = witness.h;
  v.constant_c = witness.c;
  if (parts.f.degree() <= 0) {
    v.is_hyponormal = true;
    v.reason = HyponormalityReason::kNormalConstant;
    return v;
  }
  const auto cert = caratheodory_fejer_test(witness.h, tolerance);
  v.cf_norm = cert.norm;
  v.is_hyponormal = cert.contractive;
  v.reason = cert.contractive ? HyponormalityReason::kCfContractive
                              : HyponormalityReason::kCfExpansive;
  return v;
}

std::string to_key_value(const HyponormalityVerdict& v) {
  std::ostringstream out;
  out << "is_hyponormal=" << (v.is_hyponormal ? "true" : "false") << '\n';
  out << "witness_h=";
  const auto coeffs = v.witness_h.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    out << (i ? " " : "") << format_complex(coeffs[i]);
  }
  out << '\n';
  out << "constant_c=" << format_complex(v.constant_c) << '\n';
  out << "cf_norm=" << format_double(v.cf_norm) << '\n';
  out << "reason=" << to_string(v.reason) << '\n';
  return out.str();
}

namespace {

LaurentPolynomial assemble(const AnalyticPolynomial& f, const AnalyticPolynomial& h,
                           BuildDiagnostics* diagnostics) {
  const auto g = toeplitz_compress(f, h);
  if (diagnostics) {
    diagnostics->h_vanishes_at_origin = h.value_at_zero() == Complex{};
    if (!diagnostics->h_vanishes_at_origin) {
      diagnostics->warning =
          "h(0) != 0: the commutator lower bound and the area bound do not apply; "
          "hyponormality still holds";
    }
  }
  return LaurentPolynomial(f) + conjugate_on_circle(g);
}

}  // namespace

LaurentPolynomial build_symbol(const AnalyticPolynomial& f, const AnalyticPolynomial& h,
                               BuildDiagnostics* diagnostics, double sup_tolerance) {
  const auto samples = std::max(kDefaultSupNormSamples,
                                static_cast<std::size_t>(4 * (h.degree() + 1)));
  const double sup = sup_norm_estimate(h, samples).value;
  if (sup > 1.0 + sup_tolerance) {
    throw std::invalid_argument("build_symbol: sup norm estimate of h is " + format_double(sup) +
                                " > 1");
  }
  if (diagnostics) diagnostics->sup_norm = sup;
  return assemble(f, h, diagnostics);
}

LaurentPolynomial build_symbol(const AnalyticPolynomial& f, const BlaschkeProduct& b,
                               BuildDiagnostics* diagnostics) {
  const auto h = blaschke_to_polynomial(b, std::max(0, f.degree()));
  if (diagnostics) diagnostics->sup_norm = 1.0;
  return assemble(f, h, diagnostics);
}

}  // namespace tlab
