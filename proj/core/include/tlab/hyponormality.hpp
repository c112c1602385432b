#pragma once

// Hyponormality of T_phi for phi = f + conj(g) via Cowen's criterion:
// T_phi is hyponormal iff g = c + T_{conj h} f for a constant c and some h in
// the closed unit ball of H^inf. For polynomial f of degree M the first M
// Taylor coefficients of h are forced by back-substitution, and a contractive
// extension exists iff the lower-triangular Toeplitz matrix of those
// coefficients has operator norm <= 1 (Caratheodory-Fejer).

#include <string>
#include <string_view>

#include "tlab/symbol.hpp"

namespace tlab {

enum class HyponormalityReason {
  kCfContractive,
  kCfExpansive,
  kDegreeExcess,
  kCoanalyticNonconstant,
  kNormalConstant,
};

std::string_view to_string(HyponormalityReason reason);

inline constexpr double kCfTolerance = 1e-12;

struct HyponormalityVerdict {
  bool is_hyponormal = false;
  AnalyticPolynomial witness_h;  // forced coefficients h_0..h_{M-1}
  Complex constant_c{};
  double cf_norm = 0.0;  // +inf when no witness exists
  HyponormalityReason reason = HyponormalityReason::kNormalConstant;
};

struct SymbolParts {
  AnalyticPolynomial f;  // f_n = c_n, n >= 0
  AnalyticPolynomial g;  // g_n = conj(c_{-n}), n >= 1; g_0 = 0
};

SymbolParts split_symbol(const LaurentPolynomial& phi);

enum class WitnessStatus { kSolved, kDegreeExcess, kCoanalyticNonconstant };

struct WitnessSolution {
  WitnessStatus status = WitnessStatus::kSolved;
  AnalyticPolynomial h;  // deg f coefficients when solved
  Complex c{};
};

/// Solves g_n = sum_m conj(h_m) f_{n+m} for n = deg f down to 1, treating
/// g_n = 0 above deg g; c absorbs the n = 0 equation.
WitnessSolution solve_witness(const AnalyticPolynomial& f, const AnalyticPolynomial& g);

struct CfCertificate {
  bool contractive = true;
  double norm = 0.0;
};

/// Operator norm of the size(h) x size(h) lower-triangular Toeplitz matrix
/// built from the stored coefficients of h, compared with 1 + tolerance.
CfCertificate caratheodory_fejer_test(const AnalyticPolynomial& h,
                                      double tolerance = kCfTolerance);

HyponormalityVerdict check_hyponormal(const LaurentPolynomial& phi,
                                      double tolerance = kCfTolerance);

/// "key=value" lines in field declaration order.
std::string to_key_value(const HyponormalityVerdict& verdict);

struct BuildDiagnostics {
  double sup_norm = 0.0;
  bool h_vanishes_at_origin = false;
  std::string warning;  // empty unless h(0) != 0
};

inline constexpr double kSupNormTolerance = 1e-9;

/// phi = f + conj(T_{conj h} f). Throws std::invalid_argument when the
/// sampled sup norm of h exceeds 1 + sup_tolerance.
LaurentPolynomial build_symbol(const AnalyticPolynomial& f, const AnalyticPolynomial& h,
                               BuildDiagnostics* diagnostics = nullptr,
                               double sup_tolerance = kSupNormTolerance);

/// Blaschke-generated h: the inner function is unimodular, so no sampling
/// check is needed. Only the Taylor coefficients up to deg f enter g.
LaurentPolynomial build_symbol(const AnalyticPolynomial& f, const BlaschkeProduct& b,
                               BuildDiagnostics* diagnostics = nullptr);

}  // namespace tlab
