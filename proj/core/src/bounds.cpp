#include <cmath>
#include <numbers>

#include "tlab/hyponormality.hpp"
#include "tlab/operators.hpp"
#include "tlab/spectrum.hpp"

namespace tlab {

bool BoundsReport::violation() const {
  return !hyponormal || !putnam_pass || thm21_pass == false || corollary_pass == false;
}

BoundsReport assess_bounds(const LaurentPolynomial& phi, bool thm21_applicable, int grid,
                           std::size_t samples, const BoundsOptions& options) {
  constexpr double pi = std::numbers::pi;
  BoundsReport r;
  r.symbol = phi;
  const auto parts = split_symbol(phi);
  r.hyponormal = check_hyponormal(phi, options.cf_tolerance).is_hyponormal;
  r.commutator_norm = commutator_norm(parts.f, parts.g);

  const auto raster = rasterize_spectrum(phi, grid, samples, options.raster);
  r.area = raster.area;
  r.error_budget = raster.error_budget;
  r.putnam_rhs = r.area / pi;
  r.putnam_margin = (r.area + r.error_budget) / pi - r.commutator_norm;
  r.putnam_pass = r.putnam_margin >= 0.0;

  const double norm = analytic_part_norm(phi);
  r.lower_bound = norm * norm;
  r.corollary_rhs = pi * r.lower_bound;
  r.thm21_margin = r.commutator_norm - r.lower_bound;
  r.corollary_margin = r.area + r.error_budget - r.corollary_rhs;
  r.thm21_applicable = thm21_applicable;
  if (thm21_applicable) {
    r.thm21_pass = r.thm21_margin >= -options.thm21_tolerance;
    r.corollary_pass = r.corollary_margin >= 0.0;
  }
  return r;
}

BoundsReport verify_bounds(const AnalyticPolynomial& f, const AnalyticPolynomial& h, int grid,
                           std::size_t samples, const BoundsOptions& options) {
  BuildDiagnostics diag;
  const auto phi = build_symbol(f, h, &diag, options.sup_tolerance);
  return assess_bounds(phi, diag.h_vanishes_at_origin, grid, samples, options);
}

}  // namespace tlab
