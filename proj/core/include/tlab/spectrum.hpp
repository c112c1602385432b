#pragma once

// Spectra of Toeplitz operators with continuous (trigonometric-polynomial)
// symbols: sp(T_phi) is the symbol curve together with every point about
// which the curve winds a nonzero number of times.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tlab/symbol.hpp"

namespace tlab {

/// phi(e^{i theta_j}) at theta_j = 2 pi j / S; closed by joining the last
/// sample back to the first.
struct SymbolCurve {
  std::vector<Complex> samples;

  std::size_t size() const { return samples.size(); }
  double perimeter() const;
  /// Longest polyline segment.
  double max_gap() const;
  /// Distance from z to the closed polyline.
  double distance_to(Complex z) const;
};

/// Recommended minimum sample count, 64 (1 + degree span).
std::size_t min_curve_samples(const LaurentPolynomial& phi);

/// Exponents are reduced modulo S before evaluation so that every sample uses
/// an angle in [0, 2pi).
SymbolCurve sample_curve(const LaurentPolynomial& phi, std::size_t samples);

inline constexpr double kWindingIntegrality = 1e-6;

struct Winding {
  bool on_curve = false;
  int value = 0;
  double angle_sum = 0.0;  // radians
};

/// Sums the oriented angle increments of the polyline about lambda. Returns
/// on_curve when lambda is within on_curve_distance of the polyline (default:
/// the longest segment) or when the sum misses a multiple of 2pi by more than
/// kWindingIntegrality * 2pi.
Winding winding_number(const SymbolCurve& curve, Complex lambda,
                       std::optional<double> on_curve_distance = std::nullopt);

struct BoundingBox {
  double re_min = 0.0;
  double re_max = 0.0;
  double im_min = 0.0;
  double im_max = 0.0;

  double width() const { return re_max - re_min; }
  double height() const { return im_max - im_min; }
  double area() const { return width() * height(); }
};

struct RasterOptions {
  double padding = 0.05;             // fraction of the larger side added on every edge
  double degenerate_padding = 1e-3;  // used when the curve is a single point
  double on_curve_cells = 0.5;       // on-curve threshold in cell diagonals
};

/// Rasterized spectrum on a G x G grid of cells over the bounding box. Cell
/// (ix, iy) is stored at iy * G + ix; ix runs along the real axis.
struct SpectrumRaster {
  BoundingBox box;
  int grid = 0;
  std::vector<int> winding;
  std::vector<std::uint8_t> on_curve;
  SymbolCurve curve;
  double area = 0.0;
  double error_budget = 0.0;

  double cell_width() const { return box.width() / grid; }
  double cell_height() const { return box.height() / grid; }
  double cell_area() const { return cell_width() * cell_height(); }
  Complex cell_center(int ix, int iy) const;
  bool in_spectrum(int ix, int iy) const {
    const auto i = static_cast<std::size_t>(iy) * static_cast<std::size_t>(grid) +
                   static_cast<std::size_t>(ix);
    return winding[i] != 0 || on_curve[i] != 0;
  }
  std::size_t spectrum_cells() const;
};

/// Throws std::invalid_argument when grid < 64 or samples is below
/// min_curve_samples(phi).
SpectrumRaster rasterize_spectrum(const LaurentPolynomial& phi, int grid, std::size_t samples,
                                  const RasterOptions& options = {});

/// Number of 8-connected components of the spectrum cells.
int connected_components(const SpectrumRaster& raster);

struct BoundsOptions {
  RasterOptions raster;
  double thm21_tolerance = 1e-9;
  double sup_tolerance = 1e-9;
  double cf_tolerance = 1e-12;
};

/// Spectral-area inequalities for one hyponormal symbol phi = f + conj(T_{conj h} f).
struct BoundsReport {
  std::string id;
  LaurentPolynomial symbol;
  bool hyponormal = false;
  double commutator_norm = 0.0;
  double area = 0.0;
  double error_budget = 0.0;
  double putnam_rhs = 0.0;  // area / pi
  bool thm21_applicable = false;  // h(0) = 0
  double lower_bound = 0.0;       // sum_{n>=1} |f_n|^2
  double corollary_rhs = 0.0;     // pi * lower_bound

  bool putnam_pass = false;
  std::optional<bool> thm21_pass;      // empty when not applicable
  std::optional<bool> corollary_pass;  // empty when not applicable

  double putnam_margin = 0.0;     // (area + budget)/pi - commutator_norm
  double thm21_margin = 0.0;      // commutator_norm - lower_bound
  double corollary_margin = 0.0;  // area + budget - corollary_rhs

  /// Any evaluated inequality fails, or the symbol is not hyponormal.
  bool violation() const;
};

/// Builds phi from (f, h) and evaluates Putnam's inequality, the commutator
/// lower bound and the area bound. Propagates build_symbol rejections.
BoundsReport verify_bounds(const AnalyticPolynomial& f, const AnalyticPolynomial& h, int grid,
                           std::size_t samples, const BoundsOptions& options = {});

/// Same evaluation for an already assembled symbol; the two bounds are only
/// checked when thm21_applicable is set.
BoundsReport assess_bounds(const LaurentPolynomial& phi, bool thm21_applicable, int grid,
                           std::size_t samples, const BoundsOptions& options = {});

}  // namespace tlab
