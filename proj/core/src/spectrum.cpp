#include "tlab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace tlab {
namespace {

double segment_distance(Complex z, Complex a, Complex b) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(z - a);
  const double t = std::clamp(((z - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(z - (a + t * d));
}

}  // namespace

double SymbolCurve::perimeter() const {
  double p = 0.0;
  for (std::size_t j = 0; j < samples.size(); ++j) {
    p += std::abs(samples[(j + 1) % samples.size()] - samples[j]);
  }
  return p;
}

double SymbolCurve::max_gap() const {
  double g = 0.0;
  for (std::size_t j = 0; j < samples.size(); ++j) {
    g = std::max(g, std::abs(samples[(j + 1) % samples.size()] - samples[j]));
  }
  return g;
}

double SymbolCurve::distance_to(Complex z) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < samples.size(); ++j) {
    best = std::min(best, segment_distance(z, samples[j], samples[(j + 1) % samples.size()]));
  }
  return best;
}

// Span counts both sides of zero: z^{-2} + z^3 has span 5.
std::size_t min_curve_samples(const LaurentPolynomial& phi) {
  const int top = std::max(0, phi.top_index().value_or(0));
  const int bottom = std::min(0, phi.bottom_index().value_or(0));
  return 64 * (1 + static_cast<std::size_t>(top - bottom));
}

SymbolCurve sample_curve(const LaurentPolynomial& phi, std::size_t samples) {
  if (samples == 0) throw std::invalid_argument("sample_curve: need at least one sample");
  const auto s = static_cast<long long>(samples);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
  SymbolCurve curve;
  curve.samples.resize(samples);
  for (long long j = 0; j < s; ++j) {
    Complex acc{};
    for (const auto& [n, c] : phi.terms()) {
      if (c == Complex{}) continue;
      long long k = (static_cast<long long>(n) * j) % s;
      if (k < 0) k += s;
      acc += c * std::polar(1.0, step * static_cast<double>(k));
    }
    curve.samples[static_cast<std::size_t>(j)] = acc;
  }
  return curve;
}

Winding winding_number(const SymbolCurve& curve, Complex lambda,
                       std::optional<double> on_curve_distance) {
  Winding w;
  const auto& pts = curve.samples;
  if (pts.empty()) return w;
  const double threshold = on_curve_distance.value_or(curve.max_gap());
  if (curve.distance_to(lambda) <= threshold) {
    w.on_curve = true;
    return w;
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const Complex a = pts[j] - lambda;
    const Complex b = pts[(j + 1) % pts.size()] - lambda;
    const Complex r = std::conj(a) * b;
    sum += std::atan2(r.imag(), r.real());
  }
  w.angle_sum = sum;
  const double turns = sum / (2.0 * std::numbers::pi);
  const double nearest = std::round(turns);
  if (std::abs(turns - nearest) > kWindingIntegrality) {
    w.on_curve = true;
    return w;
  }
  w.value = static_cast<int>(nearest);
  return w;
}

Complex SpectrumRaster::cell_center(int ix, int iy) const {
  return {box.re_min + (ix + 0.5) * cell_width(), box.im_min + (iy + 0.5) * cell_height()};
}

std::size_t SpectrumRaster::spectrum_cells() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < winding.size(); ++i) count += (winding[i] != 0 || on_curve[i] != 0);
  return count;
}

SpectrumRaster rasterize_spectrum(const LaurentPolynomial& phi, int grid, std::size_t samples,
                                  const RasterOptions& options) {
  if (grid < 64) throw std::invalid_argument("rasterize_spectrum: grid must be at least 64");
  if (samples < min_curve_samples(phi)) {
    throw std::invalid_argument("rasterize_spectrum: need at least " +
                                std::to_string(min_curve_samples(phi)) + " curve samples");
  }

  SpectrumRaster r;
  r.grid = grid;
  r.curve = sample_curve(phi, samples);
  const auto& pts = r.curve.samples;

  double re_lo = pts[0].real(), re_hi = re_lo, im_lo = pts[0].imag(), im_hi = im_lo;
  for (const auto& p : pts) {
    re_lo = std::min(re_lo, p.real());
    re_hi = std::max(re_hi, p.real());
    im_lo = std::min(im_lo, p.imag());
    im_hi = std::max(im_hi, p.imag());
  }
  const double larger = std::max(re_hi - re_lo, im_hi - im_lo);
  const double pad = larger > 0.0 ? options.padding * larger : options.degenerate_padding;
  r.box = {re_lo - pad, re_hi + pad, im_lo - pad, im_hi + pad};

  const auto g = static_cast<std::size_t>(grid);
  r.winding.assign(g * g, 0);
  r.on_curve.assign(g * g, 0);
  const double dx = r.cell_width();
  const double dy = r.cell_height();
  const std::size_t s = pts.size();

  // Signed crossings of the rightward ray from each cell center: an upward
  // crossing to the right of the point contributes +1.
  std::vector<std::pair<double, int>> crossings;
  for (std::size_t iy = 0; iy < g; ++iy) {
    const double y = r.box.im_min + (static_cast<double>(iy) + 0.5) * dy;
    crossings.clear();
    for (std::size_t j = 0; j < s; ++j) {
      const Complex a = pts[j];
      const Complex b = pts[(j + 1) % s];
      const bool a_below = a.imag() <= y;
      const bool b_below = b.imag() <= y;
      if (a_below == b_below) continue;
      const double t = (y - a.imag()) / (b.imag() - a.imag());
      crossings.emplace_back(a.real() + t * (b.real() - a.real()), a_below ? 1 : -1);
    }
    std::sort(crossings.begin(), crossings.end());
    int right = 0;
    for (const auto& c : crossings) right += c.second;
    std::size_t next = 0;
    for (std::size_t ix = 0; ix < g; ++ix) {
      const double x = r.box.re_min + (static_cast<double>(ix) + 0.5) * dx;
      while (next < crossings.size() && crossings[next].first <= x) right -= crossings[next++].second;
      r.winding[iy * g + ix] = right;
    }
  }

  // Cells whose center lies within the threshold of some segment.
  const double threshold = options.on_curve_cells * std::hypot(dx, dy) * (1.0 + 1e-12);
  auto clamp_index = [&](double v) {
    return static_cast<long long>(std::clamp(v, -1.0, static_cast<double>(grid)));
  };
  for (std::size_t j = 0; j < s; ++j) {
    const Complex a = pts[j];
    const Complex b = pts[(j + 1) % s];
    const auto ix_lo = std::max(0LL, clamp_index(std::ceil((std::min(a.real(), b.real()) - threshold - r.box.re_min) / dx - 0.5)));
    const auto ix_hi = std::min<long long>(grid - 1, clamp_index(std::floor((std::max(a.real(), b.real()) + threshold - r.box.re_min) / dx - 0.5)));
    const auto iy_lo = std::max(0LL, clamp_index(std::ceil((std::min(a.imag(), b.imag()) - threshold - r.box.im_min) / dy - 0.5)));
    const auto iy_hi = std::min<long long>(grid - 1, clamp_index(std::floor((std::max(a.imag(), b.imag()) + threshold - r.box.im_min) / dy - 0.5)));
    for (auto iy = iy_lo; iy <= iy_hi; ++iy) {
      for (auto ix = ix_lo; ix <= ix_hi; ++ix) {
        const auto cell = static_cast<std::size_t>(iy) * g + static_cast<std::size_t>(ix);
        if (r.on_curve[cell]) continue;
        if (segment_distance(r.cell_center(static_cast<int>(ix), static_cast<int>(iy)), a, b) <= threshold) {
          r.on_curve[cell] = 1;
        }
      }
    }
  }
  // A sample sitting on a cell corner can miss every center; its own cell still counts.
  for (const auto& p : pts) {
    const auto ix = std::min<long long>(grid - 1, std::max(0LL, static_cast<long long>((p.real() - r.box.re_min) / dx)));
    const auto iy = std::min<long long>(grid - 1, std::max(0LL, static_cast<long long>((p.imag() - r.box.im_min) / dy)));
    r.on_curve[static_cast<std::size_t>(iy) * g + static_cast<std::size_t>(ix)] = 1;
  }

  std::size_t in = 0, boundary = 0;
  for (std::size_t i = 0; i < g * g; ++i) {
    boundary += r.on_curve[i];
    in += (r.winding[i] != 0 || r.on_curve[i] != 0);
  }
  // Chord-to-arc deviation is bounded through the discrete second difference.
  double bend = 0.0;
  for (std::size_t j = 0; j < s; ++j) {
    bend = std::max(bend, std::abs(pts[(j + 1) % s] - 2.0 * pts[j] + pts[(j + s - 1) % s]));
  }
  r.area = r.cell_area() * static_cast<double>(in);
  r.error_budget = r.cell_area() * static_cast<double>(boundary) + r.curve.perimeter() * bend / 4.0;
  return r;
}

int connected_components(const SpectrumRaster& raster) {
  const int g = raster.grid;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(g) * static_cast<std::size_t>(g), 0);
  std::vector<std::pair<int, int>> stack;
  int components = 0;
  for (int iy = 0; iy < g; ++iy) {
    for (int ix = 0; ix < g; ++ix) {
      const auto start = static_cast<std::size_t>(iy) * g + ix;
      if (seen[start] || !raster.in_spectrum(ix, iy)) continue;
      ++components;
      seen[start] = 1;
      stack.emplace_back(ix, iy);
      while (!stack.empty()) {
        const auto [cx, cy] = stack.back();
        stack.pop_back();
        for (int oy = -1; oy <= 1; ++oy) {
          for (int ox = -1; ox <= 1; ++ox) {
            const int nx = cx + ox, ny = cy + oy;
            if (nx < 0 || ny < 0 || nx >= g || ny >= g) continue;
            const auto idx = static_cast<std::size_t>(ny) * g + nx;
            if (seen[idx] || !raster.in_spectrum(nx, ny)) continue;
            seen[idx] = 1;
            stack.emplace_back(nx, ny);
          }
        }
      }
    }
  }
  return components;
}

}  // namespace tlab
