#include "tlab/export.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "tlab/format.hpp"

namespace tlab {
namespace {

std::string flag(bool b) { return b ? "true" : "false"; }
std::string flag(const std::optional<bool>& b) { return b ? flag(*b) : "na"; }

}  // namespace

void write_bounds_csv_row(std::ostream& out, const BoundsReport& r) {
  out << r.id << ',' << format_double(r.commutator_norm) << ',' << format_double(r.area) << ','
      << format_double(r.putnam_rhs) << ',' << flag(r.thm21_applicable) << ','
      << format_double(r.lower_bound) << ',' << format_double(r.corollary_rhs) << ','
      << flag(r.putnam_pass) << ',' << flag(r.thm21_pass) << ',' << flag(r.corollary_pass) << ','
      << format_double(r.error_budget) << '\n';
}

void write_bounds_csv(std::ostream& out, std::span<const BoundsReport> reports) {
  out << kBoundsCsvHeader << '\n';
  for (const auto& r : reports) write_bounds_csv_row(out, r);
}

void write_raster_csv(std::ostream& out, const SpectrumRaster& raster) {
  out << "re,im,winding,on_curve\n";
  for (int iy = 0; iy < raster.grid; ++iy) {
    for (int ix = 0; ix < raster.grid; ++ix) {
      const auto c = raster.cell_center(ix, iy);
      const auto i = static_cast<std::size_t>(iy) * raster.grid + ix;
      out << format_double(c.real()) << ',' << format_double(c.imag()) << ',' << raster.winding[i]
          << ',' << static_cast<int>(raster.on_curve[i]) << '\n';
    }
  }
}

void write_raster_svg(std::ostream& out, const SpectrumRaster& raster) {
  // Plot coordinates: 800 px on the larger side, y axis flipped.
  const auto& box = raster.box;
  const double scale = 800.0 / std::max(box.width(), box.height());
  const double w = box.width() * scale;
  const double h = box.height() * scale;
  const double legend = 60.0;
  auto px = [&](double re) { return (re - box.re_min) * scale; };
  auto py = [&](double im) { return (box.im_max - im) * scale; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_double(w) << "\" height=\""
      << format_double(h + legend) << "\" viewBox=\"0 0 " << format_double(w) << ' '
      << format_double(h + legend) << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << format_double(w) << "\" height=\"" << format_double(h)
      << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // Horizontal runs of spectrum cells, one rect per run.
  const double cw = raster.cell_width() * scale;
  const double ch = raster.cell_height() * scale;
  out << "<g fill=\"#9ecae1\" stroke=\"none\">\n";
  for (int iy = 0; iy < raster.grid; ++iy) {
    int ix = 0;
    while (ix < raster.grid) {
      if (!raster.in_spectrum(ix, iy)) {
        ++ix;
        continue;
      }
      const int start = ix;
      while (ix < raster.grid && raster.in_spectrum(ix, iy)) ++ix;
      out << "<rect x=\"" << format_double(start * cw) << "\" y=\""
          << format_double(h - (iy + 1) * ch) << "\" width=\"" << format_double((ix - start) * cw)
          << "\" height=\"" << format_double(ch) << "\"/>\n";
    }
  }
  out << "</g>\n";

  out << "<polygon fill=\"none\" stroke=\"#08306b\" stroke-width=\"1\" points=\"";
  for (std::size_t j = 0; j < raster.curve.samples.size(); ++j) {
    const auto& p = raster.curve.samples[j];
    out << (j ? " " : "") << format_double(px(p.real())) << ',' << format_double(py(p.imag()));
  }
  out << "\"/>\n";

  out << "<g font-family=\"monospace\" font-size=\"12\">\n";
  out << "<rect x=\"10\" y=\"" << format_double(h + 12) << "\" width=\"12\" height=\"12\" "
      << "fill=\"#9ecae1\"/>\n";
  out << "<text x=\"28\" y=\"" << format_double(h + 23) << "\">spectrum area "
      << format_double(raster.area) << " (budget " << format_double(raster.error_budget)
      << ")</text>\n";
  out << "<line x1=\"10\" y1=\"" << format_double(h + 42) << "\" x2=\"22\" y2=\""
      << format_double(h + 42) << "\" stroke=\"#08306b\"/>\n";
  out << "<text x=\"28\" y=\"" << format_double(h + 46) << "\">symbol curve; box re ["
      << format_double(box.re_min) << ", " << format_double(box.re_max) << "] im ["
      << format_double(box.im_min) << ", " << format_double(box.im_max) << "]</text>\n";
  out << "</g>\n</svg>\n";
}

void write_matrix_csv(std::ostream& out, const ComplexMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out << (c ? "," : "") << format_double(m(r, c).real()) << ',' << format_double(m(r, c).imag());
    }
    out << '\n';
  }
}

}  // namespace tlab
