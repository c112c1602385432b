#pragma once

// Text exports. Every number is rendered with format_double so that equal
// inputs give byte-identical files.

#include <iosfwd>
#include <span>
#include <string_view>

#include "tlab/operators.hpp"
#include "tlab/spectrum.hpp"

namespace tlab {

inline constexpr std::string_view kBoundsCsvHeader =
    "id,comm_norm,area,putnam_rhs,thm21_lhs_applicable,thm21_bound,corollary_rhs,"
    "putnam_pass,thm21_pass,corollary_pass,error_budget";

/// Header plus one row per report. Pass flags are true/false, or na when the
/// inequality does not apply.
void write_bounds_csv(std::ostream& out, std::span<const BoundsReport> reports);
void write_bounds_csv_row(std::ostream& out, const BoundsReport& report);

/// "re,im,winding,on_curve" per cell center, rows of constant im ascending.
void write_raster_csv(std::ostream& out, const SpectrumRaster& raster);

/// Static plot: filled spectrum cells, the symbol curve, the bounding box and
/// a legend.
void write_raster_svg(std::ostream& out, const SpectrumRaster& raster);

/// Row-major "re,im" pairs, one matrix row per line.
void write_matrix_csv(std::ostream& out, const ComplexMatrix& m);

}  // namespace tlab
