#pragma once

// Locale-independent number rendering shared by every text output.

#include <complex>
#include <string>

namespace tlab {

/// Shortest-form 17-significant-digit rendering, lowercase exponent, '.' as
/// the decimal separator. Round-trips through std::from_chars exactly.
std::string format_double(double value);

/// "(re,im)" with both parts rendered by format_double.
std::string format_complex(std::complex<double> value);

}  // namespace tlab
