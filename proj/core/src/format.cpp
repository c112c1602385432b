#include "tlab/format.hpp"

#include <charconv>
#include <stdexcept>

namespace tlab {

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // no "-0"
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  if (res.ec != std::errc{}) throw std::runtime_error("format_double: to_chars failed");
  return std::string(buf, res.ptr);
}

std::string format_complex(std::complex<double> value) {
  return "(" + format_double(value.real()) + "," + format_double(value.imag()) + ")";
}

}  // namespace tlab
