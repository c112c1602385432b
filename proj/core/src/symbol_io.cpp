#include "tlab/symbol_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "tlab/format.hpp"

namespace tlab {
namespace {

std::vector<std::string_view> split_single_spaces(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(' ', start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view token, std::size_t line, const char* what) {
  T value{};
  const auto* end = token.data() + token.size();
  const auto res = std::from_chars(token.data(), end, value);
  if (token.empty() || res.ec != std::errc{} || res.ptr != end) {
    throw SymbolParseError(line, std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

LaurentPolynomial parse_symbol_text(std::istream& in) {
  LaurentPolynomial::Terms terms;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) {
      line.remove_suffix(1);
    }
    if (line.empty()) continue;
    const auto fields = split_single_spaces(line);
    if (fields.size() != 3) {
      throw SymbolParseError(line_no, "expected 'n re im', got " + std::to_string(fields.size()) +
                                          " fields");
    }
    // from_chars rejects a leading '+', which the format does not allow either.
    const int index = parse_number<int>(fields[0], line_no, "index");
    const double re = parse_number<double>(fields[1], line_no, "real part");
    const double im = parse_number<double>(fields[2], line_no, "imaginary part");
    if (!terms.emplace(index, Complex(re, im)).second) {
      throw SymbolParseError(line_no, "duplicate index " + std::to_string(index));
    }
  }
  if (in.bad()) throw std::runtime_error("read error while parsing symbol");
  return LaurentPolynomial(std::move(terms));
}

LaurentPolynomial parse_symbol_text(const std::string& text) {
  std::istringstream in(text);
  return parse_symbol_text(in);
}

void write_symbol_text(std::ostream& out, const LaurentPolynomial& phi) {
  for (const auto& [n, c] : phi.terms()) {
    out << n << ' ' << format_double(c.real()) << ' ' << format_double(c.imag()) << '\n';
  }
}

std::string symbol_to_text(const LaurentPolynomial& phi) {
  std::ostringstream out;
  write_symbol_text(out, phi);
  return out.str();
}

}  // namespace tlab
