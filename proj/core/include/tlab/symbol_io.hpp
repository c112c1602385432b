#pragma once

// Symbol text format: UTF-8 lines, '#' starts a comment, each data line is
// "n re im" (integer index and two decimal floats separated by single
// spaces). Indices may appear in any order; a repeated index is an error.

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "tlab/symbol.hpp"

namespace tlab {

class SymbolParseError : public std::runtime_error {
 public:
  SymbolParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

LaurentPolynomial parse_symbol_text(std::istream& in);
LaurentPolynomial parse_symbol_text(const std::string& text);

/// Writes every stored term, ascending by index, with 17 significant digits.
void write_symbol_text(std::ostream& out, const LaurentPolynomial& phi);
std::string symbol_to_text(const LaurentPolynomial& phi);

}  // namespace tlab
