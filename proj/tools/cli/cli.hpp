#pragma once

// Front end for the toeplitz-lab command line tool.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tlab/spectrum.hpp"
#include "tlab/symbol.hpp"

namespace tlab::cli {

enum class Command { kAnalyze, kCheckHyponormal, kCommutatorNorm, kSpectrum, kVerifyBounds, kSweep };

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitViolation = 3,
  kExitIndeterminate = 4,
};

struct Tolerances {
  double cf = 1e-12;        // Caratheodory-Fejer contractivity slack
  double thm21 = 1e-9;      // commutator lower-bound slack
  double sup_norm = 1e-9;   // accepted excess of the sampled sup norm over 1
  double boundary = 1e-9;   // |cf_norm - 1| below this is indeterminate
  double padding = 0.05;    // raster bounding-box padding
  double on_curve = 0.5;    // on-curve threshold in cell diagonals
};

/// Applies "NAME=VALUE"; returns false for an unknown name or bad value.
bool apply_tolerance(Tolerances& tol, const std::string& assignment);

struct RunConfig {
  Command command = Command::kAnalyze;
  std::vector<std::filesystem::path> inputs;
  int grid = 1024;
  std::size_t samples = 8192;
  int trials = 200;
  std::uint64_t seed = 42;
  int degree_cap = 6;
  std::optional<std::filesystem::path> csv_path;
  std::optional<std::filesystem::path> svg_path;
  Tolerances tol;
  bool inject_violation = false;  // test hook: appends a non-hyponormal sample to a sweep
};

/// Reads a symbol file. Throws SymbolParseError (message prefixed with the
/// path) or std::runtime_error when the file cannot be read.
LaurentPolynomial parse_symbol_file(const std::filesystem::path& path);

/// The sweep generator: std::mt19937_64 seeded with `seed`. Doubles are
/// (x >> 11) * 2^-53 for successive 64-bit outputs x; integers in [lo, hi]
/// are lo + x mod (hi - lo + 1).
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : engine_(seed) {}
  double uniform();                    // [0, 1)
  int integer(int lo, int hi);         // [lo, hi]
  Complex unit_square();               // uniform on [-1,1] x [-1,1]
  Complex disk(double radius);         // uniform on the open disk

 private:
  std::mt19937_64 engine_;
};

inline constexpr double kFamilySupTarget = 1.0 - 1e-4;

/// Seeded (f, h) pairs meeting the commutator lower-bound hypotheses: every h
/// has h(0) = 0 and sampled sup norm <= 1. Trial i uses h = 0, z^k, the
/// Taylor polynomial of z * b_a for a random disk automorphism b_a, or a
/// rescaled random polynomial without constant term, cycling with i mod 4.
std::vector<std::pair<AnalyticPolynomial, AnalyticPolynomial>> random_test_family(
    std::uint64_t seed, int trials, int degree_cap);

/// Random symbol with negative and positive degrees drawn from [0, degree_cap]
/// and coefficients uniform on [-1,1]^2.
LaurentPolynomial random_symbol(TestRng& rng, int degree_cap);

BoundsOptions bounds_options(const Tolerances& tol);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs; usage errors exit with kExitUsage.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tlab::cli
