#pragma once

// Trigonometric-polynomial symbols on the unit circle.
//
// A symbol is a finite two-sided Fourier series  phi(e^{it}) = sum_n c_n e^{int}.
// Its analytic part (n >= 0) lives in H^2 and is represented by
// AnalyticPolynomial; the full series by LaurentPolynomial. All norms use the
// normalized arc measure dt/2pi.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tlab {

using Complex = std::complex<double>;

/// Polynomial sum_{n=0}^{d} a_n z^n. Stored trailing zeros are kept; degree()
/// reports the largest index with a nonzero coefficient (-1 for the zero
/// polynomial).
class AnalyticPolynomial {
 public:
  AnalyticPolynomial() = default;
  explicit AnalyticPolynomial(std::vector<Complex> coefficients)
      : coeffs_(std::move(coefficients)) {}
  AnalyticPolynomial(std::initializer_list<Complex> coefficients)
      : coeffs_(coefficients) {}

  static AnalyticPolynomial monomial(int power, Complex value = 1.0);

  int degree() const;
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return degree() < 0; }

  Complex coefficient(int n) const {
    return n >= 0 && static_cast<std::size_t>(n) < coeffs_.size()
               ? coeffs_[static_cast<std::size_t>(n)]
               : Complex{};
  }
  std::span<const Complex> coefficients() const { return coeffs_; }
  Complex value_at_zero() const { return coefficient(0); }

  /// Horner evaluation at an arbitrary point of the plane.
  Complex operator()(Complex z) const;
  Complex on_circle(double theta) const;

  /// Drops stored zeros above the degree.
  AnalyticPolynomial trimmed() const;
  /// Copy keeping only coefficients 0..max_degree.
  AnalyticPolynomial truncated(int max_degree) const;

  AnalyticPolynomial& operator*=(Complex s);

  friend AnalyticPolynomial operator+(const AnalyticPolynomial& a,
                                      const AnalyticPolynomial& b);
  friend AnalyticPolynomial operator-(const AnalyticPolynomial& a,
                                      const AnalyticPolynomial& b);
  friend AnalyticPolynomial operator*(Complex s, AnalyticPolynomial p) {
    p *= s;
    return p;
  }
  /// Coefficientwise equality up to trailing zeros.
  friend bool operator==(const AnalyticPolynomial& a,
                         const AnalyticPolynomial& b);

 private:
  std::vector<Complex> coeffs_;
};

/// Finite Fourier series with coefficients indexed by n in [-N, M].
class LaurentPolynomial {
 public:
  using Terms = std::map<int, Complex>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(Terms terms) : terms_(std::move(terms)) {}
  LaurentPolynomial(std::initializer_list<std::pair<const int, Complex>> terms)
      : terms_(terms) {}
  /// Lossless embedding of an analytic polynomial.
  explicit LaurentPolynomial(const AnalyticPolynomial& p);

  static LaurentPolynomial constant(Complex c) { return LaurentPolynomial{{0, c}}; }

  Complex coefficient(int n) const;
  const Terms& terms() const { return terms_; }

  /// Largest index with a nonzero coefficient; empty for the zero symbol.
  std::optional<int> top_index() const;
  /// Smallest index with a nonzero coefficient; empty for the zero symbol.
  std::optional<int> bottom_index() const;
  /// top_index - bottom_index, or 0 for the zero symbol.
  int degree_span() const;

  bool is_analytic() const;
  /// The analytic polynomial carried by the nonnegative indices, when there
  /// are no nonzero negative-index coefficients.
  std::optional<AnalyticPolynomial> to_analytic() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    a += b;
    return a;
  }
  /// Coefficientwise equality ignoring stored zeros.
  friend bool operator==(const LaurentPolynomial& a,
                         const LaurentPolynomial& b);

 private:
  Terms terms_;
};

/// Finite Blaschke product. A zero at the origin contributes the factor z,
/// any other zero a contributes (|a|/a)(a - z)/(1 - conj(a) z).
class BlaschkeProduct {
 public:
  /// Throws std::domain_error unless every zero lies in the open unit disk.
  explicit BlaschkeProduct(std::vector<Complex> zeros);

  std::span<const Complex> zeros() const { return zeros_; }
  Complex operator()(Complex z) const;
  Complex on_circle(double theta) const;

 private:
  std::vector<Complex> zeros_;
};

/// Direct summation of sum c_n e^{in theta}.
Complex evaluate(const LaurentPolynomial& phi, double theta);

/// Squared L^2 norm via Parseval, sum |c_n|^2.
double l2_norm_squared(const LaurentPolynomial& phi);
double l2_norm_squared(const AnalyticPolynomial& p);

/// Orthogonal projection of L^2 onto H^2: keeps the indices n >= 0.
AnalyticPolynomial riesz_projection(const LaurentPolynomial& phi);

/// ||P(phi) - phi(0)||_2 = sqrt(sum_{n >= 1} |c_n|^2). phi(0) is the value of
/// the harmonic extension at the origin, c_0.
double analytic_part_norm(const LaurentPolynomial& phi);

/// The circle function conj(p), i.e. sum conj(a_n) z^{-n}.
LaurentPolynomial conjugate_on_circle(const AnalyticPolynomial& p);

/// g = T_{conj h} f, with g_n = sum_{m >= 0} conj(h_m) f_{n+m} for n >= 0.
AnalyticPolynomial toeplitz_compress(const AnalyticPolynomial& f,
                                     const AnalyticPolynomial& h);

/// k(z) = conj(h(conj z)); conjugates every coefficient.
AnalyticPolynomial conjugate_reflection(const AnalyticPolynomial& h);

/// Degree-d Taylor polynomial of B at the origin. Throws std::invalid_argument
/// for negative d.
AnalyticPolynomial blaschke_to_polynomial(const BlaschkeProduct& b, int degree);

struct SupNormEstimate {
  double value = 0.0;    // max |h(e^{i theta_j})| over the grid
  double spacing = 0.0;  // grid step 2pi/samples
};

inline constexpr std::size_t kDefaultSupNormSamples = 16384;

/// Uniform-grid lower estimate of ||h||_inf. Throws std::invalid_argument when
/// samples < 4 (deg h + 1).
SupNormEstimate sup_norm_estimate(const AnalyticPolynomial& h,
                                  std::size_t samples = kDefaultSupNormSamples);

}  // namespace tlab
