#include "tlab/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tlab {

AnalyticPolynomial AnalyticPolynomial::monomial(int power, Complex value) {
  if (power < 0) throw std::invalid_argument("monomial: negative power");
  std::vector<Complex> c(static_cast<std::size_t>(power) + 1);
  c.back() = value;
  return AnalyticPolynomial(std::move(c));
}

int AnalyticPolynomial::degree() const {
  for (std::size_t n = coeffs_.size(); n-- > 0;) {
    if (coeffs_[n] != Complex{}) return static_cast<int>(n);
  }
  return -1;
}

Complex AnalyticPolynomial::operator()(Complex z) const {
  Complex acc{};
  for (std::size_t n = coeffs_.size(); n-- > 0;) acc = acc * z + coeffs_[n];
  return acc;
}

Complex AnalyticPolynomial::on_circle(double theta) const {
  return (*this)(std::polar(1.0, theta));
}

AnalyticPolynomial AnalyticPolynomial::trimmed() const {
  return truncated(degree());
}

AnalyticPolynomial AnalyticPolynomial::truncated(int max_degree) const {
  if (max_degree < 0) return {};
  const auto n = std::min(coeffs_.size(), static_cast<std::size_t>(max_degree) + 1);
  return AnalyticPolynomial(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + n));
}

AnalyticPolynomial& AnalyticPolynomial::operator*=(Complex s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

AnalyticPolynomial operator+(const AnalyticPolynomial& a, const AnalyticPolynomial& b) {
  std::vector<Complex> c(std::max(a.size(), b.size()));
  for (std::size_t n = 0; n < c.size(); ++n) {
    c[n] = a.coefficient(static_cast<int>(n)) + b.coefficient(static_cast<int>(n));
  }
  return AnalyticPolynomial(std::move(c));
}

AnalyticPolynomial operator-(const AnalyticPolynomial& a, const AnalyticPolynomial& b) {
  return a + Complex(-1.0) * b;
}

bool operator==(const AnalyticPolynomial& a, const AnalyticPolynomial& b) {
  const auto n = std::max(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (a.coefficient(static_cast<int>(k)) != b.coefficient(static_cast<int>(k))) return false;
  }
  return true;
}

LaurentPolynomial::LaurentPolynomial(const AnalyticPolynomial& p) {
  const auto c = p.coefficients();
  for (std::size_t n = 0; n < c.size(); ++n) terms_[static_cast<int>(n)] = c[n];
}

Complex LaurentPolynomial::coefficient(int n) const {
  const auto it = terms_.find(n);
  return it == terms_.end() ? Complex{} : it->second;
}

std::optional<int> LaurentPolynomial::top_index() const {
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (it->second != Complex{}) return it->first;
  }
  return std::nullopt;
}

std::optional<int> LaurentPolynomial::bottom_index() const {
  for (const auto& [n, c] : terms_) {
    if (c != Complex{}) return n;
  }
  return std::nullopt;
}

int LaurentPolynomial::degree_span() const {
  const auto top = top_index();
  return top ? *top - *bottom_index() : 0;
}

bool LaurentPolynomial::is_analytic() const {
  const auto bottom = bottom_index();
  return !bottom || *bottom >= 0;
}

std::optional<AnalyticPolynomial> LaurentPolynomial::to_analytic() const {
  if (!is_analytic()) return std::nullopt;
  const auto top = top_index();
  if (!top) return AnalyticPolynomial{};
  std::vector<Complex> c(static_cast<std::size_t>(*top) + 1);
  for (const auto& [n, v] : terms_) {
    if (n >= 0 && n <= *top) c[static_cast<std::size_t>(n)] = v;
  }
  return AnalyticPolynomial(std::move(c));
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [n, c] : other.terms_) terms_[n] += c;
  return *this;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  for (const auto& [n, c] : a.terms_) {
    if (b.coefficient(n) != c) return false;
  }
  for (const auto& [n, c] : b.terms_) {
    if (a.coefficient(n) != c) return false;
  }
  return true;
}

BlaschkeProduct::BlaschkeProduct(std::vector<Complex> zeros) : zeros_(std::move(zeros)) {
  for (const auto& a : zeros_) {
    if (!(std::abs(a) < 1.0)) {
      throw std::domain_error("Blaschke zero outside the open unit disk: |a| = " +
                              std::to_string(std::abs(a)));
    }
  }
}

Complex BlaschkeProduct::operator()(Complex z) const {
  Complex value = 1.0;
  for (const auto& a : zeros_) {
    if (a == Complex{}) {
      value *= z;
    } else {
      value *= (std::abs(a) / a) * (a - z) / (1.0 - std::conj(a) * z);
    }
  }
  return value;
}

Complex BlaschkeProduct::on_circle(double theta) const {
  return (*this)(std::polar(1.0, theta));
}

Complex evaluate(const LaurentPolynomial& phi, double theta) {
  Complex acc{};
  for (const auto& [n, c] : phi.terms()) acc += c * std::polar(1.0, n * theta);
  return acc;
}

double l2_norm_squared(const LaurentPolynomial& phi) {
  double s = 0.0;
  for (const auto& [n, c] : phi.terms()) s += std::norm(c);
  return s;
}

double l2_norm_squared(const AnalyticPolynomial& p) {
  double s = 0.0;
  for (const auto& c : p.coefficients()) s += std::norm(c);
  return s;
}

AnalyticPolynomial riesz_projection(const LaurentPolynomial& phi) {
  const auto top = phi.top_index();
  if (!top || *top < 0) return {};
  std::vector<Complex> c(static_cast<std::size_t>(*top) + 1);
  for (const auto& [n, v] : phi.terms()) {
    if (n >= 0 && n <= *top) c[static_cast<std::size_t>(n)] = v;
  }
  return AnalyticPolynomial(std::move(c));
}

double analytic_part_norm(const LaurentPolynomial& phi) {
  double s = 0.0;
  for (const auto& [n, c] : phi.terms()) {
    if (n >= 1) s += std::norm(c);
  }
  return std::sqrt(s);
}

LaurentPolynomial conjugate_on_circle(const AnalyticPolynomial& p) {
  LaurentPolynomial::Terms terms;
  const auto c = p.coefficients();
  for (std::size_t n = 0; n < c.size(); ++n) terms[-static_cast<int>(n)] = std::conj(c[n]);
  return LaurentPolynomial(std::move(terms));
}

AnalyticPolynomial toeplitz_compress(const AnalyticPolynomial& f, const AnalyticPolynomial& h) {
  const int deg_f = f.degree();
  if (deg_f < 0) return {};
  std::vector<Complex> g(static_cast<std::size_t>(deg_f) + 1);
  const int deg_h = h.degree();
  for (int n = 0; n <= deg_f; ++n) {
    Complex acc{};
    for (int m = 0; m <= deg_h && n + m <= deg_f; ++m) {
      acc += std::conj(h.coefficient(m)) * f.coefficient(n + m);
    }
    g[static_cast<std::size_t>(n)] = acc;
  }
  return AnalyticPolynomial(std::move(g));
}

AnalyticPolynomial conjugate_reflection(const AnalyticPolynomial& h) {
  std::vector<Complex> k(h.coefficients().begin(), h.coefficients().end());
  for (auto& c : k) c = std::conj(c);
  return AnalyticPolynomial(std::move(k));
}

namespace {

// Taylor coefficients of one Blaschke factor up to the given degree.
std::vector<Complex> factor_series(Complex a, int degree) {
  std::vector<Complex> s(static_cast<std::size_t>(degree) + 1);
  if (a == Complex{}) {
    if (degree >= 1) s[1] = 1.0;
    return s;
  }
  // (a - z) / (1 - conj(a) z) = a + sum_{k>=1} conj(a)^{k-1} (|a|^2 - 1) z^k
  const Complex unit = std::abs(a) / a;
  const Complex abar = std::conj(a);
  const double shrink = std::norm(a) - 1.0;
  s[0] = unit * a;
  Complex power = 1.0;
  for (int k = 1; k <= degree; ++k) {
    s[static_cast<std::size_t>(k)] = unit * power * shrink;
    power *= abar;
  }
  return s;
}

}  // namespace

AnalyticPolynomial blaschke_to_polynomial(const BlaschkeProduct& b, int degree) {
  if (degree < 0) throw std::invalid_argument("blaschke_to_polynomial: negative degree");
  const auto len = static_cast<std::size_t>(degree) + 1;
  std::vector<Complex> acc(len);
  acc[0] = 1.0;
  for (const auto& a : b.zeros()) {
    const auto s = factor_series(a, degree);
    std::vector<Complex> next(len);
    for (std::size_t i = 0; i < len; ++i) {
      if (acc[i] == Complex{}) continue;
      for (std::size_t j = 0; i + j < len; ++j) next[i + j] += acc[i] * s[j];
    }
    acc = std::move(next);
  }
  return AnalyticPolynomial(std::move(acc));
}

SupNormEstimate sup_norm_estimate(const AnalyticPolynomial& h, std::size_t samples) {
  const auto needed = static_cast<std::size_t>(4 * (h.degree() + 1));
  if (samples == 0 || samples < needed) {
    throw std::invalid_argument("sup_norm_estimate: need at least " + std::to_string(needed) +
                                " samples, got " + std::to_string(samples));
  }
  const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
  double best = 0.0;
  for (std::size_t j = 0; j < samples; ++j) {
    best = std::max(best, std::abs(h.on_circle(step * static_cast<double>(j))));
  }
  return {best, step};
}

}  // namespace tlab
