#include "tlab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tlab {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("ComplexMatrix: " + std::to_string(entries_.size()) +
                                " entries for a " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " matrix");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& e : entries_) s += std::norm(e);
  return std::sqrt(s);
}

std::vector<Complex> ComplexMatrix::apply(std::span<const Complex> x) const {
  if (x.size() != cols_) throw std::invalid_argument("ComplexMatrix::apply: dimension mismatch");
  std::vector<Complex> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Complex acc{};
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("ComplexMatrix product: dimension mismatch");
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex s = a(r, k);
      if (s == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += s * b(k, c);
    }
  }
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("ComplexMatrix difference: dimension mismatch");
  }
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) : m_(m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument("HermitianMatrix: need a nonempty square matrix");
  }
  const double tol = kHermitianTolerance * std::max(1.0, m.max_abs());
  const auto n = m.rows();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j; k < n; ++k) {
      const Complex a = m(j, k);
      const Complex b = std::conj(m(k, j));
      if (std::abs(a - b) > tol) {
        throw std::invalid_argument("HermitianMatrix: entry (" + std::to_string(j) + "," +
                                    std::to_string(k) + ") violates symmetry");
      }
      const Complex avg = 0.5 * (a + b);
      m_(j, k) = avg;
      m_(k, j) = std::conj(avg);
    }
    m_(j, j) = m_(j, j).real();
  }
}

ComplexMatrix toeplitz_matrix(const LaurentPolynomial& phi, std::size_t n) {
  if (n == 0) throw std::invalid_argument("toeplitz_matrix: dimension must be positive");
  ComplexMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      m(j, k) = phi.coefficient(static_cast<int>(j) - static_cast<int>(k));
    }
  }
  return m;
}

ComplexMatrix hankel_matrix(const LaurentPolynomial& phi, std::size_t n) {
  if (n == 0) throw std::invalid_argument("hankel_matrix: dimension must be positive");
  ComplexMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      m(j, k) = phi.coefficient(-static_cast<int>(j + k) - 1);
    }
  }
  return m;
}

ComplexMatrix hankel_matrix_conj(const AnalyticPolynomial& f, std::size_t n) {
  if (n == 0) throw std::invalid_argument("hankel_matrix_conj: dimension must be positive");
  ComplexMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      m(j, k) = std::conj(f.coefficient(static_cast<int>(j + k) + 1));
    }
  }
  return m;
}

std::size_t commutator_support(const AnalyticPolynomial& f, const AnalyticPolynomial& g) {
  return static_cast<std::size_t>(std::max({1, f.degree(), g.degree()}));
}

SelfCommutator self_commutator(const AnalyticPolynomial& f, const AnalyticPolynomial& g) {
  return self_commutator(f, g, commutator_support(f, g));
}

SelfCommutator self_commutator(const AnalyticPolynomial& f, const AnalyticPolynomial& g,
                               std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("self_commutator: dimension must be positive");
  const auto hf = hankel_matrix_conj(f, dim);
  const auto hg = hankel_matrix_conj(g, dim);
  return SelfCommutator{HermitianMatrix(hf.adjoint() * hf - hg.adjoint() * hg),
                        commutator_support(f, g), f, g};
}

double operator_norm(const ComplexMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  if (a.rows() > kMaxDenseDim || a.cols() > kMaxDenseDim) {
    throw std::length_error("operator_norm: matrix exceeds the dense size limit");
  }
  const auto values = hermitian_eigenvalues(HermitianMatrix(a.adjoint() * a));
  return std::sqrt(std::max(0.0, values.back()));
}

double commutator_norm(const AnalyticPolynomial& f, const AnalyticPolynomial& g) {
  const auto values = hermitian_eigenvalues(self_commutator(f, g).matrix);
  return std::max(std::abs(values.front()), std::abs(values.back()));
}

double quadratic_form(const SelfCommutator& c, const AnalyticPolynomial& p) {
  const auto& m = c.matrix.matrix();
  const auto n = m.rows();
  std::vector<Complex> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = p.coefficient(static_cast<int>(i));
  const auto y = m.apply(x);
  Complex acc{};
  for (std::size_t i = 0; i < n; ++i) acc += y[i] * std::conj(x[i]);
  return acc.real();
}

}  // namespace tlab
