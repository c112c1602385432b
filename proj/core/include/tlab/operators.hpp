#pragma once

// Finite matrix representations of Toeplitz and Hankel operators on H^2.
//
// Basis {z^k}_{k >= 0}; entry(j, k) = <A z^k, z^j>. With Uh(z) = conj(z) h(conj z)
// the Hankel operator H_phi h = U (I - P)(phi h) has entry(j, k) = c_{-j-k-1},
// so H_{conj f} has entry(j, k) = conj(f_{j+k+1}).

#include <cstddef>
#include <span>
#include <vector>

#include "tlab/symbol.hpp"

namespace tlab {

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  /// Throws std::invalid_argument unless entries.size() == rows * cols.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const Complex> entries() const { return entries_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  ComplexMatrix adjoint() const;
  double max_abs() const;
  double frobenius_norm() const;

  std::vector<Complex> apply(std::span<const Complex> x) const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Square matrix with entry(j,k) == conj(entry(k,j)) exactly; real diagonal.
class HermitianMatrix {
 public:
  /// Relative asymmetry accepted before construction rejects the input: the
  /// bound is kHermitianTolerance * max(1, max |a_jk|).
  static constexpr double kHermitianTolerance = 1e-13;

  /// Symmetrizes by averaging A and A^*. Throws std::invalid_argument if the
  /// input is not square, empty, or further from Hermitian than the tolerance.
  explicit HermitianMatrix(const ComplexMatrix& m);

  std::size_t dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

 private:
  ComplexMatrix m_;
};

/// [T*_phi, T_phi] for phi = f + conj(g), held on the block where it is
/// nonzero. Both Hankel operators vanish beyond index max(deg f, deg g) - 1,
/// so the block is exact, not a truncation.
struct SelfCommutator {
  HermitianMatrix matrix;
  std::size_t support_dim;
  AnalyticPolynomial f;
  AnalyticPolynomial g;
};

/// entry(j,k) = c_{j-k}, 0 <= j,k < n.
ComplexMatrix toeplitz_matrix(const LaurentPolynomial& phi, std::size_t n);

/// entry(j,k) = c_{-j-k-1}: the n x n section of H_phi.
ComplexMatrix hankel_matrix(const LaurentPolynomial& phi, std::size_t n);

/// H_{conj f}: entry(j,k) = conj(f_{j+k+1}).
ComplexMatrix hankel_matrix_conj(const AnalyticPolynomial& f, std::size_t n);

/// Support block size max(1, deg f, deg g).
std::size_t commutator_support(const AnalyticPolynomial& f, const AnalyticPolynomial& g);

/// H*_{conj f} H_{conj f} - H*_{conj g} H_{conj g} on the support block.
SelfCommutator self_commutator(const AnalyticPolynomial& f, const AnalyticPolynomial& g);
/// Same operator sectioned at an explicit dimension (>= 1); sections larger
/// than the support block are zero-padded copies of it.
SelfCommutator self_commutator(const AnalyticPolynomial& f, const AnalyticPolynomial& g,
                               std::size_t dim);

inline constexpr std::size_t kMaxDenseDim = 2048;

struct Eigensystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column j belongs to values[j]
  int sweeps = 0;
  bool converged = false;
};

/// Cyclic complex Jacobi. Stops once the off-diagonal Frobenius mass falls
/// below 1e-14 ||A||_F, or after 100 sweeps. Throws std::length_error when
/// dim > kMaxDenseDim.
Eigensystem hermitian_eigensystem(const HermitianMatrix& a);
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& a);

/// Largest singular value, sqrt(lambda_max(A^* A)).
double operator_norm(const ComplexMatrix& a);

/// max |eigenvalue| of the self-commutator; equals ||[T*_phi, T_phi]||.
double commutator_norm(const AnalyticPolynomial& f, const AnalyticPolynomial& g);

/// Re <C p, p>. Coefficients of p beyond the stored block meet zero rows.
double quadratic_form(const SelfCommutator& c, const AnalyticPolynomial& p);

}  // namespace tlab
