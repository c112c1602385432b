#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tlab/operators.hpp"

namespace tlab {
namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTolerance = 1e-14;

double off_diagonal_mass(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.rows(); ++j) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (j != k) s += std::norm(a(j, k));
    }
  }
  return std::sqrt(s);
}

// Annihilates a(p,q) with the unitary G = diag(1, e^{-i alpha}) R, where
// a(p,q) = |a(p,q)| e^{i alpha} and R is the real Jacobi rotation of the
// phase-corrected 2x2 block. Applies A <- G^* A G and V <- V G.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;  // e^{i alpha}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex gpp = c;
  const Complex gpq = s;
  const Complex gqp = -s * std::conj(phase);
  const Complex gqq = c * std::conj(phase);

  const auto n = a.rows();
  for (std::size_t r = 0; r < n; ++r) {
    const Complex arp = a(r, p);
    const Complex arq = a(r, q);
    a(r, p) = arp * gpp + arq * gqp;
    a(r, q) = arp * gpq + arq * gqq;
  }
  for (std::size_t r = 0; r < n; ++r) {
    const Complex apr = a(p, r);
    const Complex aqr = a(q, r);
    a(p, r) = std::conj(gpp) * apr + std::conj(gqp) * aqr;
    a(q, r) = std::conj(gpq) * apr + std::conj(gqq) * aqr;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;

  for (std::size_t r = 0; r < n; ++r) {
    const Complex vrp = v(r, p);
    const Complex vrq = v(r, q);
    v(r, p) = vrp * gpp + vrq * gqp;
    v(r, q) = vrp * gpq + vrq * gqq;
  }
}

}  // namespace

Eigensystem hermitian_eigensystem(const HermitianMatrix& input) {
  const auto n = input.dim();
  if (n > kMaxDenseDim) throw std::length_error("hermitian_eigensystem: matrix exceeds the dense size limit");

  ComplexMatrix a = input.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double target = kOffDiagonalTolerance * a.frobenius_norm();

  Eigensystem out;
  while (true) {
    if (off_diagonal_mass(a) <= target) {
      out.converged = true;
      break;
    }
    if (out.sweeps == kMaxSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
    ++out.sweeps;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, j) = v(r, order[j]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& a) {
  return hermitian_eigensystem(a).values;
}

}  // namespace tlab
