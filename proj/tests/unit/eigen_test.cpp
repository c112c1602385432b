#include <gtest/gtest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "tlab/operators.hpp"

namespace tlab {
namespace {

TEST(HermitianEigenvalues, Examples) {
  const auto a = hermitian_eigenvalues(HermitianMatrix(ComplexMatrix(2, 2, {2.0, 1.0, 1.0, 1.0})));
  EXPECT_NEAR(a[0], (3 - std::sqrt(5.0)) / 2, 1e-14);
  EXPECT_NEAR(a[1], (3 + std::sqrt(5.0)) / 2, 1e-14);
  EXPECT_NEAR(a[0], 0.381966, 1e-6);

  const auto id = hermitian_eigenvalues(HermitianMatrix(ComplexMatrix::identity(3)));
  ASSERT_EQ(id.size(), 3u);
  for (double v : id) EXPECT_EQ(v, 1.0);

  const auto d = hermitian_eigenvalues(HermitianMatrix(ComplexMatrix(2, 2, {0.0, 0.0, 0.0, 1.0})));
  EXPECT_EQ(d, (std::vector<double>{0.0, 1.0}));
}

TEST(HermitianEigenvalues, TwoByTwoMatchCharacteristicPolynomial) {
  testing::Gen gen(67);
  for (int trial = 0; trial < 500; ++trial) {
    const double a = gen.uniform(-3, 3);
    double d = gen.uniform(-3, 3);
    Complex b = gen.square();
    if (trial % 10 == 0) b = 0.0;
    if (trial % 10 == 1) b *= 1e-9;
    if (trial % 10 == 2) d = a;
    const auto got = hermitian_eigenvalues(HermitianMatrix(ComplexMatrix(2, 2, {a, b, std::conj(b), d})));
    const auto want = testing::eigenvalues_2x2(a, b, d);
    EXPECT_NEAR(got[0], want[0], 1e-10);
    EXPECT_NEAR(got[1], want[1], 1e-10);
  }
}

TEST(HermitianEigenvalues, ThreeByThreeMatchCharacteristicPolynomial) {
  testing::Gen gen(71);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = gen.hermitian(3);
    const auto got = hermitian_eigenvalues(m);
    const auto want = testing::eigenvalues_3x3(m.matrix());
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(got[static_cast<std::size_t>(i)], want[static_cast<std::size_t>(i)], 1e-10);
  }
}

TEST(HermitianEigensystem, ResidualsAndOrder) {
  testing::Gen gen(73);
  for (std::size_t n : {1u, 4u, 17u, 40u}) {
    const auto m = gen.hermitian(n);
    const auto sys = hermitian_eigensystem(m);
    EXPECT_TRUE(sys.converged);
    EXPECT_TRUE(std::is_sorted(sys.values.begin(), sys.values.end()));
    const double scale = m.matrix().frobenius_norm();
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Complex> v(n);
      for (std::size_t r = 0; r < n; ++r) v[r] = sys.vectors(r, j);
      const auto av = m.matrix().apply(v);
      double res = 0.0;
      for (std::size_t r = 0; r < n; ++r) res += std::norm(av[r] - sys.values[j] * v[r]);
      EXPECT_LE(std::sqrt(res), 1e-10 * scale);
    }
  }
}

TEST(HermitianEigenvalues, TraceAndRepeatedValues) {
  // diag(2, 2, -1) rotated by a unitary built from a Householder reflector.
  std::vector<Complex> v{Complex(1, 1), 0.5, Complex(0, -2)};
  double vv = 0.0;
  for (auto& x : v) vv += std::norm(x);
  ComplexMatrix q = ComplexMatrix::identity(3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) q(r, c) -= 2.0 * v[r] * std::conj(v[c]) / vv;
  ComplexMatrix d(3, 3);
  d(0, 0) = 2.0;
  d(1, 1) = 2.0;
  d(2, 2) = -1.0;
  const auto eig = hermitian_eigenvalues(HermitianMatrix(q * d * q.adjoint()));
  EXPECT_NEAR(eig[0], -1.0, 1e-13);
  EXPECT_NEAR(eig[1], 2.0, 1e-13);
  EXPECT_NEAR(eig[2], 2.0, 1e-13);
}

TEST(HermitianEigenvalues, ZeroMatrix) {
  const auto eig = hermitian_eigenvalues(HermitianMatrix(ComplexMatrix(3, 3)));
  EXPECT_EQ(eig, (std::vector<double>{0.0, 0.0, 0.0}));
}

TEST(HermitianEigenvalues, RejectsOversizedInput) {
  const HermitianMatrix big(ComplexMatrix(kMaxDenseDim + 1, kMaxDenseDim + 1));
  EXPECT_THROW(hermitian_eigenvalues(big), std::length_error);
}

}  // namespace
}  // namespace tlab
