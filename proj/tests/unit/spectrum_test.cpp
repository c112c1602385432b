#include "tlab/spectrum.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cli/cli.hpp"
#include "support/oracles.hpp"
#include "tlab/hyponormality.hpp"
#include "tlab/operators.hpp"

namespace tlab {
namespace {

constexpr double pi = std::numbers::pi;

const LaurentPolynomial kZ{{1, 1.0}};
const LaurentPolynomial kEllipse{{1, 1.0}, {-1, 0.5}};

LaurentPolynomial random_trig(testing::Gen& gen, int max_span) {
  const int lo = gen.integer(-max_span, 0);
  const int hi = gen.integer(lo == 0 ? 1 : 0, std::min(max_span + lo, max_span));
  LaurentPolynomial::Terms t;
  for (int n = lo; n <= hi; ++n) t[n] = gen.square();
  if (hi == lo) t[lo + 1] = gen.square();
  return LaurentPolynomial(t);
}

TEST(SampleCurve, Examples) {
  const auto c = sample_curve(kZ, 4);
  const Complex want[] = {1.0, Complex(0, 1), -1.0, Complex(0, -1)};
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(std::abs(c.samples[static_cast<std::size_t>(j)] - want[j]), 0.0, 1e-15);

  for (const auto& p : sample_curve(LaurentPolynomial{{0, Complex(2, -3)}}, 16).samples) {
    EXPECT_EQ(p, Complex(2, -3));
  }

  const auto e = sample_curve(kEllipse, 4);
  const Complex ewant[] = {1.5, Complex(0, 0.5), -1.5, Complex(0, -0.5)};
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(std::abs(e.samples[static_cast<std::size_t>(j)] - ewant[j]), 0.0, 1e-15);
}

TEST(SampleCurve, AgreesWithDirectEvaluation) {
  testing::Gen gen(113);
  const auto phi = random_trig(gen, 6);
  const auto c = sample_curve(phi, 512);
  for (std::size_t j = 0; j < 512; j += 7) {
    EXPECT_NEAR(std::abs(c.samples[j] - evaluate(phi, 2 * pi * static_cast<double>(j) / 512)), 0.0, 1e-12);
  }
}

TEST(WindingNumber, Examples) {
  const auto circle = sample_curve(kZ, 256);
  EXPECT_EQ(winding_number(circle, 0.0).value, 1);
  EXPECT_FALSE(winding_number(circle, 0.0).on_curve);
  EXPECT_EQ(winding_number(circle, 2.0).value, 0);
  EXPECT_EQ(winding_number(sample_curve(LaurentPolynomial{{2, 1.0}}, 256), 0.0).value, 2);
  EXPECT_EQ(winding_number(sample_curve(LaurentPolynomial{{-1, 1.0}}, 256), 0.0).value, -1);
  EXPECT_TRUE(winding_number(circle, Complex(0.0, 1.0)).on_curve);
  EXPECT_TRUE(winding_number(circle, 0.999).on_curve);
}

TEST(WindingNumber, AngleSumIsIntegral) {
  testing::Gen gen(127);
  int integral = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto phi = random_trig(gen, 4);
    const auto curve = sample_curve(phi, min_curve_samples(phi));
    const Complex lambda(gen.uniform(-4, 4), gen.uniform(-4, 4));
    const auto w = winding_number(curve, lambda);
    if (w.on_curve) continue;
    ++integral;
    const double turns = w.angle_sum / (2 * pi);
    EXPECT_LE(std::abs(turns - std::round(turns)), kWindingIntegrality);
    EXPECT_EQ(w.value, static_cast<int>(std::round(turns)));
  }
  EXPECT_GT(integral, 500);
}

TEST(RasterizeSpectrum, Preconditions) {
  EXPECT_THROW(rasterize_spectrum(kZ, 32, 8192), std::invalid_argument);
  EXPECT_THROW(rasterize_spectrum(kZ, 128, 100), std::invalid_argument);
}

TEST(RasterizeSpectrum, DiskArea) {
  const auto r = rasterize_spectrum(kZ, 1024, 8192);
  EXPECT_NEAR(r.area, pi, 0.01 * pi);
  EXPECT_GE(r.area, 0.0);
  EXPECT_LE(r.area, r.box.area());
  EXPECT_NEAR(r.box.re_min, -1.1, 1e-12);
  EXPECT_NEAR(r.box.im_max, 1.1, 1e-12);
}

TEST(RasterizeSpectrum, EllipseArea) {
  const auto r = rasterize_spectrum(kEllipse, 1024, 8192);
  EXPECT_NEAR(r.area, 0.75 * pi, 0.01 * 0.75 * pi);
  EXPECT_NEAR(r.box.width(), 3.3, 1e-12);
  EXPECT_NEAR(r.box.height(), 1.3, 1e-12);
}

TEST(RasterizeSpectrum, PointSymbolIsAllBudget) {
  const auto r = rasterize_spectrum(LaurentPolynomial{{0, 5.0}}, 64, 64);
  EXPECT_NEAR(r.box.width(), 2e-3, 1e-15);
  EXPECT_GT(r.area, 0.0);
  EXPECT_LE(r.area, r.error_budget);
  EXPECT_EQ(connected_components(r), 1);
}

// With an even grid the point sits on a cell corner, equidistant from four centers.
TEST(RasterizeSpectrum, PointSymbolOnCellCornerIsStillMarked) {
  for (int g : {64, 65, 512, 1024}) {
    const auto r = rasterize_spectrum(LaurentPolynomial{{0, Complex(0.1674, -0.0942)}}, g, 64);
    EXPECT_GE(r.spectrum_cells(), 1u) << g;
    EXPECT_EQ(connected_components(r), 1) << g;
  }
}

TEST(RasterizeSpectrum, AreaConvergesUnderRefinement) {
  for (const auto& [phi, exact] : {std::pair{kZ, pi}, std::pair{kEllipse, 0.75 * pi}}) {
    const double coarse = std::abs(rasterize_spectrum(phi, 256, 8192).area - exact);
    const double fine = std::abs(rasterize_spectrum(phi, 1024, 8192).area - exact);
    EXPECT_LT(fine, coarse);
  }
}

TEST(RasterizeSpectrum, BudgetCoversTrueArea) {
  for (int g : {64, 128, 512}) {
    const auto r = rasterize_spectrum(kEllipse, g, 4096);
    EXPECT_GE(r.area, 0.75 * pi);
    EXPECT_LE(r.area - r.error_budget, 0.75 * pi);
  }
}

// Ray-crossing windings must agree with the angle-sum definition off the curve.
TEST(RasterizeSpectrum, CellWindingsMatchAngleSum) {
  testing::Gen gen(131);
  for (int trial = 0; trial < 8; ++trial) {
    const auto phi = random_trig(gen, 4);
    const auto r = rasterize_spectrum(phi, 128, min_curve_samples(phi));
    const double cell_diag = std::hypot(r.cell_width(), r.cell_height());
    for (int k = 0; k < 200; ++k) {
      const int ix = gen.integer(0, 127), iy = gen.integer(0, 127);
      const auto idx = static_cast<std::size_t>(iy) * 128 + static_cast<std::size_t>(ix);
      if (r.on_curve[idx]) continue;
      const auto w = winding_number(r.curve, r.cell_center(ix, iy), 0.5 * cell_diag);
      ASSERT_FALSE(w.on_curve);
      EXPECT_EQ(w.value, r.winding[idx]);
    }
  }
}

TEST(RasterizeSpectrum, Deterministic) {
  const LaurentPolynomial phi{{2, 1.0}, {-1, 1.0}};
  const auto a = rasterize_spectrum(phi, 256, 4096);
  const auto b = rasterize_spectrum(phi, 256, 4096);
  EXPECT_EQ(a.winding, b.winding);
  EXPECT_EQ(a.on_curve, b.on_curve);
  EXPECT_EQ(a.area, b.area);
  EXPECT_EQ(a.error_budget, b.error_budget);
}

TEST(ConnectedComponents, Examples) {
  EXPECT_EQ(connected_components(rasterize_spectrum(kZ, 256, 8192)), 1);
  EXPECT_EQ(connected_components(rasterize_spectrum(kEllipse, 256, 8192)), 1);
  EXPECT_EQ(connected_components(rasterize_spectrum(LaurentPolynomial{{2, 1.0}, {-1, 1.0}}, 512, 8192)), 1);
}

TEST(ConnectedComponents, CountsSeparateBlobs) {
  SpectrumRaster r;
  r.grid = 4;
  r.winding.assign(16, 0);
  r.on_curve.assign(16, 0);
  r.winding[0] = 1;
  r.winding[5] = 1;   // diagonal neighbour of 0
  r.on_curve[3] = 1;  // isolated
  r.winding[15] = -1;
  EXPECT_EQ(connected_components(r), 3);
}

TEST(Widom, SpectraAreConnected) {
  testing::Gen gen(137);
  for (int trial = 0; trial < 10; ++trial) {
    const auto phi = random_trig(gen, 4);
    EXPECT_EQ(connected_components(rasterize_spectrum(phi, 512, 8192)), 1) << "trial " << trial;
  }
}

TEST(VerifyBounds, Examples) {
  const AnalyticPolynomial z{0.0, 1.0};
  auto r = verify_bounds(z, AnalyticPolynomial{}, 1024, 8192);
  EXPECT_NEAR(r.commutator_norm, 1.0, 1e-14);
  EXPECT_NEAR(r.lower_bound, 1.0, 1e-15);
  EXPECT_NEAR(r.putnam_rhs, 1.0, 0.01);
  EXPECT_TRUE(r.thm21_applicable);
  EXPECT_TRUE(r.putnam_pass);
  EXPECT_EQ(r.thm21_pass, true);
  EXPECT_EQ(r.corollary_pass, true);
  EXPECT_FALSE(r.violation());

  r = verify_bounds(AnalyticPolynomial{0.0, 1.0, 1.0}, AnalyticPolynomial{}, 256, 8192);
  EXPECT_NEAR(r.commutator_norm, (3 + std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_NEAR(r.lower_bound, 2.0, 1e-15);
  EXPECT_GT(r.thm21_margin, 0.5);

  r = verify_bounds(AnalyticPolynomial{0.0, 0.0, 1.0}, z, 512, 8192);
  EXPECT_NEAR(r.commutator_norm, 1.0, 1e-14);
  EXPECT_NEAR(r.thm21_margin, 0.0, 1e-10);
  EXPECT_EQ(r.corollary_pass, true);
  EXPECT_GE(r.area + r.error_budget, pi);

  r = verify_bounds(z, AnalyticPolynomial{0.5}, 1024, 8192);
  EXPECT_FALSE(r.thm21_applicable);
  EXPECT_FALSE(r.thm21_pass.has_value());
  EXPECT_FALSE(r.corollary_pass.has_value());
  EXPECT_NEAR(r.area, 0.75 * pi, 0.01 * 0.75 * pi);
  EXPECT_LT(r.area + r.error_budget, r.corollary_rhs);
  EXPECT_FALSE(r.violation());
}

TEST(VerifyBounds, PropagatesBuildRejection) {
  EXPECT_THROW(verify_bounds(AnalyticPolynomial{0.0, 1.0}, AnalyticPolynomial{0.0, 2.0}, 128, 1024),
               std::invalid_argument);
}

// Putnam and the commutator lower bound on the seeded family at a coarse grid.
TEST(VerifyBounds, FamilyHasNoViolations) {
  const auto family = cli::random_test_family(2024, 200, 6);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& [f, h] = family[i];
    const auto r = verify_bounds(f, h, 128, 8192);
    EXPECT_TRUE(r.hyponormal) << i;
    EXPECT_TRUE(r.putnam_pass) << i << " margin " << r.putnam_margin;
    ASSERT_TRUE(r.thm21_applicable);
    EXPECT_GE(r.commutator_norm, r.lower_bound - 1e-9) << i;
    EXPECT_EQ(r.corollary_pass, true) << i;
  }
}

TEST(VerifyBounds, TranslationCovariance) {
  testing::Gen gen(139);
  for (int trial = 0; trial < 6; ++trial) {
    const auto f = gen.analytic(gen.integer(1, 4));
    const auto phi = build_symbol(f, AnalyticPolynomial::monomial(gen.integer(1, 3)));
    const Complex mu = 3.0 * gen.square();
    const auto a = assess_bounds(phi, true, 256, 8192);
    const auto b = assess_bounds(phi + LaurentPolynomial::constant(mu), true, 256, 8192);
    EXPECT_NEAR(a.commutator_norm, b.commutator_norm, 1e-13 * std::max(1.0, a.commutator_norm));
    EXPECT_NEAR(a.lower_bound, b.lower_bound, 1e-15 * std::max(1.0, a.lower_bound));
    EXPECT_NEAR(a.area, b.area, a.error_budget + b.error_budget);
  }
}

}  // namespace
}  // namespace tlab
