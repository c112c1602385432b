#include "cli/cli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tlab/hyponormality.hpp"
#include "tlab/symbol_io.hpp"

namespace tlab::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tlab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  int call(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    args.insert(args.begin(), "toeplitz-lab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    return main_entry(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, ParseSymbolFileExamples) {
  EXPECT_EQ(parse_symbol_file(write("z.txt", "1 1 0\n")), (LaurentPolynomial{{1, 1.0}}));
  EXPECT_EQ(parse_symbol_file(write("e.txt", "1 1 0\n-1 0.5 0\n")),
            (LaurentPolynomial{{1, 1.0}, {-1, 0.5}}));
  EXPECT_THROW(parse_symbol_file(dir_ / "missing.txt"), std::runtime_error);
}

TEST_F(CliTest, DuplicateIndexExitsWithParseError) {
  const auto p = write("dup.txt", "1 1 0\n1 2 0\n");
  EXPECT_EQ(call({"analyze", p.string()}), kExitParse);
  EXPECT_NE(err_.str().find("2"), std::string::npos);
  EXPECT_EQ(call({"check-hyponormal", p.string()}), kExitParse);
}

TEST_F(CliTest, AnalyzeShift) {
  const auto p = write("z.txt", "1 1 0\n");
  ASSERT_EQ(call({"analyze", p.string(), "--grid", "256"}), kExitOk) << err_.str();
  const auto s = out_.str();
  EXPECT_NE(s.find("is_hyponormal=true"), std::string::npos);
  EXPECT_NE(s.find("putnam: pass"), std::string::npos);
  EXPECT_NE(s.find("commutator lower bound: pass"), std::string::npos);
  EXPECT_NE(s.find("area lower bound: pass"), std::string::npos);
  EXPECT_NE(s.find("commutator_norm=1\n"), std::string::npos);
}

TEST_F(CliTest, CheckHyponormalNegative) {
  const auto p = write("neg.txt", "1 1 0\n-1 2 0\n");
  ASSERT_EQ(call({"check-hyponormal", p.string()}), kExitOk);
  EXPECT_NE(out_.str().find("is_hyponormal=false"), std::string::npos);
  EXPECT_NE(out_.str().find("reason=CF_EXPANSIVE"), std::string::npos);
}

TEST_F(CliTest, CheckHyponormalBoundaryIsIndeterminate) {
  // z + conj(z) is normal with |h| = 1 exactly.
  const auto p = write("edge.txt", "1 1 0\n-1 1 0\n");
  EXPECT_EQ(call({"check-hyponormal", p.string()}), kExitIndeterminate);
}

TEST_F(CliTest, CommutatorNormAndMatrixCsv) {
  const auto p = write("zz.txt", "1 1 0\n2 1 0\n");
  const auto csv = dir_ / "m.csv";
  ASSERT_EQ(call({"commutator-norm", p.string(), "--csv", csv.string()}), kExitOk);
  EXPECT_NE(out_.str().find("support_dim=2"), std::string::npos);
  EXPECT_NE(out_.str().find("commutator_norm=2.61803398874989"), std::string::npos);
  EXPECT_FALSE(slurp(csv).empty());
}

TEST_F(CliTest, SpectrumOutputsAreDeterministic) {
  const auto p = write("e.txt", "1 1 0\n-1 0.5 0\n");
  const auto csv_a = dir_ / "a.csv", csv_b = dir_ / "b.csv";
  const auto svg_a = dir_ / "a.svg", svg_b = dir_ / "b.svg";
  ASSERT_EQ(call({"spectrum", p.string(), "--grid", "128", "--csv", csv_a.string(), "--svg",
                  svg_a.string()}),
            kExitOk);
  const auto first = out_.str();
  EXPECT_NE(first.find("components=1"), std::string::npos);
  ASSERT_EQ(call({"spectrum", p.string(), "--grid", "128", "--csv", csv_b.string(), "--svg",
                  svg_b.string()}),
            kExitOk);
  EXPECT_EQ(first, out_.str());
  EXPECT_EQ(slurp(csv_a), slurp(csv_b));
  EXPECT_EQ(slurp(svg_a), slurp(svg_b));
  EXPECT_EQ(slurp(csv_a).rfind("re,im,winding,on_curve\n", 0), 0u);
  EXPECT_NE(slurp(svg_a).find("<svg"), std::string::npos);
}

TEST_F(CliTest, VerifyBoundsTwoFiles) {
  const auto f = write("f.txt", "2 1 0\n");
  const auto h = write("h.txt", "1 1 0\n");
  ASSERT_EQ(call({"verify-bounds", f.string(), h.string(), "--grid", "256"}), kExitOk) << err_.str();
  EXPECT_NE(out_.str().find("thm21_lhs_applicable=true"), std::string::npos);

  const auto bad = write("bad.txt", "-1 1 0\n");
  EXPECT_EQ(call({"verify-bounds", f.string(), bad.string()}), kExitParse);
  EXPECT_EQ(call({"verify-bounds", f.string()}), kExitUsage);
}

TEST_F(CliTest, NegativeControlIsNotAViolation) {
  const auto f = write("f.txt", "1 1 0\n");
  const auto h = write("h.txt", "0 0.5 0\n");
  ASSERT_EQ(call({"verify-bounds", f.string(), h.string(), "--grid", "256"}), kExitOk);
  EXPECT_NE(out_.str().find("thm21_lhs_applicable=false"), std::string::npos);
  EXPECT_NE(out_.str().find("not applicable"), std::string::npos);
}

TEST_F(CliTest, SweepRowsAndDeterminism) {
  const auto a = dir_ / "a.csv", b = dir_ / "b.csv";
  ASSERT_EQ(call({"sweep", "--trials", "200", "--grid", "64", "--csv", a.string()}), kExitOk)
      << out_.str();
  EXPECT_NE(out_.str().find("trials=200 violations=0"), std::string::npos);
  const auto text = slurp(a);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 201);
  ASSERT_EQ(call({"sweep", "--trials", "200", "--grid", "64", "--csv", b.string()}), kExitOk);
  EXPECT_EQ(text, slurp(b));

  ASSERT_EQ(call({"sweep", "--trials", "3", "--grid", "64"}), kExitOk);
  const auto stdout_csv = out_.str();
  EXPECT_EQ(std::count(stdout_csv.begin(), stdout_csv.end(), '\n'), 4);
  EXPECT_NE(err_.str().find("min_norm_to_bound_ratio="), std::string::npos);
}

TEST_F(CliTest, InjectedViolationExitsThree) {
  EXPECT_EQ(call({"sweep", "--trials", "2", "--grid", "64", "--inject-violation"}), kExitViolation);
  EXPECT_NE(err_.str().find("id=injected"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(call({}), kExitUsage);
  EXPECT_EQ(call({"frobnicate"}), kExitUsage);
  EXPECT_EQ(call({"analyze"}), kExitUsage);
  EXPECT_EQ(call({"sweep", "--grid", "10"}), kExitUsage);
  EXPECT_EQ(call({"sweep", "--tol", "nope=1"}), kExitUsage);
  EXPECT_EQ(call({"sweep", "--tol", "cf=-1"}), kExitUsage);
  EXPECT_EQ(call({"sweep", "extra.txt"}), kExitUsage);
  EXPECT_EQ(call({"--help"}), kExitOk);
}

TEST(Tolerances, ApplyByName) {
  Tolerances tol;
  EXPECT_TRUE(apply_tolerance(tol, "cf=1e-10"));
  EXPECT_EQ(tol.cf, 1e-10);
  EXPECT_TRUE(apply_tolerance(tol, "oncurve=1"));
  EXPECT_EQ(tol.on_curve, 1.0);
  EXPECT_TRUE(apply_tolerance(tol, "pad=0.1"));
  EXPECT_EQ(bounds_options(tol).raster.padding, 0.1);
  EXPECT_FALSE(apply_tolerance(tol, "cf"));
  EXPECT_FALSE(apply_tolerance(tol, "cf="));
  EXPECT_FALSE(apply_tolerance(tol, "cf=1x"));
  EXPECT_FALSE(apply_tolerance(tol, "cf=nan"));
}

TEST(TestRng, MappingIsPinned) {
  std::mt19937_64 ref(42);
  TestRng rng(42);
  const auto x = ref();
  EXPECT_EQ(rng.uniform(), static_cast<double>(x >> 11) * 0x1.0p-53);
  const auto y = ref();
  EXPECT_EQ(rng.integer(3, 9), 3 + static_cast<int>(y % 7));
  for (int i = 0; i < 1000; ++i) {
    const auto c = rng.unit_square();
    EXPECT_LE(std::abs(c.real()), 1.0);
    EXPECT_LE(std::abs(c.imag()), 1.0);
    EXPECT_LT(std::abs(rng.disk(0.9)), 0.9);
  }
}

TEST(RandomTestFamily, MeetsHypothesesAndIsDeterministic) {
  const auto fam = random_test_family(7, 200, 6);
  ASSERT_EQ(fam.size(), 200u);
  for (const auto& [f, h] : fam) {
    EXPECT_GE(f.degree(), 1);
    EXPECT_LE(f.degree(), 6);
    EXPECT_EQ(h.value_at_zero(), Complex{});
    EXPECT_LE(sup_norm_estimate(h).value, 1.0 + 1e-9);
    EXPECT_NO_THROW(build_symbol(f, h));
  }
  const auto again = random_test_family(7, 200, 6);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    EXPECT_EQ(fam[i].first, again[i].first);
    EXPECT_EQ(fam[i].second, again[i].second);
  }
  EXPECT_NE(random_test_family(8, 1, 6)[0].first, fam[0].first);
}

TEST(RandomSymbol, DegreesWithinCap) {
  TestRng rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto phi = random_symbol(rng, 5);
    for (const auto& [n, c] : phi.terms()) {
      EXPECT_LE(std::abs(n), 5);
      EXPECT_LE(std::abs(c.real()), 1.0);
    }
  }
}

}  // namespace
}  // namespace tlab::cli
