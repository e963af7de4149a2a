#include <gtest/gtest.h>

#include "schroder/verify.hpp"

namespace schroder {
namespace {

TEST(VerifyTest, AllSuitesPassOnSmallSizes) {
  VerifyOptions options;
  options.max_n = 4;
  options.identities = 50;
  const VerifyReport report = run_verification(options);
  EXPECT_FALSE(report.results.empty());
  for (const SuiteResult& r : report.results) EXPECT_TRUE(r.passed) << format_result(r);
  EXPECT_TRUE(report.all_passed());
}

TEST(VerifyTest, TrivialSizes) {
  VerifyOptions options;
  options.max_n = 1;
  EXPECT_TRUE(run_verification(options).all_passed());
}

TEST(VerifyTest, ValidatorEquivalenceCoversEverySubset) {
  const SuiteResult r = check_validator_equivalence(5);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.count, std::size_t{1} << 10);
}

// Negative control: project reads the closing color backwards for d steps
// while double_path is left intact.
TEST(VerifyTest, OneSidedBitFlipIsCaught) {
  Maps broken;
  broken.project = [](const LargeMotzkinPath& p) {
    auto [q, bit] = project(p);
    if (is_down(p.word().back())) bit = bit == ChoiceBit::First ? ChoiceBit::Second : ChoiceBit::First;
    return std::make_pair(q, bit);
  };
  const SuiteResult r = check_doubling(2, broken);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.counterexample.empty());
  EXPECT_NE(format_result(r).find("FAIL"), std::string::npos) << format_result(r);

  VerifyOptions options;
  options.max_n = 3;
  options.maps = broken;
  EXPECT_FALSE(run_verification(options).all_passed());
}

TEST(VerifyTest, BrokenPhiIsCaught) {
  Maps broken;
  broken.phi = [](const LargeMotzkinPath& p) {
    const LinkedPartition image = phi(p);
    return p.text() == "Uy" ? LinkedPartition(3, {{1, 2}, {1, 3}}) : image;
  };
  const SuiteResult bij = check_bijectivity(2, broken);
  EXPECT_FALSE(bij.passed);
  EXPECT_FALSE(bij.counterexample.empty());
  EXPECT_FALSE(check_round_trips(2, broken).passed);
  EXPECT_TRUE(check_bijectivity(2).passed);
}

TEST(VerifyTest, FormatResult) {
  SuiteResult r;
  r.suite = "bijectivity";
  r.n = 5;
  r.count = 394;
  r.seconds = 0.002;
  EXPECT_EQ(format_result(r), "bijectivity n=5 count=394 pass 0.002s");
}

}  // namespace
}  // namespace schroder
