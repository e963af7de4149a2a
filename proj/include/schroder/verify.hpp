#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schroder/bijection.hpp"
#include "schroder/doubling.hpp"
#include "schroder/enumerate.hpp"

namespace schroder {

// The maps under test. Suites take them as values so a deliberately broken
// map can be swapped in to check that the suites notice.
struct Maps {
  std::function<LinkedPartition(const LargeMotzkinPath&)> phi = schroder::phi;
  std::function<LargeMotzkinPath(const LinkedPartition&)> phi_inv = schroder::phi_inv;
  std::function<LargeMotzkinPath(const MotzkinPath&, ChoiceBit)> double_path =
      schroder::double_path;
  std::function<std::pair<MotzkinPath, ChoiceBit>(const LargeMotzkinPath&)> project =
      schroder::project;
};

struct SuiteResult {
  std::string suite;
  long n = 0;
  std::size_t count = 0;  // objects examined
  bool passed = true;
  std::string counterexample;  // canonical text, empty when passed
  double seconds = 0.0;
};

// Arc-level and block-level validators agree on every arc subset of [n].
SuiteResult check_validator_equivalence(int n);
// Stream size matches the counting table, every item validates, and the
// stream is strictly increasing in canonical text order.
SuiteResult check_family(Family family, int n);
// phi maps L(n) injectively onto the independently generated NCL(n+1), and
// every image passes both validators.
SuiteResult check_bijectivity(int n, const Maps& maps = {});
SuiteResult check_round_trips(int n, const Maps& maps = {});
// Components of P and outer components of phi(P) line up and carry the same case.
SuiteResult check_case_soundness(int n, const Maps& maps = {});
// (Q, b) -> double_path(Q, b) is a bijection M(n-1) x {0,1} -> L(n) inverted by project.
SuiteResult check_doubling(int n, const Maps& maps = {});
SuiteResult check_identities(std::size_t N);

struct VerifyOptions {
  int max_n = 6;
  std::optional<std::size_t> identities;
  Maps maps;
};

struct VerifyReport {
  std::vector<SuiteResult> results;
  bool all_passed() const;
};

VerifyReport run_verification(const VerifyOptions& options);

// "bijectivity n=5 count=394 pass 0.002s"
std::string format_result(const SuiteResult& result);

}  // namespace schroder
