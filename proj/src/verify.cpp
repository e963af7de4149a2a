#include "schroder/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <unordered_set>

#include "schroder/decompose.hpp"

namespace schroder {

namespace {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

SuiteResult start(std::string suite, long n) {
  SuiteResult r;
  r.suite = std::move(suite);
  r.n = n;
  return r;
}

SuiteResult& fail(SuiteResult& r, std::string counterexample) {
  if (r.passed) {
    r.passed = false;
    r.counterexample = std::move(counterexample);
  }
  return r;
}

std::string in_quotes(const std::string& text) { return "\"" + text + "\""; }

std::string bit_text(ChoiceBit b) { return b == ChoiceBit::First ? "0" : "1"; }

}  // namespace

SuiteResult check_validator_equivalence(int n) {
  Timer timer;
  SuiteResult r = start("validator-equivalence", n);
  std::vector<Arc> pairs;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) pairs.push_back({a, b});
  }
  const std::size_t subsets = std::size_t{1} << pairs.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1U) arcs.push_back(pairs[i]);
    }
    const LinkedPartition p(n, std::move(arcs));
    ++r.count;
    const bool by_arcs = !ncl_violation(p).has_value();
    const bool by_blocks = !blockwise_violation(p).has_value();
    if (by_arcs != by_blocks) {
      fail(r, render_partition(p) + (by_arcs ? " accepted by arcs only" : " accepted by blocks only"));
      break;
    }
  }
  r.seconds = timer.seconds();
  return r;
}

namespace {

template <typename T, typename Valid, typename Text, typename Less>
void scan_stream(SuiteResult& r, Generator<T> gen, Valid valid, Text text, Less less) {
  std::optional<std::string> previous;
  for (const T& x : gen) {
    ++r.count;
    std::string t = text(x);
    if (!valid(x)) {
      fail(r, in_quotes(t) + " fails its validator");
      return;
    }
    if (previous && !less(*previous, t)) {
      fail(r, in_quotes(t) + " is out of order after " + in_quotes(*previous));
      return;
    }
    previous = std::move(t);
  }
}

}  // namespace

SuiteResult check_family(Family family, int n) {
  Timer timer;
  SuiteResult r = start("count-" + family_name(family), n);
  auto bytes_less = [](const std::string& a, const std::string& b) { return a < b; };
  auto text = [](const auto& x) { return x.text(); };
  switch (family) {
    case Family::Motzkin32:
      scan_stream(r, gen_motzkin32(n),
                  [](const MotzkinPath& p) { return !motzkin_violation(p.word()); }, text,
                  bytes_less);
      break;
    case Family::Large:
      scan_stream(r, gen_large(n),
                  [](const LargeMotzkinPath& p) { return !large_violation(p.word()); }, text,
                  bytes_less);
      break;
    case Family::Ncl:
      scan_stream(
          r, gen_ncl(n),
          [](const LinkedPartition& p) { return !blockwise_violation(p) && !ncl_violation(p); },
          [](const LinkedPartition& p) { return render_partition(p); },
          [](const std::string& a, const std::string& b) { return canonical_text_less(a, b); });
      break;
    case Family::SchroderLarge:
    case Family::SchroderLittle: {
      const auto variant =
          family == Family::SchroderLarge ? SchroderVariant::Large : SchroderVariant::Little;
      scan_stream(
          r, gen_schroder(n, variant),
          [&](const SchroderPath& p) {
            return !schroder_violation(p.word(), variant) && p.half_length() == n;
          },
          text, bytes_less);
      break;
    }
  }
  if (r.passed && BigInt(r.count) != predicted_count(family, n)) {
    fail(r, "generated " + std::to_string(r.count) + " objects, table says " +
                predicted_count(family, n).str());
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult check_bijectivity(int n, const Maps& maps) {
  Timer timer;
  SuiteResult r = start("bijectivity", n);
  std::unordered_set<std::string> image;
  for (const LargeMotzkinPath& path : gen_large(n)) {
    ++r.count;
    const LinkedPartition p = maps.phi(path);
    const std::string text = render_partition(p);
    if (p.size() != n + 1 || ncl_violation(p) || blockwise_violation(p)) {
      fail(r, "phi(" + in_quotes(path.text()) + ") = " + text + " is not in NCL(" +
                  std::to_string(n + 1) + ")");
      break;
    }
    if (!image.insert(text).second) {
      fail(r, "phi(" + in_quotes(path.text()) + ") = " + text + " is hit twice");
      break;
    }
  }
  if (r.passed) {
    std::size_t oracle = 0;
    for (const LinkedPartition& p : gen_ncl(n + 1)) {
      ++oracle;
      const std::string text = render_partition(p);
      if (!image.count(text)) {
        fail(r, text + " is not in the image of phi");
        break;
      }
    }
    if (r.passed && oracle != image.size()) {
      fail(r, "image has " + std::to_string(image.size()) + " partitions, NCL(" +
                  std::to_string(n + 1) + ") has " + std::to_string(oracle));
    }
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult check_round_trips(int n, const Maps& maps) {
  Timer timer;
  SuiteResult r = start("round-trips", n);
  try {
    for (const LargeMotzkinPath& path : gen_large(n)) {
      ++r.count;
      if (maps.phi_inv(maps.phi(path)) != path) {
        fail(r, "phi_inv(phi(" + in_quotes(path.text()) + ")) differs");
        break;
      }
    }
    if (r.passed) {
      for (const LinkedPartition& p : gen_ncl(n + 1)) {
        ++r.count;
        if (maps.phi(maps.phi_inv(p)) != p) {
          fail(r, "phi(phi_inv(" + render_partition(p) + ")) differs");
          break;
        }
      }
    }
  } catch (const std::exception& e) {
    fail(r, std::string("exception: ") + e.what());
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult check_case_soundness(int n, const Maps& maps) {
  Timer timer;
  SuiteResult r = start("case-soundness", n);
  for (const LargeMotzkinPath& path : gen_large(n)) {
    ++r.count;
    const std::vector<Component> components = factor_components(path);
    const OuterDecomposition outer = outer_decompose(maps.phi(path));
    bool ok = outer.m() == components.size();
    int touch = 1;
    for (std::size_t i = 0; ok && i < components.size(); ++i) {
      ok = outer.split_points[i] == touch &&
           classify_component(outer.local(i)) == component_case(components[i]);
      touch += static_cast<int>(components[i].size());
    }
    if (!ok) {
      fail(r, "components of " + in_quotes(path.text()) + " and of its image disagree");
      break;
    }
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult check_doubling(int n, const Maps& maps) {
  Timer timer;
  SuiteResult r = start("doubling", n);
  if (n < 1) {
    r.seconds = timer.seconds();
    return r;
  }
  try {
    std::vector<std::string> images;
    for (const MotzkinPath& q : gen_motzkin32(n - 1)) {
      for (ChoiceBit b : {ChoiceBit::First, ChoiceBit::Second}) {
        ++r.count;
        const LargeMotzkinPath p = maps.double_path(q, b);
        const auto back = maps.project(p);
        if (back.first != q || back.second != b) {
          fail(r, "project(double(" + in_quotes(q.text()) + ", " + bit_text(b) + ")) = (" +
                      in_quotes(back.first.text()) + ", " + bit_text(back.second) + ")");
          r.seconds = timer.seconds();
          return r;
        }
        images.push_back(p.text());
      }
    }
    std::sort(images.begin(), images.end());
    std::size_t i = 0;
    for (const LargeMotzkinPath& p : gen_large(n)) {
      const std::string text = p.text();
      if (i >= images.size() || images[i] != text) {
        fail(r, in_quotes(text) + " is not hit exactly once by double");
        break;
      }
      ++i;
      const auto [q, b] = maps.project(p);
      if (maps.double_path(q, b) != p) {
        fail(r, "double(project(" + in_quotes(text) + ")) differs");
        break;
      }
    }
    if (r.passed && i != images.size()) fail(r, in_quotes(images[i]) + " is hit more than once");
  } catch (const std::exception& e) {
    fail(r, std::string("exception: ") + e.what());
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult check_identities(std::size_t N) {
  Timer timer;
  SuiteResult r = start("identities", static_cast<long>(N));
  const IdentityReport report = verify_identities(N);
  r.count = N * report.checks.size();
  for (const IdentityCheck& c : report.checks) {
    if (!c.passed) {
      fail(r, c.name + " fails at n=" + std::to_string(*c.first_failure));
      break;
    }
  }
  r.seconds = timer.seconds();
  return r;
}

bool VerifyReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed; });
}

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  auto add = [&](SuiteResult r) { report.results.push_back(std::move(r)); };
  const int max_n = std::max(options.max_n, 0);

  for (int n = 1; n <= std::min(max_n, 6); ++n) add(check_validator_equivalence(n));
  for (int n = 0; n <= max_n; ++n) {
    add(check_family(Family::Motzkin32, n));
    add(check_family(Family::Large, n));
    add(check_family(Family::Ncl, n + 1));
    add(check_family(Family::SchroderLarge, n));
    add(check_family(Family::SchroderLittle, n));
  }
  for (int n = 0; n <= max_n; ++n) add(check_bijectivity(n, options.maps));
  for (int n = 0; n <= max_n; ++n) add(check_round_trips(n, options.maps));
  for (int n = 0; n <= max_n; ++n) add(check_case_soundness(n, options.maps));
  for (int n = 1; n <= max_n; ++n) add(check_doubling(n, options.maps));
  add(check_identities(options.identities.value_or(static_cast<std::size_t>(std::max(max_n, 1)))));
  return report;
}

std::string format_result(const SuiteResult& r) {
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.3fs", r.seconds);
  std::string line = r.suite + " n=" + std::to_string(r.n) + " count=" + std::to_string(r.count) +
                     (r.passed ? " pass " : " FAIL ") + seconds;
  if (!r.passed) line += "\n  counterexample: " + r.counterexample;
  return line;
}

}  // namespace schroder
