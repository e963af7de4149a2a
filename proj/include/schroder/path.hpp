#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schroder {

// Colored lattice-path steps. The enumerator order matches the byte order of
// the text alphabet (U < a < b < c < x < y), so comparing words step by step
// is the same as comparing their rendered text.
enum class Step : std::uint8_t { U, L1, L2, L3, D1, D2 };

inline constexpr std::array<Step, 6> kAllSteps = {Step::U,  Step::L1, Step::L2,
                                                  Step::L3, Step::D1, Step::D2};

constexpr int height_delta(Step s) noexcept {
  switch (s) {
    case Step::U:
      return 1;
    case Step::D1:
    case Step::D2:
      return -1;
    default:
      return 0;
  }
}

constexpr bool is_level(Step s) noexcept {
  return s == Step::L1 || s == Step::L2 || s == Step::L3;
}

constexpr bool is_down(Step s) noexcept { return s == Step::D1 || s == Step::D2; }

constexpr char step_char(Step s) noexcept {
  constexpr char kChars[] = {'U', 'a', 'b', 'c', 'x', 'y'};
  return kChars[static_cast<int>(s)];
}

std::optional<Step> step_from_char(char c) noexcept;

class PathWord {
 public:
  PathWord() = default;
  explicit PathWord(std::vector<Step> steps) : steps_(std::move(steps)) {}
  PathWord(std::initializer_list<Step> steps) : steps_(steps) {}

  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  Step operator[](std::size_t i) const { return steps_[i]; }
  auto begin() const noexcept { return steps_.begin(); }
  auto end() const noexcept { return steps_.end(); }
  Step back() const { return steps_.back(); }
  const std::vector<Step>& steps() const noexcept { return steps_; }

  void push_back(Step s) { steps_.push_back(s); }
  void append(const PathWord& other) {
    steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
  }
  // Steps [first, first + count).
  PathWord slice(std::size_t first, std::size_t count) const;

  friend bool operator==(const PathWord&, const PathWord&) = default;
  friend auto operator<=>(const PathWord&, const PathWord&) = default;

 private:
  std::vector<Step> steps_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Text over {U,a,b,c,x,y}, one character per step.
PathWord parse_path(std::string_view text);
std::string render_path(const PathWord& word);

// Heights after each step; heights[0] == 0 and heights.size() == word.size() + 1.
std::vector<int> height_profile(const PathWord& word);

class PathError : public std::runtime_error {
 public:
  enum class Kind { NegativeHeight, NonzeroFinalHeight, AxisL3, AxisLevel };

  PathError(Kind kind, long value);
  Kind kind() const noexcept { return kind_; }
  // Step index for positional errors, the final height for NonzeroFinalHeight.
  long value() const noexcept { return value_; }

 private:
  Kind kind_;
  long value_;
};

bool operator==(const PathError& a, const PathError& b);

class MotzkinPath {
 public:
  MotzkinPath() = default;
  const PathWord& word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  std::string text() const { return render_path(word_); }

  friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;
  friend auto operator<=>(const MotzkinPath&, const MotzkinPath&) = default;

 private:
  explicit MotzkinPath(PathWord word) : word_(std::move(word)) {}
  friend MotzkinPath validate_motzkin(PathWord word);

  PathWord word_;
};

// (3,2)-Motzkin path whose axis level steps are colored l1 or l2 only.
class LargeMotzkinPath {
 public:
  LargeMotzkinPath() = default;
  const MotzkinPath& motzkin() const noexcept { return path_; }
  const PathWord& word() const noexcept { return path_.word(); }
  std::size_t size() const noexcept { return path_.size(); }
  std::string text() const { return path_.text(); }

  friend bool operator==(const LargeMotzkinPath&, const LargeMotzkinPath&) = default;
  friend auto operator<=>(const LargeMotzkinPath&, const LargeMotzkinPath&) = default;

 private:
  explicit LargeMotzkinPath(MotzkinPath path) : path_(std::move(path)) {}
  friend LargeMotzkinPath validate_large(PathWord word);

  MotzkinPath path_;
};

std::optional<PathError> motzkin_violation(const PathWord& word);
std::optional<PathError> large_violation(const PathWord& word);

// Both throw PathError.
MotzkinPath validate_motzkin(PathWord word);
LargeMotzkinPath validate_large(PathWord word);

// Index of the first l3 step taken at height 0, if any.
std::optional<std::size_t> first_axis_l3(const PathWord& word);

// ---------------------------------------------------------------------------
// Schroder paths: up (1,1), flat (2,0), down (1,-1).

enum class SchroderStep : std::uint8_t { Up, Flat, Down };
enum class SchroderVariant { Large, Little };

constexpr char schroder_char(SchroderStep s) noexcept {
  switch (s) {
    case SchroderStep::Up:
      return 'U';
    case SchroderStep::Flat:
      return 'F';
    default:
      return 'D';
  }
}

using SchroderWord = std::vector<SchroderStep>;

SchroderWord parse_schroder(std::string_view text);
std::string render_schroder(const SchroderWord& word);

class SchroderPath {
 public:
  const SchroderWord& word() const noexcept { return word_; }
  SchroderVariant variant() const noexcept { return variant_; }
  // The path runs from (0,0) to (2n,0).
  int half_length() const noexcept { return half_length_; }
  std::string text() const { return render_schroder(word_); }

  friend bool operator==(const SchroderPath&, const SchroderPath&) = default;

 private:
  SchroderPath(SchroderWord word, SchroderVariant variant, int half_length)
      : word_(std::move(word)), variant_(variant), half_length_(half_length) {}
  friend SchroderPath validate_schroder(SchroderWord word, SchroderVariant variant);

  SchroderWord word_;
  SchroderVariant variant_;
  int half_length_;
};

std::optional<PathError> schroder_violation(const SchroderWord& word,
                                            SchroderVariant variant);
SchroderPath validate_schroder(SchroderWord word, SchroderVariant variant);

}  // namespace schroder
