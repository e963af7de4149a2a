#include "schroder/path.hpp"

#include <string>

namespace schroder {

std::optional<Step> step_from_char(char c) noexcept {
  switch (c) {
    case 'U':
      return Step::U;
    case 'a':
      return Step::L1;
    case 'b':
      return Step::L2;
    case 'c':
      return Step::L3;
    case 'x':
      return Step::D1;
    case 'y':
      return Step::D2;
    default:
      return std::nullopt;
  }
}

PathWord PathWord::slice(std::size_t first, std::size_t count) const {
  return PathWord(std::vector<Step>(steps_.begin() + static_cast<std::ptrdiff_t>(first),
                                    steps_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

PathWord parse_path(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto s = step_from_char(text[i]);
    if (!s) {
      throw ParseError("unknown path step '" + std::string(1, text[i]) + "' at offset " +
                           std::to_string(i),
                       i);
    }
    steps.push_back(*s);
  }
  return PathWord(std::move(steps));
}

std::string render_path(const PathWord& word) {
  std::string out;
  out.reserve(word.size());
  for (Step s : word) out.push_back(step_char(s));
  return out;
}

std::vector<int> height_profile(const PathWord& word) {
  std::vector<int> h(word.size() + 1, 0);
  for (std::size_t i = 0; i < word.size(); ++i) h[i + 1] = h[i] + height_delta(word[i]);
  return h;
}

namespace {

std::string describe(PathError::Kind kind, long value) {
  switch (kind) {
    case PathError::Kind::NegativeHeight:
      return "path goes below the x-axis at step " + std::to_string(value);
    case PathError::Kind::NonzeroFinalHeight:
      return "path ends at height " + std::to_string(value);
    case PathError::Kind::AxisL3:
      return "level step l3 on the x-axis at step " + std::to_string(value);
    case PathError::Kind::AxisLevel:
      return "level step on the x-axis at step " + std::to_string(value);
  }
  return "invalid path";
}

}  // namespace

PathError::PathError(Kind kind, long value)
    : std::runtime_error(describe(kind, value)), kind_(kind), value_(value) {}

bool operator==(const PathError& a, const PathError& b) {
  return a.kind() == b.kind() && a.value() == b.value();
}

std::optional<PathError> motzkin_violation(const PathWord& word) {
  long h = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    h += height_delta(word[i]);
    if (h < 0) return PathError(PathError::Kind::NegativeHeight, static_cast<long>(i));
  }
  if (h != 0) return PathError(PathError::Kind::NonzeroFinalHeight, h);
  return std::nullopt;
}

std::optional<PathError> large_violation(const PathWord& word) {
  if (auto err = motzkin_violation(word)) return err;
  if (auto pos = first_axis_l3(word)) {
    return PathError(PathError::Kind::AxisL3, static_cast<long>(*pos));
  }
  return std::nullopt;
}

MotzkinPath validate_motzkin(PathWord word) {
  if (auto err = motzkin_violation(word)) throw *err;
  return MotzkinPath(std::move(word));
}

LargeMotzkinPath validate_large(PathWord word) {
  if (auto err = large_violation(word)) throw *err;
  return LargeMotzkinPath(validate_motzkin(std::move(word)));
}

std::optional<std::size_t> first_axis_l3(const PathWord& word) {
  int h = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (h == 0 && word[i] == Step::L3) return i;
    h += height_delta(word[i]);
  }
  return std::nullopt;
}

SchroderWord parse_schroder(std::string_view text) {
  SchroderWord word;
  word.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U':
        word.push_back(SchroderStep::Up);
        break;
      case 'F':
        word.push_back(SchroderStep::Flat);
        break;
      case 'D':
        word.push_back(SchroderStep::Down);
        break;
      default:
        throw ParseError("unknown Schroder step '" + std::string(1, text[i]) +
                             "' at offset " + std::to_string(i),
                         i);
    }
  }
  return word;
}

std::string render_schroder(const SchroderWord& word) {
  std::string out;
  out.reserve(word.size());
  for (SchroderStep s : word) out.push_back(schroder_char(s));
  return out;
}

std::optional<PathError> schroder_violation(const SchroderWord& word,
                                            SchroderVariant variant) {
  long h = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    switch (word[i]) {
      case SchroderStep::Up:
        ++h;
        break;
      case SchroderStep::Down:
        if (--h < 0) return PathError(PathError::Kind::NegativeHeight, static_cast<long>(i));
        break;
      case SchroderStep::Flat:
        if (h == 0 && variant == SchroderVariant::Little) {
          return PathError(PathError::Kind::AxisLevel, static_cast<long>(i));
        }
        break;
    }
  }
  if (h != 0) return PathError(PathError::Kind::NonzeroFinalHeight, h);
  return std::nullopt;
}

SchroderPath validate_schroder(SchroderWord word, SchroderVariant variant) {
  if (auto err = schroder_violation(word, variant)) throw *err;
  int half = 0;
  for (SchroderStep s : word) half += (s == SchroderStep::Flat) ? 2 : 1;
  return SchroderPath(std::move(word), variant, half / 2);
}

}  // namespace schroder
