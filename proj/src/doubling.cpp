#include "schroder/doubling.hpp"

#include <stdexcept>

namespace schroder {

LargeMotzkinPath double_path(const MotzkinPath& q, ChoiceBit bit) {
  const PathWord& word = q.word();
  const bool first = bit == ChoiceBit::First;
  const auto split = first_axis_l3(word);
  if (!split) {
    PathWord out = word;
    out.push_back(first ? Step::L1 : Step::L2);
    return validate_large(std::move(out));
  }
  PathWord out = word.slice(0, *split);
  out.push_back(Step::U);
  out.append(word.slice(*split + 1, word.size() - *split - 1));
  out.push_back(first ? Step::D1 : Step::D2);
  return validate_large(std::move(out));
}

std::pair<MotzkinPath, ChoiceBit> project(const LargeMotzkinPath& path) {
  const PathWord& word = path.word();
  if (word.empty()) throw std::invalid_argument("cannot project the empty path");
  const Step last = word.back();
  if (is_level(last)) {
    return {validate_motzkin(word.slice(0, word.size() - 1)),
            last == Step::L1 ? ChoiceBit::First : ChoiceBit::Second};
  }
  // Opening u of the final elevated component: the last step leaving the axis.
  const std::vector<int> h = height_profile(word);
  std::size_t open = 0;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (h[i] == 0 && word[i] == Step::U) open = i;
  }
  PathWord out = word.slice(0, open);
  out.push_back(Step::L3);
  out.append(word.slice(open + 1, word.size() - open - 2));
  return {validate_motzkin(std::move(out)), last == Step::D1 ? ChoiceBit::First : ChoiceBit::Second};
}

}  // namespace schroder
