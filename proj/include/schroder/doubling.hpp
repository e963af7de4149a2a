#pragma once

#include <utility>

#include "schroder/path.hpp"

namespace schroder {

// Which of the two colors the doubling picks: First selects l1 (appended
// level step) or d1 (closing down step), Second selects l2 or d2.
enum class ChoiceBit { First = 0, Second = 1 };

// Q of length n-1, b -> large path of length n.
//   Q without axis l3:          Q + (l1 | l2)
//   Q = Q1 l3 Q2 at the first axis l3:  Q1 u Q2 (d1 | d2)
LargeMotzkinPath double_path(const MotzkinPath& q, ChoiceBit bit);

// Inverse of double_path. Throws std::invalid_argument for the empty path.
std::pair<MotzkinPath, ChoiceBit> project(const LargeMotzkinPath& path);

}  // namespace schroder
