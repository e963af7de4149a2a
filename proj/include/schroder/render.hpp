#pragma once

#include <string>

#include "schroder/partition.hpp"
#include "schroder/path.hpp"

namespace schroder {

// Mountain diagram: '/' for u, '\' for d1/d2, the color letter for level
// steps, one column per step, highest row first. A final line repeats the
// step letters so down colors stay visible.
std::string render_ascii(const MotzkinPath& path);

// Linear representation: one row per arc nesting level (outermost on top),
// '+' at arc ends joined by '-', '|' where a taller arc passes down to its
// vertex, then a row of right-aligned vertex labels.
std::string render_ascii(const LinkedPartition& partition);

}  // namespace schroder
