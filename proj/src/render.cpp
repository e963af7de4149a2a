#include "schroder/render.hpp"

#include <algorithm>
#include <vector>

namespace schroder {

std::string render_ascii(const MotzkinPath& path) {
  const PathWord& word = path.word();
  std::vector<int> heights = height_profile(word);

  // Row index (from the bottom) each step is drawn in.
  std::vector<int> rows(word.size());
  int top = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    rows[i] = is_down(word[i]) ? heights[i] - 1 : heights[i];
    top = std::max(top, rows[i]);
  }

  std::vector<std::string> grid(static_cast<std::size_t>(top) + 1, std::string(word.size(), ' '));
  for (std::size_t i = 0; i < word.size(); ++i) {
    char c = word[i] == Step::U ? '/' : is_down(word[i]) ? '\\' : step_char(word[i]);
    grid[static_cast<std::size_t>(rows[i])][i] = c;
  }

  std::string out;
  for (auto row = grid.rbegin(); row != grid.rend(); ++row) {
    std::string line = *row;
    line.erase(line.find_last_not_of(' ') + 1);
    out += line;
    out += '\n';
  }
  out += render_path(word);
  out += '\n';
  return out;
}

std::string render_ascii(const LinkedPartition& partition) {
  const int n = partition.size();
  const int width = static_cast<int>(std::to_string(n).size()) + 1;
  auto column = [&](int v) { return static_cast<std::size_t>(v * width - 1); };

  // Nesting level: 1 + the tallest arc lying under it (shared ends allowed).
  std::vector<Arc> arcs(partition.arcs().begin(), partition.arcs().end());
  std::sort(arcs.begin(), arcs.end(),
            [](const Arc& a, const Arc& b) { return a.right - a.left < b.right - b.left; });
  std::vector<int> level(arcs.size(), 1);
  int top = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (arcs[i].left <= arcs[j].left && arcs[j].right <= arcs[i].right) {
        level[i] = std::max(level[i], level[j] + 1);
      }
    }
    top = std::max(top, level[i]);
  }

  const std::size_t line_width = column(n) + 1;
  std::string out;
  for (int row = top; row >= 1; --row) {
    std::string line(line_width, ' ');
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (level[i] != row) continue;
      for (std::size_t c = column(arcs[i].left); c <= column(arcs[i].right); ++c) line[c] = '-';
    }
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (level[i] == row) {
        line[column(arcs[i].left)] = '+';
        line[column(arcs[i].right)] = '+';
      } else if (level[i] > row) {
        for (int v : {arcs[i].left, arcs[i].right}) {
          if (line[column(v)] == ' ') line[column(v)] = '|';
        }
      }
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out += line;
    out += '\n';
  }
  std::string labels;
  for (int v = 1; v <= n; ++v) {
    std::string label = std::to_string(v);
    labels += std::string(static_cast<std::size_t>(width) - label.size(), ' ') + label;
  }
  out += labels;
  out += '\n';
  return out;
}

}  // namespace schroder
