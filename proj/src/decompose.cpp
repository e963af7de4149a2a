#include "schroder/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schroder {

Component Component::axis_level(Step color) {
  if (color != Step::L1 && color != Step::L2) {
    throw std::invalid_argument("an axis level component is colored l1 or l2");
  }
  return Component(AxisLevel{color});
}

std::size_t Component::size() const {
  return is_axis_level() ? 1 : elevated().inner.size() + 2;
}

PathWord Component::word() const {
  if (is_axis_level()) return PathWord{level().color};
  PathWord w{Step::U};
  w.append(elevated().inner.word());
  w.push_back(elevated().down);
  return w;
}

std::vector<Component> factor_components(const LargeMotzkinPath& path) {
  const PathWord& word = path.word();
  std::vector<Component> out;
  std::size_t i = 0;
  while (i < word.size()) {
    if (is_level(word[i])) {
      out.push_back(Component::axis_level(word[i]));
      ++i;
      continue;
    }
    // word[i] == U at height 0; find the matching return to the axis.
    int h = 0;
    std::size_t j = i;
    do {
      h += height_delta(word[j]);
      ++j;
    } while (h != 0);
    out.push_back(elevate(validate_motzkin(word.slice(i + 1, j - i - 2)), word[j - 1]));
    i = j;
  }
  return out;
}

PathWord concat(const std::vector<Component>& components) {
  PathWord w;
  for (const Component& c : components) w.append(c.word());
  return w;
}

Component elevate(MotzkinPath inner, Step down) {
  if (!is_down(down)) throw std::invalid_argument("an elevated path closes with d1 or d2");
  return Component(Component::Elevated{down, std::move(inner)});
}

std::pair<MotzkinPath, Step> strip_elevation(const Component& component) {
  if (!component.is_elevated()) {
    throw std::invalid_argument("an axis level step has no elevation to strip");
  }
  return {component.elevated().inner, component.elevated().down};
}

std::pair<MotzkinPath, Step> strip_elevation(const PathWord& word) {
  if (word.size() < 2 || word[0] != Step::U || !is_down(word.back())) {
    throw std::invalid_argument("not an elevated path: " + render_path(word));
  }
  PathWord inner = word.slice(1, word.size() - 2);
  if (motzkin_violation(inner)) {
    throw std::invalid_argument("not an elevated path: " + render_path(word));
  }
  return {validate_motzkin(std::move(inner)), word.back()};
}

PathWord AxisSplit::join() const {
  PathWord w;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i) w.push_back(Step::L3);
    w.append(segments[i].word());
  }
  return w;
}

AxisSplit split_axis_l3(const MotzkinPath& path) {
  const PathWord& word = path.word();
  AxisSplit split;
  std::size_t start = 0;
  int h = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (h == 0 && word[i] == Step::L3) {
      split.segments.push_back(validate_large(word.slice(start, i - start)));
      start = i + 1;
    }
    h += height_delta(word[i]);
  }
  split.segments.push_back(validate_large(word.slice(start, word.size() - start)));
  return split;
}

LinkedPartition OuterDecomposition::local(std::size_t i) const {
  const int first = split_points[i];
  const int size = split_points[i + 1] - first + 1;
  std::vector<Arc> arcs;
  arcs.reserve(component_arcs[i].size());
  for (const Arc& a : component_arcs[i]) arcs.push_back({a.left - first + 1, a.right - first + 1});
  return LinkedPartition(size, std::move(arcs));
}

OuterDecomposition outer_decompose(const LinkedPartition& partition) {
  const int n = partition.size();
  // covered[v] > 0 iff some arc has v strictly inside it.
  std::vector<int> delta(n + 2, 0);
  for (const Arc& a : partition.arcs()) {
    ++delta[a.left + 1];
    --delta[a.right];
  }
  OuterDecomposition out;
  int covered = 0;
  for (int v = 1; v <= n; ++v) {
    covered += delta[v];
    if (covered == 0) out.split_points.push_back(v);
  }
  out.component_arcs.resize(out.split_points.size() - 1);
  // Arcs never straddle a split point, so each arc sits in exactly one component.
  for (const Arc& a : partition.arcs()) {
    auto it = std::upper_bound(out.split_points.begin(), out.split_points.end(), a.left);
    auto index = static_cast<std::size_t>(it - out.split_points.begin()) - 1;
    out.component_arcs[index].push_back(a);
  }
  return out;
}

bool arc_reachable(const LinkedPartition& partition, int a, int b) {
  std::vector<int> parent(partition.size() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Arc& arc : partition.arcs()) parent[find(arc.left)] = find(arc.right);
  return find(a) == find(b);
}

}  // namespace schroder
