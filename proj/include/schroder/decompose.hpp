#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "schroder/partition.hpp"
#include "schroder/path.hpp"

namespace schroder {

// A factor of a large path that meets the x-axis only at its ends: either a
// single axis level step (l1 or l2) or an elevated path u P d.
class Component {
 public:
  struct AxisLevel {
    Step color;
    friend bool operator==(const AxisLevel&, const AxisLevel&) = default;
  };
  struct Elevated {
    Step down;
    MotzkinPath inner;
    friend bool operator==(const Elevated&, const Elevated&) = default;
  };

  // Throws std::invalid_argument unless color is L1 or L2.
  static Component axis_level(Step color);

  bool is_axis_level() const noexcept { return std::holds_alternative<AxisLevel>(value_); }
  bool is_elevated() const noexcept { return std::holds_alternative<Elevated>(value_); }
  const AxisLevel& level() const { return std::get<AxisLevel>(value_); }
  const Elevated& elevated() const { return std::get<Elevated>(value_); }

  std::size_t size() const;
  PathWord word() const;

  friend bool operator==(const Component&, const Component&) = default;

 private:
  explicit Component(std::variant<AxisLevel, Elevated> v) : value_(std::move(v)) {}
  friend Component elevate(MotzkinPath inner, Step down);

  std::variant<AxisLevel, Elevated> value_;
};

std::vector<Component> factor_components(const LargeMotzkinPath& path);
PathWord concat(const std::vector<Component>& components);

// u inner d. Throws std::invalid_argument unless down is D1 or D2.
Component elevate(MotzkinPath inner, Step down);
// Throws std::invalid_argument for an axis level component.
std::pair<MotzkinPath, Step> strip_elevation(const Component& component);
// Same, from a word; throws std::invalid_argument unless the word is u P d
// with P a Motzkin path.
std::pair<MotzkinPath, Step> strip_elevation(const PathWord& word);

// P = P(1) l3 P(2) l3 ... l3 P(k), cut at the l3 steps taken at height 0.
struct AxisSplit {
  std::vector<LargeMotzkinPath> segments;

  std::size_t k() const noexcept { return segments.size(); }
  PathWord join() const;
};

AxisSplit split_axis_l3(const MotzkinPath& path);

// Cut points of a partition at the vertices lying under no arc.
struct OuterDecomposition {
  // s_1 = 1 < s_2 < ... < s_{m+1} = n.
  std::vector<int> split_points;
  // Arcs of component i on {s_i, ..., s_{i+1}}, in global labels.
  std::vector<std::vector<Arc>> component_arcs;

  std::size_t m() const noexcept { return component_arcs.size(); }
  // Component i relabeled to 1 .. s_{i+1} - s_i + 1.
  LinkedPartition local(std::size_t i) const;
};

OuterDecomposition outer_decompose(const LinkedPartition& partition);

// Undirected connectivity through arcs; reflexive.
bool arc_reachable(const LinkedPartition& partition, int a, int b);

}  // namespace schroder
