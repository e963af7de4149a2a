#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "schroder/decompose.hpp"
#include "schroder/partition.hpp"
#include "schroder/path.hpp"

namespace schroder {

// Shape of one component of a large path, equivalently of one outer-arc
// component of a noncrossing linked partition.
enum class CaseTag {
  Level1,    // l1
  Level2,    // l2
  Ud1Plain,  // u P d1, P without axis l3
  Ud1Chain,  // u P d1, P with axis l3
  Ud2Plain,  // u P d2, P without axis l3
  Ud2Chain,  // u P d2, P with axis l3
};

std::string_view case_name(CaseTag tag) noexcept;

// A diagram placed into a larger vertex range: its vertex v lands on
// v + offset.
struct PlacedDiagram {
  LinkedPartition diagram;
  int offset = 0;

  int first_vertex() const noexcept { return offset + 1; }
  int last_vertex() const noexcept { return offset + diagram.size(); }
};

// Union of the placed arcs and `extra` over [n]. Throws std::invalid_argument
// if a placed diagram does not fit.
LinkedPartition assemble(int n, std::span<const PlacedDiagram> parts, std::span<const Arc> extra);

// Glues the last vertex of each part to the first vertex of the next one.
// Throws std::invalid_argument for an empty sequence.
LinkedPartition concat_merge(std::span<const LinkedPartition> parts);

// phi : large paths of length n -> noncrossing linked partitions of [n+1].
LinkedPartition phi(const LargeMotzkinPath& path);
CaseTag component_case(const Component& component);
LinkedPartition phi_component(const Component& component);

// Case of an outer-arc component relabeled to 1..q+1. Throws
// std::invalid_argument if it is not a component of an outer decomposition.
CaseTag classify_component(const LinkedPartition& component);

// Throws NclError for an invalid partition.
LargeMotzkinPath phi_inv(const LinkedPartition& partition);

}  // namespace schroder
