#include "schroder/bijection.hpp"

#include <stdexcept>
#include <string>

namespace schroder {

std::string_view case_name(CaseTag tag) noexcept {
  switch (tag) {
    case CaseTag::Level1:
      return "LEVEL1";
    case CaseTag::Level2:
      return "LEVEL2";
    case CaseTag::Ud1Plain:
      return "UD1_PLAIN";
    case CaseTag::Ud1Chain:
      return "UD1_CHAIN";
    case CaseTag::Ud2Plain:
      return "UD2_PLAIN";
    case CaseTag::Ud2Chain:
      return "UD2_CHAIN";
  }
  return "?";
}

LinkedPartition assemble(int n, std::span<const PlacedDiagram> parts, std::span<const Arc> extra) {
  std::vector<Arc> arcs(extra.begin(), extra.end());
  for (const PlacedDiagram& part : parts) {
    if (part.offset < 0 || part.last_vertex() > n) {
      throw std::invalid_argument("placed diagram does not fit in [" + std::to_string(n) + "]");
    }
    for (const Arc& a : part.diagram.arcs()) {
      arcs.push_back({a.left + part.offset, a.right + part.offset});
    }
  }
  return LinkedPartition(n, std::move(arcs));
}

LinkedPartition concat_merge(std::span<const LinkedPartition> parts) {
  if (parts.empty()) throw std::invalid_argument("concat_merge needs at least one part");
  std::vector<PlacedDiagram> placed;
  placed.reserve(parts.size());
  int offset = 0;
  for (const LinkedPartition& part : parts) {
    placed.push_back({part, offset});
    offset += part.size() - 1;
  }
  return assemble(offset + 1, placed, {});
}

namespace {

// tau(S): phi(S) on 1..t+1 plus the spine arc (1, t+2).
LinkedPartition tau(const LargeMotzkinPath& segment) {
  const int t = static_cast<int>(segment.size());
  const PlacedDiagram body{phi(segment), 0};
  const Arc spine{1, t + 2};
  return assemble(t + 2, {&body, 1}, {&spine, 1});
}

LinkedPartition chain(std::span<const LargeMotzkinPath> segments) {
  std::vector<LinkedPartition> taus;
  taus.reserve(segments.size());
  for (const LargeMotzkinPath& s : segments) taus.push_back(tau(s));
  return concat_merge(taus);
}

}  // namespace

CaseTag component_case(const Component& component) {
  if (component.is_axis_level()) {
    return component.level().color == Step::L1 ? CaseTag::Level1 : CaseTag::Level2;
  }
  const auto& e = component.elevated();
  const bool plain = !first_axis_l3(e.inner.word()).has_value();
  if (e.down == Step::D1) return plain ? CaseTag::Ud1Plain : CaseTag::Ud1Chain;
  return plain ? CaseTag::Ud2Plain : CaseTag::Ud2Chain;
}

LinkedPartition phi_component(const Component& component) {
  const CaseTag tag = component_case(component);
  if (tag == CaseTag::Level1) return LinkedPartition(2, {{1, 2}});
  if (tag == CaseTag::Level2) return LinkedPartition(2, {});

  const MotzkinPath& inner = component.elevated().inner;
  const int p = static_cast<int>(component.size());
  const Arc outer{1, p + 1};

  switch (tag) {
    case CaseTag::Ud1Plain: {
      // {1, p, p+1} with phi(inner) on 1..p-1.
      const PlacedDiagram body{phi(validate_large(inner.word())), 0};
      const Arc arcs[] = {{1, p}, outer};
      return assemble(p + 1, {&body, 1}, arcs);
    }
    case CaseTag::Ud2Plain: {
      // {1, p+1}{p} with phi(inner) on 1..p-1.
      const PlacedDiagram body{phi(validate_large(inner.word())), 0};
      return assemble(p + 1, {&body, 1}, {&outer, 1});
    }
    case CaseTag::Ud1Chain: {
      const AxisSplit split = split_axis_l3(inner);
      const PlacedDiagram omega{chain(split.segments), 0};
      return assemble(p + 1, {&omega, 1}, {&outer, 1});
    }
    case CaseTag::Ud2Chain: {
      const AxisSplit split = split_axis_l3(inner);
      const LargeMotzkinPath& first = split.segments.front();
      const PlacedDiagram parts[] = {
          {phi(first), 0},
          // nu on t_1 + 2 .. p
          {chain(std::span(split.segments).subspan(1)), static_cast<int>(first.size()) + 1},
      };
      return assemble(p + 1, parts, {&outer, 1});
    }
    default:
      break;
  }
  throw std::logic_error("unreachable component case");
}

LinkedPartition phi(const LargeMotzkinPath& path) {
  const std::vector<Component> components = factor_components(path);
  if (components.empty()) return LinkedPartition(1, {});
  std::vector<LinkedPartition> parts;
  parts.reserve(components.size());
  for (const Component& c : components) parts.push_back(phi_component(c));
  return concat_merge(parts);
}

namespace {

// source[v] is the left end of the arc into v, 0 if none.
std::vector<int> incoming_sources(const LinkedPartition& p) {
  std::vector<int> source(p.size() + 1, 0);
  for (const Arc& a : p.arcs()) source[a.right] = a.left;
  return source;
}

}  // namespace

CaseTag classify_component(const LinkedPartition& component) {
  const int q = component.size() - 1;
  if (q < 1) throw std::invalid_argument("a component spans at least two vertices");
  if (q == 1) return component.has_arc(1, 2) ? CaseTag::Level1 : CaseTag::Level2;
  if (!component.has_arc(1, q + 1)) {
    throw std::invalid_argument("component of " + std::to_string(q + 1) +
                                " vertices lacks its outer arc (1," + std::to_string(q + 1) + ")");
  }
  if (component.has_arc(1, q)) return CaseTag::Ud1Plain;
  if (arc_reachable(component, 1, q)) return CaseTag::Ud1Chain;
  for (const Arc& a : component.arcs()) {
    if (a.left == q || a.right == q) return CaseTag::Ud2Chain;
  }
  return CaseTag::Ud2Plain;
}

namespace {

PathWord invert(const LinkedPartition& partition);

PathWord invert_component(const LinkedPartition& component) {
  const CaseTag tag = classify_component(component);
  if (tag == CaseTag::Level1) return PathWord{Step::L1};
  if (tag == CaseTag::Level2) return PathWord{Step::L2};

  const int q = component.size() - 1;
  PathWord inner;
  Step down = Step::D1;

  if (tag == CaseTag::Ud1Plain) {
    inner = invert(component.restricted(1, q - 1));
  } else if (tag == CaseTag::Ud2Plain) {
    inner = invert(component.restricted(1, q - 1));
    down = Step::D2;
  } else {
    // Walk the spine backwards from q along the unique incoming arcs.
    const std::vector<int> source = incoming_sources(component);
    std::vector<int> spine{q};
    while (source[spine.back()] != 0) spine.push_back(source[spine.back()]);
    const int start = spine.back();
    if ((start == 1) != (tag == CaseTag::Ud1Chain)) {
      throw std::logic_error("component spine disagrees with its case");
    }
    if (tag == CaseTag::Ud2Chain) {
      down = Step::D2;
      inner = invert(component.restricted(1, start - 1));
    }
    // spine is q, ..., start; segment i sits on [a_i, a_{i+1} - 1].
    for (std::size_t i = spine.size() - 1; i > 0; --i) {
      if (tag == CaseTag::Ud2Chain || i != spine.size() - 1) inner.push_back(Step::L3);
      inner.append(invert(component.restricted(spine[i], spine[i - 1] - 1)));
    }
  }

  PathWord word{Step::U};
  word.append(inner);
  word.push_back(down);
  return word;
}

PathWord invert(const LinkedPartition& partition) {
  const OuterDecomposition outer = outer_decompose(partition);
  PathWord word;
  for (std::size_t i = 0; i < outer.m(); ++i) word.append(invert_component(outer.local(i)));
  return word;
}

}  // namespace

LargeMotzkinPath phi_inv(const LinkedPartition& partition) {
  validate_ncl(partition);
  return validate_large(invert(partition));
}

}  // namespace schroder
