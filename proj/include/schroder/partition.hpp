#pragma once

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schroder {

// Arc of the linear representation, 1-based, left < right.
struct Arc {
  int left = 0;
  int right = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// A linked partition of [n] stored as its arc set. Blocks are derived: each
// vertex with outgoing arcs heads the block {v} + targets, and a vertex that
// touches no arc is a singleton. Construction only checks that arcs lie in
// [n]; validity as a noncrossing linked partition is checked separately.
class LinkedPartition {
 public:
  LinkedPartition() : n_(1) {}
  // Throws std::invalid_argument for n < 1 or an arc outside [n].
  LinkedPartition(int n, std::vector<Arc> arcs);

  int size() const noexcept { return n_; }
  // Sorted, no duplicates.
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  bool has_arc(int left, int right) const;

  // Same arcs, vertex v renumbered to v + offset, on a larger vertex set.
  LinkedPartition shifted(int offset, int new_size) const;
  // Arcs inside [first, last], renumbered so that `first` becomes 1.
  LinkedPartition restricted(int first, int last) const;

  friend bool operator==(const LinkedPartition&, const LinkedPartition&) = default;

 private:
  int n_;
  std::vector<Arc> arcs_;
};

using Block = std::vector<int>;
using BlockList = std::vector<Block>;

class NclError : public std::runtime_error {
 public:
  enum class Kind {
    InDegree,
    CrossingArcs,
    NearlyDisjointViolation,
    BlockCrossing,
    Cover,
  };

  static NclError in_degree(int vertex);
  static NclError crossing(Arc a, Arc b);
  static NclError nearly_disjoint(Block a, Block b);
  static NclError block_crossing(Block a, Block b);
  static NclError cover(int vertex);

  Kind kind() const noexcept { return kind_; }
  int vertex() const noexcept { return vertex_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const BlockList& blocks() const noexcept { return blocks_; }

 private:
  NclError(Kind kind, std::string what) : std::runtime_error(std::move(what)), kind_(kind) {}

  Kind kind_;
  int vertex_ = 0;
  std::vector<Arc> arcs_;
  BlockList blocks_;
};

// Arc characterization: in-degree at most one and pairwise noncrossing arcs.
std::optional<NclError> ncl_violation(const LinkedPartition& p);
// Throws NclError.
const LinkedPartition& validate_ncl(const LinkedPartition& p);

// The block-level definition evaluated literally: blocks cover [n], every pair
// of blocks is nearly disjoint, and no two blocks cross.
std::optional<NclError> blockwise_violation(const BlockList& blocks, int n);
std::optional<NclError> blockwise_violation(const LinkedPartition& p);
const LinkedPartition& validate_ncl_blockwise(const LinkedPartition& p);

// Blocks sorted by minimum, each ascending.
BlockList blocks_of(const LinkedPartition& p);

// "{1,4,8}{2,3}" -> literal blocks, no semantic checks. Throws ParseError.
BlockList parse_blocks(std::string_view text);
// Parses block text and converts it to arcs. The vertex count is the largest
// label; every vertex of [n] must be covered and the literal blocks must be
// pairwise nearly disjoint (so "{1}{1,2}" and "{1,2}{1,3}" are rejected).
// Noncrossing is left to validate_ncl.
LinkedPartition parse_partition(std::string_view text);

std::string render_blocks(const BlockList& blocks);
std::string render_partition(const LinkedPartition& p);

// Order on canonical partition text that compares labels numerically:
// ',' < label < '{' < '}'. Agrees with byte order while labels are one digit.
bool canonical_text_less(std::string_view a, std::string_view b);

}  // namespace schroder
