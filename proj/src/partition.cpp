#include "schroder/partition.hpp"

#include <algorithm>
#include <charconv>

#include "schroder/path.hpp"

namespace schroder {

LinkedPartition::LinkedPartition(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n_ < 1) throw std::invalid_argument("a linked partition needs at least one vertex");
  for (const Arc& a : arcs_) {
    if (a.left < 1 || a.right > n_ || a.left >= a.right) {
      throw std::invalid_argument("arc (" + std::to_string(a.left) + "," +
                                  std::to_string(a.right) + ") is not an arc over [" +
                                  std::to_string(n_) + "]");
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
}

bool LinkedPartition::has_arc(int left, int right) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{left, right});
}

LinkedPartition LinkedPartition::shifted(int offset, int new_size) const {
  std::vector<Arc> out;
  out.reserve(arcs_.size());
  for (const Arc& a : arcs_) out.push_back({a.left + offset, a.right + offset});
  return LinkedPartition(new_size, std::move(out));
}

LinkedPartition LinkedPartition::restricted(int first, int last) const {
  std::vector<Arc> out;
  for (const Arc& a : arcs_) {
    if (a.left >= first && a.right <= last) out.push_back({a.left - first + 1, a.right - first + 1});
  }
  return LinkedPartition(last - first + 1, std::move(out));
}

namespace {

std::string arc_text(Arc a) {
  return "(" + std::to_string(a.left) + "," + std::to_string(a.right) + ")";
}

}  // namespace

NclError NclError::in_degree(int vertex) {
  NclError e(Kind::InDegree,
             "vertex " + std::to_string(vertex) + " is the right end of more than one arc");
  e.vertex_ = vertex;
  return e;
}

NclError NclError::crossing(Arc a, Arc b) {
  NclError e(Kind::CrossingArcs, "arcs " + arc_text(a) + " and " + arc_text(b) + " cross");
  e.arcs_ = {a, b};
  return e;
}

NclError NclError::nearly_disjoint(Block a, Block b) {
  NclError e(Kind::NearlyDisjointViolation, "blocks " + render_blocks({a}) + " and " +
                                                render_blocks({b}) + " are not nearly disjoint");
  e.blocks_ = {std::move(a), std::move(b)};
  return e;
}

NclError NclError::block_crossing(Block a, Block b) {
  NclError e(Kind::BlockCrossing,
             "blocks " + render_blocks({a}) + " and " + render_blocks({b}) + " cross");
  e.blocks_ = {std::move(a), std::move(b)};
  return e;
}

NclError NclError::cover(int vertex) {
  NclError e(Kind::Cover, "vertex " + std::to_string(vertex) + " is not covered by any block");
  e.vertex_ = vertex;
  return e;
}

std::optional<NclError> ncl_violation(const LinkedPartition& p) {
  std::vector<int> indegree(static_cast<std::size_t>(p.size()) + 1, 0);
  for (const Arc& a : p.arcs()) {
    if (++indegree[static_cast<std::size_t>(a.right)] > 1) return NclError::in_degree(a.right);
  }

  // Sweep by left end; arcs sharing a left end go outermost first, so the open
  // arcs always form a nested stack.
  std::vector<Arc> order(p.arcs().begin(), p.arcs().end());
  std::sort(order.begin(), order.end(), [](const Arc& x, const Arc& y) {
    return x.left != y.left ? x.left < y.left : x.right > y.right;
  });
  std::vector<Arc> open;
  for (const Arc& a : order) {
    while (!open.empty() && open.back().right <= a.left) open.pop_back();
    if (!open.empty() && open.back().left < a.left && open.back().right < a.right) {
      return NclError::crossing(open.back(), a);
    }
    open.push_back(a);
  }
  return std::nullopt;
}

const LinkedPartition& validate_ncl(const LinkedPartition& p) {
  if (auto err = ncl_violation(p)) throw *err;
  return p;
}

BlockList blocks_of(const LinkedPartition& p) {
  const auto n = static_cast<std::size_t>(p.size());
  std::vector<std::vector<int>> targets(n + 1);
  std::vector<bool> has_incoming(n + 1, false);
  for (const Arc& a : p.arcs()) {
    targets[static_cast<std::size_t>(a.left)].push_back(a.right);
    has_incoming[static_cast<std::size_t>(a.right)] = true;
  }
  BlockList blocks;
  for (std::size_t v = 1; v <= n; ++v) {
    if (!targets[v].empty()) {
      Block b{static_cast<int>(v)};
      b.insert(b.end(), targets[v].begin(), targets[v].end());
      std::sort(b.begin(), b.end());
      blocks.push_back(std::move(b));
    } else if (!has_incoming[v]) {
      blocks.push_back({static_cast<int>(v)});
    }
  }
  return blocks;
}

namespace {

int block_min(const Block& b) { return *std::min_element(b.begin(), b.end()); }

bool contains(const Block& b, int k) { return std::find(b.begin(), b.end(), k) != b.end(); }

// Condition (a) of near-disjointness for the shared element k, seen from `own`.
bool shared_as_min(const Block& own, const Block& other, int k) {
  return k == block_min(own) && own.size() > 1 && k != block_min(other);
}

bool nearly_disjoint(const Block& x, const Block& y) {
  for (int k : x) {
    if (!contains(y, k)) continue;
    if (!shared_as_min(x, y, k) && !shared_as_min(y, x, k)) return false;
  }
  return true;
}

// i1 < i2 < j1 < j2 with i1, j1 in x and i2, j2 in y.
bool crosses_into(const Block& x, const Block& y) {
  for (int i1 : x) {
    for (int j1 : x) {
      if (!(i1 < j1)) continue;
      for (int i2 : y) {
        if (!(i1 < i2 && i2 < j1)) continue;
        for (int j2 : y) {
          if (j1 < j2) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

std::optional<NclError> blockwise_violation(const BlockList& blocks, int n) {
  std::vector<bool> covered(static_cast<std::size_t>(std::max(n, 0)) + 1, false);
  for (const Block& b : blocks) {
    for (int v : b) {
      if (v >= 1 && v <= n) covered[static_cast<std::size_t>(v)] = true;
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (!covered[static_cast<std::size_t>(v)]) return NclError::cover(v);
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (!nearly_disjoint(blocks[i], blocks[j])) {
        return NclError::nearly_disjoint(blocks[i], blocks[j]);
      }
    }
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (crosses_into(blocks[i], blocks[j]) || crosses_into(blocks[j], blocks[i])) {
        return NclError::block_crossing(blocks[i], blocks[j]);
      }
    }
  }
  return std::nullopt;
}

std::optional<NclError> blockwise_violation(const LinkedPartition& p) {
  // A vertex with two incoming arcs shows up as a non-minimum of two blocks.
  return blockwise_violation(blocks_of(p), p.size());
}

const LinkedPartition& validate_ncl_blockwise(const LinkedPartition& p) {
  if (auto err = blockwise_violation(p)) throw *err;
  return p;
}

BlockList parse_blocks(std::string_view text) {
  BlockList blocks;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError(what + " at offset " + std::to_string(i), i);
  };
  while (i < text.size()) {
    if (text[i] != '{') throw fail("expected '{'");
    ++i;
    Block block;
    while (true) {
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (start == i) {
        i = start;
        throw fail("expected a vertex label");
      }
      int v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, v);
      if (ec != std::errc{} || v < 1) {
        i = start;
        throw fail("vertex label out of range");
      }
      if (contains(block, v)) {
        i = start;
        throw fail("repeated vertex " + std::to_string(v) + " in a block");
      }
      block.push_back(v);
      if (i >= text.size()) throw fail("unterminated block");
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == '}') {
        ++i;
        break;
      }
      throw fail("expected ',' or '}'");
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

LinkedPartition parse_partition(std::string_view text) {
  BlockList blocks = parse_blocks(text);
  if (blocks.empty()) throw ParseError("empty partition text", 0);
  int n = 0;
  for (const Block& b : blocks) n = std::max(n, *std::max_element(b.begin(), b.end()));
  if (auto err = blockwise_violation(blocks, n);
      err && err->kind() != NclError::Kind::BlockCrossing) {
    throw *err;
  }
  std::vector<Arc> arcs;
  for (const Block& b : blocks) {
    int lo = block_min(b);
    for (int v : b) {
      if (v != lo) arcs.push_back({lo, v});
    }
  }
  return LinkedPartition(n, std::move(arcs));
}

std::string render_blocks(const BlockList& blocks) {
  std::string out;
  for (const Block& b : blocks) {
    out.push_back('{');
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(b[i]);
    }
    out.push_back('}');
  }
  return out;
}

std::string render_partition(const LinkedPartition& p) { return render_blocks(blocks_of(p)); }

namespace {

struct Token {
  int rank;  // ',' = 0, label = 1, '{' = 2, '}' = 3, anything else = 4
  long long value;
};

Token next_token(std::string_view s, std::size_t& i) {
  char c = s[i];
  if (c >= '0' && c <= '9') {
    long long v = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') v = v * 10 + (s[i++] - '0');
    return {1, v};
  }
  ++i;
  switch (c) {
    case ',':
      return {0, 0};
    case '{':
      return {2, 0};
    case '}':
      return {3, 0};
    default:
      return {4, static_cast<unsigned char>(c)};
  }
}

}  // namespace

bool canonical_text_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    Token x = next_token(a, i);
    Token y = next_token(b, j);
    if (x.rank != y.rank) return x.rank < y.rank;
    if (x.value != y.value) return x.value < y.value;
  }
  return i == a.size() && j < b.size();
}

}  // namespace schroder
