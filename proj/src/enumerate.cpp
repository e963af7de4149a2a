#include "schroder/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace schroder {

namespace {

// Words of length n in lexicographic order that stay weakly above the axis
// and return to it, subject to an extra per-step rule `allowed(step, height)`.
template <typename Allowed>
Generator<PathWord> motzkin_words(int n, Allowed allowed) {
  std::vector<Step> word(n);
  std::vector<int> choice(n + 1, -1);
  std::vector<int> height(n + 1, 0);
  int pos = 0;
  while (true) {
    if (pos == n) {
      co_yield PathWord(word);
      if (n == 0) co_return;
      --pos;
    }
    bool placed = false;
    for (int c = choice[pos] + 1; c < static_cast<int>(kAllSteps.size()); ++c) {
      const Step s = kAllSteps[c];
      const int h = height[pos] + height_delta(s);
      if (h < 0 || h > n - pos - 1 || !allowed(s, height[pos])) continue;
      choice[pos] = c;
      word[pos] = s;
      height[pos + 1] = h;
      placed = true;
      break;
    }
    if (!placed) {
      choice[pos] = -1;
      if (pos == 0) co_return;
      --pos;
      continue;
    }
    ++pos;
  }
}

}  // namespace

Generator<MotzkinPath> gen_motzkin32(int n) {
  if (n < 0) throw std::invalid_argument("path length must be nonnegative");
  for (const PathWord& w : motzkin_words(n, [](Step, int) { return true; })) {
    co_yield validate_motzkin(w);
  }
}

Generator<LargeMotzkinPath> gen_large(int n) {
  if (n < 0) throw std::invalid_argument("path length must be nonnegative");
  auto no_axis_l3 = [](Step s, int h) { return !(s == Step::L3 && h == 0); };
  for (const PathWord& w : motzkin_words(n, no_axis_l3)) co_yield validate_large(w);
}

Generator<SchroderPath> gen_schroder(int n, SchroderVariant variant) {
  if (n < 0) throw std::invalid_argument("half-length must be nonnegative");
  const int width = 2 * n;
  // Byte order of the letters D < F < U.
  constexpr SchroderStep kOrder[] = {SchroderStep::Down, SchroderStep::Flat, SchroderStep::Up};
  SchroderWord word;
  std::vector<int> choice{-1};
  std::vector<int> x{0};
  std::vector<int> h{0};
  while (true) {
    const std::size_t pos = word.size();
    if (x[pos] == width && choice[pos] == -1) {
      co_yield validate_schroder(word, variant);
      choice[pos] = 3;
    }
    bool placed = false;
    for (int c = choice[pos] + 1; c < 3; ++c) {
      const SchroderStep s = kOrder[c];
      const int dx = s == SchroderStep::Flat ? 2 : 1;
      const int dh = s == SchroderStep::Up ? 1 : s == SchroderStep::Down ? -1 : 0;
      const int nx = x[pos] + dx;
      const int nh = h[pos] + dh;
      if (nh < 0 || nx > width || nh > width - nx) continue;
      if (s == SchroderStep::Flat && h[pos] == 0 && variant == SchroderVariant::Little) continue;
      choice[pos] = c;
      word.push_back(s);
      choice.push_back(-1);
      x.push_back(nx);
      h.push_back(nh);
      placed = true;
      break;
    }
    if (!placed) {
      if (pos == 0) co_return;
      word.pop_back();
      choice.pop_back();
      x.pop_back();
      h.pop_back();
    }
  }
}

namespace {

// Outgoing arc choice of one vertex. Targets are the vertices it may still
// reach; subsets of them are visited in post-order of the prefix tree
// (every extension of a prefix before the prefix itself, the empty set last),
// which is the order of the rendered blocks.
struct VertexChoice {
  std::vector<int> allowed;
  std::vector<std::size_t> picked;  // indices into allowed, increasing
};

}  // namespace

Generator<LinkedPartition> gen_ncl(int n) {
  if (n < 1) throw std::invalid_argument("a linked partition needs at least one vertex");
  std::vector<VertexChoice> choices(n + 1);
  std::vector<int> source(n + 1, 0);  // left end of the arc into v, 0 if none

  auto apply = [&](int v, bool on) {
    for (std::size_t i : choices[v].picked) source[choices[v].allowed[i]] = on ? v : 0;
  };

  // Targets of v: unclaimed vertices after v not beyond the nearest arc
  // passing over v (a target past it would cross).
  auto start = [&](int v) {
    int bound = n;
    for (int u = 1; u < v; ++u) {
      for (std::size_t i : choices[u].picked) {
        const int r = choices[u].allowed[i];
        if (r > v) bound = std::min(bound, r);
      }
    }
    VertexChoice& c = choices[v];
    c.allowed.clear();
    for (int t = v + 1; t <= bound; ++t) {
      if (source[t] == 0) c.allowed.push_back(t);
    }
    c.picked.resize(c.allowed.size());
    for (std::size_t i = 0; i < c.picked.size(); ++i) c.picked[i] = i;
    apply(v, true);
  };

  auto advance = [&](int v) {
    VertexChoice& c = choices[v];
    if (c.picked.empty()) return false;
    apply(v, false);
    const std::size_t last = c.picked.back();
    if (last + 1 < c.allowed.size()) {
      // Next sibling, then its leftmost leaf.
      c.picked.back() = last + 1;
      for (std::size_t i = last + 2; i < c.allowed.size(); ++i) c.picked.push_back(i);
    } else {
      c.picked.pop_back();
    }
    apply(v, true);
    return true;
  };

  for (int v = 1; v <= n; ++v) start(v);
  while (true) {
    std::vector<Arc> arcs;
    for (int v = 1; v <= n; ++v) {
      for (std::size_t i : choices[v].picked) arcs.push_back({v, choices[v].allowed[i]});
    }
    co_yield LinkedPartition(n, std::move(arcs));

    int v = n;
    while (v >= 1 && !advance(v)) --v;
    if (v < 1) co_return;
    // Vertices after v ended on their empty choice, so they hold no arcs.
    for (int w = v + 1; w <= n; ++w) start(w);
  }
}

std::string family_name(Family family) {
  switch (family) {
    case Family::Motzkin32:
      return "m32";
    case Family::Large:
      return "large";
    case Family::Ncl:
      return "ncl";
    case Family::SchroderLarge:
      return "schroder-large";
    case Family::SchroderLittle:
      return "schroder-little";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : {Family::Motzkin32, Family::Large, Family::Ncl, Family::SchroderLarge,
                   Family::SchroderLittle}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

BigInt predicted_count(Family family, int n) {
  if (n < 0) throw std::invalid_argument("size must be nonnegative");
  const auto N = static_cast<std::size_t>(n);
  switch (family) {
    case Family::Motzkin32:
      return motzkin32_numbers(N).at(N);
    case Family::Large:
      return large_motzkin_numbers(N).at(N);
    case Family::Ncl:
      if (n < 1) throw std::invalid_argument("a linked partition needs at least one vertex");
      return ncl_counts(N).at(N);
    case Family::SchroderLarge:
      return schroder_numbers(N).large.at(N);
    case Family::SchroderLittle:
      return schroder_numbers(N).little.at(N);
  }
  throw std::invalid_argument("unknown family");
}

namespace {

template <typename T, typename Render>
Generator<std::string> texts(Generator<T> gen, std::optional<std::size_t> limit, Render render) {
  std::size_t emitted = 0;
  for (const T& x : gen) {
    if (limit && emitted >= *limit) co_return;
    co_yield render(x);
    ++emitted;
  }
}

}  // namespace

Generator<std::string> enumerate_texts(Family family, int n, std::optional<std::size_t> limit) {
  auto text = [](const auto& x) { return x.text(); };
  switch (family) {
    case Family::Motzkin32:
      return texts(gen_motzkin32(n), limit, text);
    case Family::Large:
      return texts(gen_large(n), limit, text);
    case Family::Ncl:
      return texts(gen_ncl(n), limit, [](const LinkedPartition& p) { return render_partition(p); });
    case Family::SchroderLarge:
      return texts(gen_schroder(n, SchroderVariant::Large), limit, text);
    case Family::SchroderLittle:
      return texts(gen_schroder(n, SchroderVariant::Little), limit, text);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace schroder
