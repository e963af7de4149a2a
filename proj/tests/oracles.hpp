#pragma once

// Brute-force references used only by the tests. None of these call into the
// library's validators, generators or recurrences.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Series = std::vector<Int>;

inline Series multiply(const Series& a, const Series& b, std::size_t terms) {
  Series out(terms, 0);
  for (std::size_t i = 0; i < a.size() && i < terms; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < terms; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// g with g^2 = h and g_0 = 1, for h_0 = 1. Exact division by 2 is asserted
// by returning an empty series when it fails.
inline Series sqrt_series(const Series& h, std::size_t terms) {
  Series g(terms, 0);
  g[0] = 1;
  for (std::size_t n = 1; n < terms; ++n) {
    Int acc = n < h.size() ? h[n] : Int(0);
    for (std::size_t k = 1; k < n; ++k) acc -= g[k] * g[n - k];
    if (acc % 2 != 0) return {};
    g[n] = acc / 2;
  }
  return g;
}

// Coefficients of (1 - 3x - sqrt(1 - 6x + x^2)) / (4x^2).
inline Series motzkin32_closed_form(std::size_t terms) {
  const Series root = sqrt_series({1, -6, 1}, terms + 2);
  Series numerator = root;
  for (auto& c : numerator) c = -c;
  numerator[0] += 1;
  numerator[1] -= 3;
  Series out;
  for (std::size_t n = 0; n < terms; ++n) out.push_back(numerator[n + 2] / 4);
  return out;
}

// Coefficients f_1, f_2, ... of (1 - x - sqrt(1 - 6x + x^2)) / (2x).
inline Series ncl_closed_form(std::size_t terms) {
  const Series root = sqrt_series({1, -6, 1}, terms + 1);
  Series numerator = root;
  for (auto& c : numerator) c = -c;
  numerator[0] += 1;
  numerator[1] -= 1;
  Series out;
  for (std::size_t n = 0; n < terms; ++n) out.push_back(numerator[n + 1] / 2);
  return out;
}

// Every word of length n over "Uabcxy" that is a (3,2)-Motzkin path (or a
// large one), by filtering all 6^n words. Sorted by byte order.
inline std::vector<std::string> brute_force_paths(int n, bool large) {
  const std::string alphabet = "Uabcxy";
  std::vector<std::string> out;
  std::string w(n, 'U');
  std::vector<int> digits(n, 0);
  while (true) {
    for (int i = 0; i < n; ++i) w[i] = alphabet[digits[i]];
    int h = 0;
    bool ok = true;
    for (char c : w) {
      if (large && c == 'c' && h == 0) ok = false;
      if (c == 'U') ++h;
      if (c == 'x' || c == 'y') --h;
      if (h < 0) ok = false;
    }
    if (ok && h == 0) out.push_back(w);
    int i = n - 1;
    while (i >= 0 && digits[i] == 5) digits[i--] = 0;
    if (i < 0) break;
    ++digits[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every word over "DFU" of horizontal length 2n that is a Schroder path.
inline std::vector<std::string> brute_force_schroder(int n, bool little) {
  std::vector<std::string> out;
  // by_width[w]: every word of horizontal length w.
  std::vector<std::vector<std::string>> by_width(2 * n + 1);
  by_width[0] = {""};
  for (int w = 1; w <= 2 * n; ++w) {
    for (const std::string& s : by_width[w - 1]) {
      by_width[w].push_back(s + 'U');
      by_width[w].push_back(s + 'D');
    }
    if (w >= 2) {
      for (const std::string& s : by_width[w - 2]) by_width[w].push_back(s + 'F');
    }
  }
  for (const std::string& s : by_width[2 * n]) {
    int h = 0;
    bool ok = true;
    for (char c : s) {
      if (c == 'U') ++h;
      if (c == 'D') --h;
      if (c == 'F' && h == 0 && little) ok = false;
      if (h < 0) ok = false;
    }
    if (ok && h == 0) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

using Block = std::vector<int>;

// Literal block-definition check for a family of blocks over [n].
inline bool is_ncl_by_definition(const std::vector<Block>& blocks, int n) {
  std::vector<int> seen(n + 1, 0);
  for (const Block& b : blocks) {
    for (int v : b) seen[v] = 1;
  }
  for (int v = 1; v <= n; ++v) {
    if (!seen[v]) return false;
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (i == j) continue;
      const Block& x = blocks[i];
      const Block& y = blocks[j];
      const int mx = *std::min_element(x.begin(), x.end());
      const int my = *std::min_element(y.begin(), y.end());
      for (int k : x) {
        if (std::find(y.begin(), y.end(), k) == y.end()) continue;
        const bool a = k == mx && x.size() > 1 && k != my;
        const bool b = k == my && y.size() > 1 && k != mx;
        if (!a && !b) return false;
      }
      for (int i1 : x) {
        for (int j1 : x) {
          for (int i2 : y) {
            for (int j2 : y) {
              if (i1 < i2 && i2 < j1 && j1 < j2) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

// NCL(n) by trying every family of nonempty subsets of [n]; each family is
// rendered canonically (blocks by minimum, then elements). Feasible for n <= 4.
inline std::set<std::string> brute_force_ncl(int n) {
  std::vector<Block> subsets;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    Block b;
    for (int v = 1; v <= n; ++v) {
      if (mask >> (v - 1) & 1U) b.push_back(v);
    }
    subsets.push_back(b);
  }
  std::set<std::string> out;
  for (std::uint64_t family = 1; family < (std::uint64_t{1} << subsets.size()); ++family) {
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      if (family >> i & 1U) blocks.push_back(subsets[i]);
    }
    if (!is_ncl_by_definition(blocks, n)) continue;
    std::sort(blocks.begin(), blocks.end());
    std::string text;
    for (const Block& b : blocks) {
      text += '{';
      for (std::size_t i = 0; i < b.size(); ++i) text += (i ? "," : "") + std::to_string(b[i]);
      text += '}';
    }
    out.insert(text);
  }
  return out;
}

}  // namespace oracle
