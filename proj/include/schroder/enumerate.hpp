#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schroder/counting.hpp"
#include "schroder/generator.hpp"
#include "schroder/partition.hpp"
#include "schroder/path.hpp"

namespace schroder {

// All streams are lazy, duplicate-free and strictly increasing in canonical
// text order (byte order for paths, canonical_text_less for partitions).

// (3,2)-Motzkin paths of length n.
Generator<MotzkinPath> gen_motzkin32(int n);
// Large (3,2)-Motzkin paths of length n.
Generator<LargeMotzkinPath> gen_large(int n);
// Noncrossing linked partitions of [n], n >= 1, by arc-set backtracking.
Generator<LinkedPartition> gen_ncl(int n);
// Schroder paths from (0,0) to (2n,0).
Generator<SchroderPath> gen_schroder(int n, SchroderVariant variant);

enum class Family { Motzkin32, Large, Ncl, SchroderLarge, SchroderLittle };

// "m32", "large", "ncl", "schroder-large", "schroder-little".
std::string family_name(Family family);
std::optional<Family> family_from_name(const std::string& name);

// Exact size of a family at size n.
BigInt predicted_count(Family family, int n);

// Canonical text of every member, in stream order; stops after `limit` items.
Generator<std::string> enumerate_texts(Family family, int n,
                                       std::optional<std::size_t> limit = std::nullopt);

template <typename T>
std::vector<T> collect(Generator<T> gen) {
  std::vector<T> out;
  for (const T& x : gen) out.push_back(x);
  return out;
}

}  // namespace schroder
