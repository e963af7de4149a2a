#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "schroder/counting.hpp"
#include "schroder/enumerate.hpp"

namespace schroder {
namespace {

template <typename T>
std::vector<std::string> texts_of(Generator<T> gen) {
  std::vector<std::string> out;
  for (const T& x : gen) out.push_back(x.text());
  return out;
}

std::vector<std::string> ncl_texts(int n) {
  std::vector<std::string> out;
  for (const LinkedPartition& p : gen_ncl(n)) out.push_back(render_partition(p));
  return out;
}

TEST(GenMotzkinTest, Examples) {
  EXPECT_EQ(texts_of(gen_motzkin32(0)), std::vector<std::string>{""});
  EXPECT_EQ(texts_of(gen_motzkin32(1)), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(texts_of(gen_motzkin32(3)).size(), 45u);
}

TEST(GenLargeTest, Examples) {
  EXPECT_EQ(texts_of(gen_large(1)), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(texts_of(gen_large(2)),
            (std::vector<std::string>{"Ux", "Uy", "aa", "ab", "ba", "bb"}));
  EXPECT_EQ(texts_of(gen_large(6)).size(), 1806u);
}

// Oracle: filtering all 6^n words.
TEST(GenPathsTest, MatchBruteForceFilter) {
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(texts_of(gen_motzkin32(n)), oracle::brute_force_paths(n, false)) << "n=" << n;
    EXPECT_EQ(texts_of(gen_large(n)), oracle::brute_force_paths(n, true)) << "n=" << n;
  }
}

TEST(GenNclTest, Examples) {
  EXPECT_EQ(ncl_texts(1), std::vector<std::string>{"{1}"});
  const auto three = ncl_texts(3);
  const std::set<std::string> got(three.begin(), three.end());
  const std::set<std::string> expected{"{1,2,3}", "{1,2}{3}", "{1,3}{2}",
                                       "{1}{2,3}", "{1}{2}{3}", "{1,2}{2,3}"};
  EXPECT_EQ(got, expected);
  EXPECT_EQ(three.size(), 6u);
  EXPECT_EQ(ncl_texts(4).size(), 22u);
  EXPECT_THROW(ncl_texts(0), std::invalid_argument);
}

// Oracle: every family of subsets checked against the block definition.
TEST(GenNclTest, MatchesBruteForceBlockFamilies) {
  for (int n = 1; n <= 4; ++n) {
    const auto generated = ncl_texts(n);
    const std::set<std::string> as_set(generated.begin(), generated.end());
    EXPECT_EQ(as_set.size(), generated.size());
    EXPECT_EQ(as_set, oracle::brute_force_ncl(n)) << "n=" << n;
  }
}

TEST(GenNclTest, EveryItemPassesTheBlockValidator) {
  for (int n = 1; n <= 8; ++n) {
    for (const LinkedPartition& p : gen_ncl(n)) ASSERT_FALSE(blockwise_violation(p));
  }
}

TEST(GenSchroderTest, Examples) {
  EXPECT_EQ(texts_of(gen_schroder(1, SchroderVariant::Large)),
            (std::vector<std::string>{"F", "UD"}));
  EXPECT_EQ(texts_of(gen_schroder(1, SchroderVariant::Little)), std::vector<std::string>{"UD"});
  EXPECT_EQ(texts_of(gen_schroder(3, SchroderVariant::Little)).size(), 11u);
  EXPECT_EQ(texts_of(gen_schroder(0, SchroderVariant::Large)), std::vector<std::string>{""});
}

// Oracle: all step words of the right width, filtered.
TEST(GenSchroderTest, MatchesBruteForceFilter) {
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(texts_of(gen_schroder(n, SchroderVariant::Large)),
              oracle::brute_force_schroder(n, false));
    EXPECT_EQ(texts_of(gen_schroder(n, SchroderVariant::Little)),
              oracle::brute_force_schroder(n, true));
  }
}

TEST(CardinalityTest, StreamsMatchCountingTables) {
  const auto m = motzkin32_numbers(10);
  const auto l = large_motzkin_numbers(10);
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(texts_of(gen_motzkin32(n)).size(), m.at(n));
    EXPECT_EQ(texts_of(gen_large(n)).size(), l.at(n));
  }
  const auto s = schroder_numbers(7);
  for (int n = 0; n <= 7; ++n) {
    EXPECT_EQ(texts_of(gen_schroder(n, SchroderVariant::Large)).size(), s.large.at(n));
    EXPECT_EQ(texts_of(gen_schroder(n, SchroderVariant::Little)).size(), s.little.at(n));
  }
  const auto f = ncl_counts(8);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(ncl_texts(n).size(), f.at(n));
}

TEST(OrderingTest, StreamsAreStrictlyIncreasing) {
  for (int n = 1; n <= 8; ++n) {
    const auto parts = ncl_texts(n);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      ASSERT_TRUE(canonical_text_less(parts[i - 1], parts[i])) << parts[i - 1] << " " << parts[i];
    }
  }
  const auto paths = texts_of(gen_motzkin32(7));
  EXPECT_TRUE(std::adjacent_find(paths.begin(), paths.end(), std::greater_equal<>()) == paths.end());
}

TEST(OrderingTest, TwoDigitLabelsCompareNumerically) {
  std::vector<std::string> head;
  for (const std::string& t : enumerate_texts(Family::Ncl, 11, 2000)) head.push_back(t);
  ASSERT_EQ(head.size(), 2000u);
  EXPECT_EQ(head.front(), "{1,2,3,4,5,6,7,8,9,10,11}");
  for (std::size_t i = 1; i < head.size(); ++i) {
    ASSERT_TRUE(canonical_text_less(head[i - 1], head[i])) << head[i - 1] << " " << head[i];
  }
}

TEST(EnumerateTextsTest, LimitStopsEarly) {
  std::vector<std::string> got;
  for (const std::string& t : enumerate_texts(Family::Large, 12, 4)) got.push_back(t);
  EXPECT_EQ(got.size(), 4u);
  EXPECT_EQ(got.front(), "UUUUUUxxxxxx");
}

TEST(EnumerateTextsTest, FamilyNames) {
  for (Family f : {Family::Motzkin32, Family::Large, Family::Ncl, Family::SchroderLarge,
                   Family::SchroderLittle}) {
    EXPECT_EQ(family_from_name(family_name(f)), f);
  }
  EXPECT_FALSE(family_from_name("dyck"));
  EXPECT_EQ(predicted_count(Family::Ncl, 7), 1806);
  EXPECT_THROW(predicted_count(Family::Ncl, 0), std::invalid_argument);
}

}  // namespace
}  // namespace schroder
