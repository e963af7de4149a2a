#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace schroder {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "schroder");
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::size_t line_count(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

TEST(CountCommandTest, Examples) {
  EXPECT_EQ(run_cli({"count", "--seq", "L", "--upto", "6"}).out, "1\n2\n6\n22\n90\n394\n1806\n");
  EXPECT_EQ(run_cli({"count", "--seq", "m", "--upto", "2"}).out, "1\n3\n11\n");
  EXPECT_EQ(run_cli({"count", "--seq", "s", "--upto", "3"}).out, "1\n1\n3\n11\n");
  EXPECT_EQ(run_cli({"count", "--seq", "f", "--upto", "3"}).out, "1\n2\n6\n");
}

TEST(CountCommandTest, UsageErrors) {
  const Outcome f0 = run_cli({"count", "--seq", "f", "--upto", "0"});
  EXPECT_EQ(f0.code, 2);
  EXPECT_NE(f0.err.find("f starts at 1"), std::string::npos);
  EXPECT_EQ(run_cli({"count", "--seq", "q", "--upto", "3"}).code, 2);
  EXPECT_EQ(run_cli({"count", "--upto", "3"}).code, 2);
  EXPECT_EQ(run_cli({"count", "--seq", "m", "--upto", "-1"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
}

TEST(EnumerateCommandTest, Examples) {
  const Outcome large = run_cli({"enumerate", "--family", "large", "--n", "2"});
  EXPECT_EQ(large.code, 0);
  EXPECT_EQ(large.out, "Ux\nUy\naa\nab\nba\nbb\n");
  EXPECT_EQ(run_cli({"enumerate", "--family", "ncl", "--n", "1"}).out, "{1}\n");
  EXPECT_EQ(run_cli({"enumerate", "--family", "schroder-little", "--n", "2"}).out,
            "UDUD\nUFD\nUUDD\n");
  EXPECT_EQ(line_count(run_cli({"enumerate", "--family", "m32", "--n", "4"}).out), 197u);
  EXPECT_EQ(run_cli({"enumerate", "--family", "large", "--n", "0"}).out, "\n");
}

TEST(EnumerateCommandTest, Jsonl) {
  const Outcome o = run_cli({"enumerate", "--family", "large", "--n", "1", "--format", "jsonl"});
  ASSERT_EQ(o.code, 0);
  std::istringstream lines(o.out);
  std::string line;
  std::vector<std::string> texts;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j.at("kind"), "large");
    EXPECT_EQ(j.at("n"), 1);
    texts.push_back(j.at("text"));
  }
  EXPECT_EQ(texts, (std::vector<std::string>{"a", "b"}));
}

TEST(EnumerateCommandTest, GuardAndLimit) {
  ::setenv("SCHRODER_MAX_OBJECTS", "100", 1);
  const Outcome refused = run_cli({"enumerate", "--family", "large", "--n", "5"});
  const Outcome limited = run_cli({"enumerate", "--family", "large", "--n", "5", "--limit", "3"});
  const Outcome small = run_cli({"enumerate", "--family", "large", "--n", "4"});
  ::unsetenv("SCHRODER_MAX_OBJECTS");
  EXPECT_EQ(refused.code, 1);
  EXPECT_NE(refused.err.find("394"), std::string::npos);
  EXPECT_EQ(limited.code, 0);
  EXPECT_EQ(limited.out, "UUaxx\nUUaxy\nUUayx\n");
  EXPECT_EQ(small.code, 0);
  EXPECT_EQ(line_count(small.out), 90u);

  const Outcome huge = run_cli({"enumerate", "--family", "ncl", "--n", "40"});
  EXPECT_EQ(huge.code, 1);
  EXPECT_EQ(run_cli({"enumerate", "--family", "ncl", "--n", "0"}).code, 2);
  EXPECT_EQ(run_cli({"enumerate", "--family", "dyck", "--n", "2"}).code, 2);
}

TEST(MapCommandTest, Examples) {
  EXPECT_EQ(run_cli({"map", "--phi", "UbxUbUxcUycy"}).out,
            "{1,3,4}{2}{4,13}{5,6,7}{8,10,11}{9}{11,12}\n");
  EXPECT_EQ(run_cli({"map", "--phi-inv", "{1,3,4}{2}{4,13}{5,6,7}{8,10,11}{9}{11,12}"}).out,
            "UbxUbUxcUycy\n");
  EXPECT_EQ(run_cli({"map", "--phi-inv", "{1}"}).out, "\n");
  EXPECT_EQ(run_cli({"map", "--double", "1", "c"}).out, "Uy\n");
  EXPECT_EQ(run_cli({"map", "--project", "UbxUbUxcUycy"}).out, "UbxcbUxcUyc\t1\n");
}

TEST(MapCommandTest, ReadsObjectsFromInput) {
  const Outcome o = run_cli({"map", "--phi"}, "a\r\nb\n\nUx\n");
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "{1,2}\n{1}{2}\n{1}\n{1,2,3}\n");
}

TEST(MapCommandTest, Errors) {
  const Outcome bad_path = run_cli({"map", "--phi", "c"});
  EXPECT_EQ(bad_path.code, 1);
  EXPECT_FALSE(bad_path.err.empty());
  EXPECT_EQ(run_cli({"map", "--phi-inv", "{1,3}{2,4}"}).code, 1);
  EXPECT_EQ(run_cli({"map", "--phi-inv", "{1,2"}).code, 1);
  EXPECT_EQ(run_cli({"map", "--project", ""}).code, 1);
  EXPECT_EQ(run_cli({"map", "--phi", "--project", "a"}).code, 2);
  EXPECT_EQ(run_cli({"map", "a"}).code, 2);
  EXPECT_EQ(run_cli({"map", "--double", "2", "a"}).code, 2);
}

TEST(RenderCommandTest, Examples) {
  EXPECT_EQ(run_cli({"render", "--path", "Ux"}).out, "/\\\nUx\n");
  const Outcome nine = run_cli({"render", "--partition", "{1,4,8}{2,3}{5,6}{6,7}{8,9}"});
  EXPECT_EQ(nine.code, 0);
  EXPECT_NE(nine.out.find(" 1 2 3 4 5 6 7 8 9\n"), std::string::npos);

  const Outcome j = run_cli({"render", "--partition", "{1,2}", "--format", "jsonl"});
  const auto parsed = nlohmann::json::parse(j.out);
  EXPECT_EQ(parsed.at("kind"), "partition");
  EXPECT_EQ(parsed.at("n"), 2);
  EXPECT_EQ(parsed.at("text"), " +-+\n 1 2\n");

  EXPECT_EQ(run_cli({"render"}).code, 2);
  EXPECT_EQ(run_cli({"render", "--path", "xU"}).code, 1);
}

TEST(VerifyCommandTest, PassesAndReports) {
  const Outcome o = run_cli({"verify", "--max-n", "3", "--identities", "200"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("bijectivity n=3 count=22 pass"), std::string::npos);
  EXPECT_NE(o.out.find("identities n=200"), std::string::npos);
  EXPECT_NE(o.out.find("suites passed"), std::string::npos);
  EXPECT_EQ(run_cli({"verify", "--max-n", "1"}).code, 0);
}

TEST(DeterminismTest, RepeatedRunsAreIdentical) {
  const std::vector<std::string> args{"enumerate", "--family", "ncl", "--n", "5", "--format",
                                      "jsonl"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

}  // namespace
}  // namespace schroder
