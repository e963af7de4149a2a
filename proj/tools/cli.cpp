#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "schroder/bijection.hpp"
#include "schroder/counting.hpp"
#include "schroder/doubling.hpp"
#include "schroder/enumerate.hpp"
#include "schroder/render.hpp"
#include "schroder/verify.hpp"

namespace schroder::cli {

namespace {

constexpr std::size_t kDefaultMaxObjects = 100'000'000;

// Raised for argument values CLI11 accepts but the command cannot use.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t max_objects() {
  if (const char* env = std::getenv("SCHRODER_MAX_OBJECTS")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw UsageError(std::string("SCHRODER_MAX_OBJECTS is not a number: ") + env);
    }
  }
  return kDefaultMaxObjects;
}

void write_jsonl(std::ostream& out, const std::string& kind, long n, const std::string& text) {
  nlohmann::json line = {{"kind", kind}, {"n", n}, {"text", text}};
  out << line.dump() << '\n';
}

// Objects come from the positional argument or, when absent, one per input line.
std::vector<std::string> read_objects(const std::optional<std::string>& arg, std::istream& in) {
  if (arg) return {*arg};
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

struct CountArgs {
  std::string seq;
  std::size_t upto = 0;
};

int do_count(const CountArgs& args, std::ostream& out) {
  const Sequence seq = *sequence_from_symbol(args.seq);
  if (seq == Sequence::Ncl && args.upto < 1) throw UsageError("f starts at 1; use --upto N >= 1");
  const SequenceTable table = sequence_table(seq, args.upto);
  for (const BigInt& v : table.values()) out << v << '\n';
  return 0;
}

struct EnumerateArgs {
  std::string family;
  int n = 0;
  std::optional<std::size_t> limit;
  std::string format = "text";
};

int do_enumerate(const EnumerateArgs& args, std::ostream& out) {
  const Family family = *family_from_name(args.family);
  if (family == Family::Ncl && args.n < 1) throw UsageError("ncl needs --n >= 1");
  if (!args.limit) {
    const BigInt predicted = predicted_count(family, args.n);
    if (predicted > max_objects()) {
      throw std::runtime_error(args.family + " of size " + std::to_string(args.n) + " has " +
                               predicted.str() +
                               " objects; pass --limit or raise SCHRODER_MAX_OBJECTS");
    }
  }
  for (const std::string& text : enumerate_texts(family, args.n, args.limit)) {
    if (args.format == "jsonl") {
      write_jsonl(out, args.family, args.n, text);
    } else {
      out << text << '\n';
    }
  }
  return 0;
}

struct MapArgs {
  bool phi = false;
  bool phi_inv = false;
  std::optional<int> double_bit;
  bool project = false;
  std::optional<std::string> object;
};

std::string map_one(const MapArgs& args, const std::string& text) {
  if (args.phi) return render_partition(phi(validate_large(parse_path(text))));
  if (args.phi_inv) return phi_inv(validate_ncl(parse_partition(text))).text();
  if (args.double_bit) {
    const ChoiceBit bit = *args.double_bit == 0 ? ChoiceBit::First : ChoiceBit::Second;
    return double_path(validate_motzkin(parse_path(text)), bit).text();
  }
  const auto [q, bit] = project(validate_large(parse_path(text)));
  return q.text() + '\t' + (bit == ChoiceBit::First ? "0" : "1");
}

int do_map(const MapArgs& args, std::istream& in, std::ostream& out) {
  for (const std::string& text : read_objects(args.object, in)) out << map_one(args, text) << '\n';
  return 0;
}

struct RenderArgs {
  std::optional<std::string> path;
  std::optional<std::string> partition;
  std::string format = "text";
};

int do_render(const RenderArgs& args, std::ostream& out) {
  std::string kind;
  long n = 0;
  std::string diagram;
  if (args.path) {
    const MotzkinPath p = validate_motzkin(parse_path(*args.path));
    kind = "path";
    n = static_cast<long>(p.size());
    diagram = render_ascii(p);
  } else {
    const LinkedPartition p = parse_partition(*args.partition);
    validate_ncl(p);
    kind = "partition";
    n = p.size();
    diagram = render_ascii(p);
  }
  if (args.format == "jsonl") {
    write_jsonl(out, kind, n, diagram);
  } else {
    out << diagram;
  }
  return 0;
}

struct VerifyArgs {
  int max_n = 6;
  std::optional<std::size_t> identities;
};

int do_verify(const VerifyArgs& args, std::ostream& out) {
  VerifyOptions options;
  options.max_n = args.max_n;
  options.identities = args.identities;
  const VerifyReport report = run_verification(options);
  std::size_t failed = 0;
  for (const SuiteResult& r : report.results) {
    out << format_result(r) << '\n';
    if (!r.passed) ++failed;
  }
  if (failed) {
    out << failed << " of " << report.results.size() << " suites FAILED\n";
    return 1;
  }
  out << "all " << report.results.size() << " suites passed\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Large (3,2)-Motzkin paths, noncrossing linked partitions and Schroder numbers",
               "schroder"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Print a counting sequence, one value per line");
  count->add_option("--seq", count_args.seq, "m, L, S, s or f")
      ->required()
      ->check(CLI::IsMember({"m", "L", "S", "s", "f"}));
  count->add_option("--upto", count_args.upto, "Last index")->required();

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "List every object of one family and size");
  enumerate->add_option("--family", enum_args.family)
      ->required()
      ->check(CLI::IsMember({"m32", "large", "ncl", "schroder-large", "schroder-little"}));
  enumerate->add_option("--n", enum_args.n, "Path length, vertex count or half-length")
      ->required()
      ->check(CLI::NonNegativeNumber);
  enumerate->add_option("--limit", enum_args.limit, "Stop after this many objects");
  enumerate->add_option("--format", enum_args.format)->check(CLI::IsMember({"text", "jsonl"}));

  MapArgs map_args;
  auto* map = app.add_subcommand("map", "Apply phi, its inverse, the doubling map or its inverse");
  auto* mode = map->add_option_group("mode");
  mode->add_flag("--phi", map_args.phi, "Large path -> partition");
  mode->add_flag("--phi-inv", map_args.phi_inv, "Partition -> large path");
  mode->add_option("--double", map_args.double_bit, "(3,2)-Motzkin path -> large path")
      ->check(CLI::IsMember({0, 1}));
  mode->add_flag("--project", map_args.project, "Large path -> (3,2)-Motzkin path TAB bit");
  mode->require_option(1);
  map->add_option("object", map_args.object, "Object text; read from stdin when omitted");

  RenderArgs render_args;
  auto* render = app.add_subcommand("render", "Draw a path or a partition as ASCII");
  auto* what = render->add_option_group("object");
  what->add_option("--path", render_args.path);
  what->add_option("--partition", render_args.partition);
  what->require_option(1);
  render->add_option("--format", render_args.format)->check(CLI::IsMember({"text", "jsonl"}));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the exhaustive property suites");
  verify->add_option("--max-n", verify_args.max_n)->check(CLI::NonNegativeNumber);
  verify->add_option("--identities", verify_args.identities, "Check identities up to N")
      ->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    if (*count) return do_count(count_args, out);
    if (*enumerate) return do_enumerate(enum_args, out);
    if (*map) return do_map(map_args, in, out);
    if (*render) return do_render(render_args, out);
    return do_verify(verify_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace schroder::cli
