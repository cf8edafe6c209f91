// Command-line front end: analyze, generate, check, dot.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "primal/crosscheck.hpp"
#include "primal/error.hpp"
#include "primal/report.hpp"

namespace {

using primal::Error;
using primal::ErrorCode;
using primal::Json;

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitBudget = 2;
constexpr int kExitTheorem = 3;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::EmptyDomain:
    case ErrorCode::MalformedInput:
      return kExitMalformed;
    case ErrorCode::DomainTooLarge:
    case ErrorCode::LimitExceeded:
    case ErrorCode::BudgetExceeded:
      return kExitBudget;
    case ErrorCode::CertificateFailure:
      return kExitTheorem;
  }
  return kExitMalformed;
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::MalformedInput, "cannot write " + path);
  out << text;
}

struct BudgetFlags {
  std::optional<std::size_t> max_points;
  std::optional<std::size_t> open_cap;

  primal::AnalysisBudget resolve() const {
    auto b = primal::AnalysisBudget::from_env();
    if (max_points) b.max_points = *max_points;
    if (open_cap) b.open_cap = *open_cap;
    return b;
  }
};

int run_analyze(const std::string& input, const std::string& output, const BudgetFlags& flags) {
  auto doc = primal::parse_map_document(read_input(input));
  const auto analysis = primal::analyze(std::move(doc.map), flags.resolve());
  const auto checks = primal::run_theorem_checks(analysis);
  write_output(output, primal::build_report(analysis, checks, doc.family).dump(2) + "\n");
  return primal::all_passed(checks) ? kExitOk : kExitTheorem;
}

struct GenerateFlags {
  std::string family;
  std::uint64_t m = 2;
  std::uint64_t n = 2;
  std::uint64_t depth = 3;
  std::uint64_t modulus = 7;
  std::uint64_t seed = 0;
};

int run_generate(const GenerateFlags& g, const std::string& output) {
  Json family;
  family["name"] = g.family;
  std::optional<primal::FunctionalMap> f;
  if (g.family == "mod-mul") {
    f = primal::gen_mod_mul(g.m, g.modulus);
    family["m"] = g.m;
    family["N"] = g.modulus;
  } else if (g.family == "tower") {
    f = primal::gen_tower(g.m, g.n, g.depth);
    family["m"] = g.m;
    family["n"] = g.n;
    family["J"] = g.depth;
  } else if (g.family == "random") {
    f = primal::gen_random(g.n, g.seed);
    family["n"] = g.n;
    family["seed"] = g.seed;
  } else {
    throw Error(ErrorCode::MalformedInput, "unknown family " + g.family);
  }
  write_output(output, primal::map_to_json(*f, family).dump() + "\n");
  return kExitOk;
}

struct CheckFlags {
  std::string input;
  std::size_t exhaustive_upto = 4;
  std::size_t random_per_n = 0;
  std::size_t random_min_n = 5;
  std::size_t random_max_n = 12;
  std::uint64_t seed = 1;
};

// Reports the first failing instance on stderr in a re-ingestible form.
bool check_one(const primal::FunctionalMap& f, const primal::oracle::OracleBudget& budget) {
  const auto r = primal::check_instance(f, budget);
  if (r.ok()) return true;
  Json failure;
  failure["instance"] = primal::map_to_json(f);
  failure["disagreements"] = r.disagreements;
  Json theorems = Json::array();
  for (const auto& t : r.theorem_failures) theorems.push_back({{"name", t.name}, {"detail", t.detail}});
  failure["theorem_failures"] = theorems;
  std::cerr << failure.dump(2) << "\n";
  return false;
}

int run_check(const CheckFlags& c) {
  primal::oracle::OracleBudget budget;
  std::size_t instances = 0;
  if (!c.input.empty()) {
    const auto doc = primal::parse_map_document(read_input(c.input));
    budget.n_cap = std::max(budget.n_cap, doc.map.size());
    ++instances;
    if (!check_one(doc.map, budget)) return kExitTheorem;
    std::cout << "checked 1 instance: all theorem checks and oracle comparisons passed\n";
    return kExitOk;
  }
  if (c.exhaustive_upto > budget.n_cap || c.random_max_n > budget.n_cap) {
    throw Error(ErrorCode::BudgetExceeded,
                "oracle comparisons run up to n = " + std::to_string(budget.n_cap));
  }
  bool ok = true;
  for (std::size_t n = 1; n <= c.exhaustive_upto && ok; ++n) {
    primal::for_each_map(n, [&](const primal::FunctionalMap& f) {
      if (!ok) return;
      ++instances;
      ok = check_one(f, budget);
    });
  }
  primal::SplitMix64 rng(c.seed);
  for (std::size_t n = c.random_min_n; n <= c.random_max_n && ok && c.random_per_n > 0; ++n) {
    for (std::size_t i = 0; i < c.random_per_n && ok; ++i) {
      ++instances;
      ok = check_one(primal::gen_random(n, rng.next()), budget);
    }
  }
  if (!ok) return kExitTheorem;
  std::cout << "checked " << instances << " instances: all theorem checks and oracle comparisons passed\n";
  return kExitOk;
}

int run_dot(const std::string& input, const std::string& output) {
  const auto doc = primal::parse_map_document(read_input(input));
  write_output(output, primal::render_dot(primal::PrimalSystem(doc.map)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamics of finite self-maps in their primal topology"};
  app.require_subcommand(1);

  std::string input, output;
  BudgetFlags budget;
  auto* analyze = app.add_subcommand("analyze", "Read a map and write the JSON report");
  analyze->add_option("-i,--input", input, "Map file (JSON or plain integers); default stdin");
  analyze->add_option("-o,--output", output, "Report file; default stdout");
  analyze->add_option("--max-points", budget.max_points, "Largest map to analyze (env PRIMAL_MAX_POINTS, default 64)");
  analyze->add_option("--open-cap", budget.open_cap, "Count open sets only up to this n (env PRIMAL_OPEN_CAP, default 20)");

  GenerateFlags gen;
  auto* generate = app.add_subcommand("generate", "Emit a member of a map family as JSON");
  generate->add_option("--family", gen.family, "mod-mul | tower | random")
      ->required()
      ->check(CLI::IsMember({"mod-mul", "tower", "random"}));
  generate->add_option("--m", gen.m, "mod-mul multiplier, or tower cycle length");
  generate->add_option("--n", gen.n, "tower fan-in, or random map size");
  generate->add_option("--J", gen.depth, "tower depth: levels 0..J");
  generate->add_option("--N", gen.modulus, "mod-mul modulus");
  generate->add_option("--seed", gen.seed, "random seed");
  generate->add_option("-o,--output", output, "Output file; default stdout");

  CheckFlags chk;
  auto* check = app.add_subcommand("check", "Cross-check characterizations against the brute-force oracle");
  check->add_option("-i,--input", chk.input, "Check a single map instead of a corpus");
  check->add_option("--exhaustive-upto", chk.exhaustive_upto, "Every map on n points for n up to this");
  check->add_option("--random-per-n", chk.random_per_n, "Random maps per size");
  check->add_option("--random-min-n", chk.random_min_n, "Smallest random size");
  check->add_option("--random-max-n", chk.random_max_n, "Largest random size");
  check->add_option("--seed", chk.seed, "Corpus seed");

  auto* dot = app.add_subcommand("dot", "Emit a Graphviz rendering of the functional graph");
  dot->add_option("-i,--input", input, "Map file; default stdin");
  dot->add_option("-o,--output", output, "DOT file; default stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (*analyze) return run_analyze(input, output, budget);
    if (*generate) return run_generate(gen, output);
    if (*check) return run_check(chk);
    if (*dot) return run_dot(input, output);
  } catch (const Error& e) {
    std::cerr << "error (" << primal::to_string(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitMalformed;
}
