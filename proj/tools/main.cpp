#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "cli/cli.hpp"

int main(int argc, char** argv) {
  using namespace lrsearch;
  CLI::App app{"Common interval search over K signed permutations"};
  app.require_subcommand(1);

  cli::RunConfig config;
  std::string class_name = "common";
  std::string format = "text";
  auto* search = app.add_subcommand("search", "Report every interval of one class");
  search->add_option("input", config.input_path, "Permutation file, one per line")
      ->required();
  search->add_option("--class", class_name,
                     "common | nested | conserved | irreducible-common | same-sign-common | "
                     "maximal-nested | irreducible-conserved")
      ->capture_default_str();
  search->add_flag("--renumber", config.renumber,
                   "Relabel so the first permutation becomes the positive identity");
  search->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  search->add_flag("--check-oracle", config.check_oracle,
                   "Cross-check against the brute-force oracle");
  search->add_flag("--stats", config.stats, "Print N, timing and stack operation counts");

  std::uint64_t seed = 0;
  int n = 10;
  int k = 3;
  bool conserved = false;
  bool shuffled = false;
  auto* gen = app.add_subcommand("gen", "Print a random instance");
  gen->add_option("--seed", seed, "RNG seed")->capture_default_str();
  gen->add_option("--n", n, "Number of elements")->check(CLI::Range(1, 1 << 24))->capture_default_str();
  gen->add_option("--k", k, "Number of permutations")->check(CLI::Range(1, 1 << 16))->capture_default_str();
  gen->add_flag("--conserved", conserved, "Force +1 first and +n last in every permutation");
  gen->add_flag("--shuffled", shuffled, "Uniform shuffles only, no reversal-based permutations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  if (*gen) {
    std::mt19937_64 rng(seed);
    std::cout << cli::format_instance(cli::random_instance(rng, n, k, conserved,
                                                         shuffled ? cli::Shape::kShuffled
                                                                  : cli::Shape::kMixed));
    return cli::kExitOk;
  }

  const auto cls = parse_interval_class(class_name);
  if (!cls) {
    std::cerr << "error: unknown class '" << class_name << "'\n";
    return cli::kExitUsage;
  }
  config.cls = *cls;
  config.format = format == "json" ? cli::Format::kJson : cli::Format::kText;
  return cli::run_search(config, std::cout, std::cerr);
}
