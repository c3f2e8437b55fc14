#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bicluster/cli.hpp"

using namespace bicluster;

int main(int argc, char** argv) {
  CLI::App app{"Exact Bicluster Editing solver"};
  app.require_subcommand(1);

  std::string file;
  long k = 0;
  auto* decide = app.add_subcommand("decide", "Is there an editing set of size at most k?");
  decide->add_option("file", file, "graph file, or - for stdin")->required();
  decide->add_option("k", k, "edit budget")->required();

  auto* solve = app.add_subcommand("solve", "Minimum editing set as an edit script");
  solve->add_option("file", file)->required();

  auto* recognize = app.add_subcommand("recognize", "Bicluster test with a witness");
  recognize->add_option("file", file)->required();

  auto* min_edits = app.add_subcommand("min-edits", "All inclusion-minimal editing sets (n <= 6)");
  min_edits->add_option("file", file)->required();

  std::string rule;
  bool mirror_reduce = false;
  auto* verify = app.add_subcommand("verify-branching", "Branching-number case analysis");
  verify->add_option("--rule", rule, "restrict to one rule")
      ->check(CLI::IsMember({"b1", "b2", "b3"}));
  verify->add_flag("--mirror-reduce", mirror_reduce, "skip path-reversal duplicates");

  long n = 0;
  long budget = 0;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Random bicluster graph with planted edits");
  gen->add_option("n", n)->required();
  gen->add_option("budget", budget)->required();
  gen->add_option("seed", seed)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitError;
  }

  auto& out = std::cout;
  auto& err = std::cerr;
  if (*decide) return cli::cmd_decide(file, k, out, err);
  if (*solve) return cli::cmd_solve(file, out, err);
  if (*recognize) return cli::cmd_recognize(file, out, err);
  if (*min_edits) return cli::cmd_min_edits(file, out, err);
  if (*verify) {
    AnalysisOptions options;
    options.mirror_reduce = mirror_reduce;
    if (rule == "b1") options.rule = Rule::B1;
    if (rule == "b2") options.rule = Rule::B2;
    if (rule == "b3") options.rule = Rule::B3;
    return cli::cmd_verify_branching(options, out);
  }
  if (*gen) return cli::cmd_gen(n, budget, seed, out, err);
  return cli::kExitError;
}
