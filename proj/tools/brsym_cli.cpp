#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "brsym/cli.hpp"

int main(int argc, char** argv) {
  using brsym::cli::CommandConfig;
  CLI::App app{"Brauer symmetry classes for the dicyclic groups T_4n"};
  app.require_subcommand(1, 1);

  CommandConfig config;
  std::string format = "json";
  std::string output;
  std::vector<int> orbit;

  auto add_common = [&](CLI::App* sub, bool multi) {
    auto* n = sub->add_option("--n", config.n, "group parameter, T_4n")->required();
    auto* p = sub->add_option("--p", config.p, "prime for Brauer characters");
    auto* d = sub->add_option("--d", config.d, "polynomial degree");
    auto* dimv = sub->add_option("--dimv", config.dimv, "dimension of V for tensors");
    if (multi) {
      for (auto* o : {n, p, d, dimv}) o->delimiter(',');
    }
    sub->add_option("--format", format, "json or human")->check(CLI::IsMember({"json", "human"}));
    sub->add_option("--output", output, "write the report to this file instead of stdout");
    sub->add_option("--work-ceiling", config.work_ceiling,
                    "maximum |G| * |basis| work units (default BRSYM_WORK_CEILING or 2e6)");
  };

  auto* table = app.add_subcommand("table", "ordinary character table, and Brauer characters when --p is given");
  add_common(table, false);
  auto* brauer = app.add_subcommand("brauer", "p-regular elements, p-regular classes and Brauer characters");
  add_common(brauer, false);
  auto* orbits = app.add_subcommand("orbits", "orbit census of multi-indices (--d) or sequences (--dimv)");
  add_common(orbits, false);
  auto* gram = app.add_subcommand("gram", "exact Gram matrix of one orbital subspace");
  add_common(gram, false);
  gram->add_option("--char", config.character, "psi:j or chi:h")->required();
  gram->add_option("--orbit", orbit, "orbit representative, comma separated")->delimiter(',');
  auto* obasis = app.add_subcommand("obasis", "decide whether the symmetry class has an orthogonal basis");
  add_common(obasis, false);
  obasis->add_option("--char", config.character, "psi:j or chi:h")->required();
  auto* verify = app.add_subcommand("verify", "compare closed-form criteria with computed verdicts");
  add_common(verify, true);
  verify->get_option("--n")->required(false);
  verify->add_option("--theorem", config.theorem, "criterion name or short id, or all")
      ->required();
  verify->add_option("--char", config.character, "restrict to one character index, psi:j or chi:h");
  verify->add_flag("--keep-going", config.keep_going, "continue past a disagreement");
  verify->add_option("--threads", config.threads, "parameter points evaluated concurrently");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : brsym::cli::kInvalidParameters;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  config.format = format == "human" ? brsym::cli::Format::Human : brsym::cli::Format::Structured;
  if (!orbit.empty()) config.orbit = orbit;

  if (output.empty()) return brsym::cli::run(config, std::cout, std::cerr);
  std::ofstream file(output);
  if (!file) {
    std::cerr << "error: cannot open " << output << '\n';
    return brsym::cli::kInvalidParameters;
  }
  return brsym::cli::run(config, file, std::cerr);
}
