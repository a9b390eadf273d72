#include "app.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"orbichow: integral stringy Chow rings of global quotient orbifolds"};
  app.require_subcommand(1);

  orbichow::cli::JobSpec spec;

  struct Command {
    const char* name;
    const char* description;
  };
  const Command commands[] = {
      {"inertia", "sector table of the inertia decomposition of [V/G]"},
      {"ring", "stringy ring table (BG for any finite G; [V/G] for abelian G)"},
      {"verify", "identity / commutativity / grading / associativity checks"},
      {"poincare", "sector-class Poincare polynomial (sector count by age)"},
      {"moduli", "components of 3-pointed genus-0 degree-0 maps to BG"},
      {"rr", "coarse pushforward degree and cohomology of a twisted line bundle"},
      {"roots", "r-th root section criterion on explicit Picard data"},
  };

  for (const auto& command : commands) {
    auto* sub = app.add_subcommand(command.name, command.description);
    sub->add_option("--input,-i", spec.input_path, "input JSON file")->required();
    sub->add_option("--format,-f", spec.format, "output format: json|table")
        ->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--cache", spec.cache_dir,
                    "cache directory (default: $ORBICHOW_CACHE_DIR if set)");
    sub->add_option("--max-group-order", spec.max_group_order, "group order bound");
    sub->add_option("--seed", spec.seed, "seed for randomized property sampling");
    sub->add_option("--random-triples", spec.random_triples,
                    "randomized associativity triples in verify");
    sub->callback([&spec, name = std::string(command.name)] { spec.command = name; });
  }

  CLI11_PARSE(app, argc, argv);

  const auto result = orbichow::cli::run(spec);
  if (!result.output.empty()) std::cout << result.output;
  if (!result.message.empty()) std::cerr << result.message << "\n";
  return result.exit_code;
}
