#include <CLI11.hpp>
#include <iostream>

#include "bdm/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Characteristic varieties and holonomicity of binomial D-modules"};
  bdm::cli::JobSpec spec;
  app.add_option("command", spec.command, "umbrella | toric | charvar | singlocus | discriminant | holonomic | "
                                          "rankfinite | grweyl | witness")
      ->required()
      ->check(CLI::IsMember(bdm::cli::kCommands));
  app.add_option("input", spec.input, "JSON system file")->required();
  app.add_option("--weight", spec.weight, "projective weight Lx,Ld with ':'-separated entries, or F");
  app.add_option("--beta", spec.beta, "parameters b1,...,bd");
  app.add_flag("--verify", spec.verify, "cross-check against the Weyl Groebner oracle");
  app.add_flag("--json", spec.json, "JSON report");
  app.add_flag("--gkz", spec.gkz, "singlocus: discriminant formula for H_A");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  auto r = bdm::cli::run(spec);
  std::cout << r.output;
  if (!r.error.empty()) std::cerr << r.error << "\n";
  return r.exit_code;
}
