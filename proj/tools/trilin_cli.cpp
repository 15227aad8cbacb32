#include <iostream>

#include "CLI11.hpp"
#include "trilin/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Lower triangular forms of single-input control systems"};
  app.require_subcommand(1);
  trilin::RunConfig cfg;
  long deg = 0;
  std::size_t trials = 100;

  auto common = [&](CLI::App* sub, bool needs_file) {
    if (needs_file) sub->add_option("file", cfg.path, "system file (.sys text or .json)")->required();
    sub->add_option("--deg", deg, "truncation degree / bracket bound")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_flag("--json", cfg.json, "print the report as JSON");
  };
  auto* classify = app.add_subcommand("classify", "l-type and e-type of a lower triangular system");
  common(classify, true);
  auto* equiv = app.add_subcommand("equiv", "triangularizability and bracket-based type checks");
  common(equiv, true);
  equiv->add_option("--ansatz-deg", cfg.ansatz_deg, "coefficient degree for solving Y fields");
  equiv->add_flag("--auto-canonical", cfg.auto_canonical, "use G^n = G, G^i = [G^{i+1}, F]");
  auto* vt = app.add_subcommand("verify-transform", "push the system through the file's map and classify");
  common(vt, true);
  auto* inv = app.add_subcommand("invariance", "type invariance under random triangular maps");
  common(inv, true);
  inv->add_option("--trials", trials, "number of random maps")->check(CLI::PositiveNumber);
  auto* elim = app.add_subcommand("eliminate", "remove a non-essential index by a triangular change");
  common(elim, false);
  elim->add_option("--poly", cfg.poly, "polynomial")->required();
  elim->add_option("--vars", cfg.vars, "variable names, separated by spaces or commas")->required();
  elim->add_option("--index", cfg.index, "multi-index, e.g. (3,0)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (deg > 0) cfg.deg = deg;
  cfg.trials = trials;

  trilin::Report r = trilin::run_command(cfg);
  if (cfg.json)
    std::cout << r.data.dump(2) << '\n';
  else if (r.exit_code == 2)
    std::cerr << r.text;
  else
    std::cout << r.text;
  return r.exit_code;
}
