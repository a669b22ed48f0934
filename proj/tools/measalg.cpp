// measalg: batch checks of measure-algebra morphisms.
//
//   measalg validate FILE...
//   measalg classify MAP
//   measalg theorem-check [MAP] [--trials T] [--seed S] [--budget N]
//   measalg functor-check F G
//
// Exit codes: 0 ok, 1 law violation, 2 input error, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "measalg/commands.hpp"

int main(int argc, char** argv) {
  namespace cli = measalg::cli;

  CLI::App app{"Exact checks of bounded compression against measure-algebra Lipschitz constants"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string output;
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", output, "Write the report to PATH instead of stdout");

  std::vector<std::string> validate_paths;
  auto* validate = app.add_subcommand("validate", "Parse and validate space or map files");
  validate->add_option("paths", validate_paths, "Space or map JSON files")->required();

  std::string classify_path;
  auto* classify = app.add_subcommand("classify", "Classify a morphism");
  classify->add_option("map", classify_path, "Map JSON file")->required();

  cli::TheoremCheckOptions theorem;
  std::string theorem_path;
  auto* theorem_cmd = app.add_subcommand(
      "theorem-check", "Compare compression with both Lipschitz computations");
  theorem_cmd->add_option("map", theorem_path, "Map JSON file");
  theorem_cmd->add_option("--budget", theorem.budget,
                          "Max non-null target atoms for brute force")
      ->capture_default_str();
  theorem_cmd->add_option("--trials", theorem.trials, "Random instances to check");
  theorem_cmd->add_option("--seed", theorem.seed, "Seed for random instances");

  std::string f_path;
  std::string g_path;
  auto* functor = app.add_subcommand("functor-check", "Check functor laws for g after f");
  functor->add_option("f", f_path, "Map JSON for f")->required();
  functor->add_option("g", g_path, "Map JSON for g")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kInputError;
  }

  cli::RunReport report;
  if (*validate) {
    report = cli::cmd_validate(validate_paths);
  } else if (*classify) {
    report = cli::cmd_classify(classify_path);
  } else if (*theorem_cmd) {
    if (!theorem_path.empty()) theorem.map_path = theorem_path;
    if (!theorem.map_path && theorem.trials == 0) {
      std::cerr << "theorem-check: give a map file or --trials\n";
      return cli::kInputError;
    }
    report = cli::cmd_theorem_check(theorem);
  } else {
    report = cli::cmd_functor_check(f_path, g_path);
  }

  const std::string rendered =
      format == "text" ? report.to_text() : report.to_json().dump(2) + "\n";
  if (output.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << output << '\n';
      return cli::kInputError;
    }
    out << rendered;
  }
  return report.exit_code;
}
