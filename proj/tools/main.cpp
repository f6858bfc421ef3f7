#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace cpcompat;
  CLI::App app{"Compare standardized certificate policies and build a unified prototype"};
  app.require_subcommand(1);

  const std::map<std::string, ComparisonMode> modes{{"merge", ComparisonMode::kMerge},
                                                    {"acquire", ComparisonMode::kAcquire}};

  std::string validate_file;
  auto* validate = app.add_subcommand("validate", "Parse a policy and report diagnostics");
  validate->add_option("file", validate_file, "Policy file")->required();

  cli::CompareArgs compare_args;
  std::string rules_path;
  std::string report_path;
  auto* compare = app.add_subcommand("compare", "Score policy B against policy A");
  compare->add_option("file_a", compare_args.file_a, "Policy of the comparing organization")
      ->required();
  compare->add_option("file_b", compare_args.file_b, "Foreign policy")->required();
  compare->add_option("--mode", compare_args.mode, "merge or acquire")
      ->required()
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  compare->add_option("--rules", rules_path, "Acceptance rules file");
  compare->add_option("--report", report_path, "Write the JSON report here instead of stdout");

  cli::MergeArgs merge_args;
  auto* merge = app.add_subcommand("merge", "Compare, evaluate rules, and write a unified policy");
  merge->add_option("file_a", merge_args.file_a, "Policy of the comparing organization")
      ->required();
  merge->add_option("file_b", merge_args.file_b, "Foreign policy")->required();
  merge->add_option("--mode", merge_args.mode, "merge or acquire")
      ->required()
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  merge->add_option("--rules", merge_args.rules, "Acceptance rules file")->required();
  merge->add_option("--out", merge_args.out, "Output policy file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  if (*validate) return cli::cmd_validate(validate_file, std::cerr);
  if (*compare) {
    if (!rules_path.empty()) compare_args.rules = rules_path;
    if (!report_path.empty()) compare_args.report_out = report_path;
    return cli::cmd_compare(compare_args, std::cout, std::cerr);
  }
  return cli::cmd_merge(merge_args, std::cerr);
}
