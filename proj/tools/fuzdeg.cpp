// fuzdeg: subgroup lattices, distinct fuzzy subgroup counts and the
// distinct fuzzy subgroup commutativity degree of small finite groups.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 capacity.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fuzdeg/errors.hpp"
#include "fuzdeg/exit_codes.hpp"
#include "fuzdeg/group_spec.hpp"
#include "fuzdeg/report.hpp"
#include "fuzdeg/verify.hpp"

namespace {

int run(int argc, char** argv) {
  using namespace fuzdeg;

  CLI::App app{"Distinct fuzzy subgroups and their commutativity degree for small finite groups"};
  app.require_subcommand(1);

  RunConfig config;
  config.max_order = max_order_from_env();
  std::string format = "json";
  std::size_t oracle_max_order = 8;
  std::size_t samples = 10'000;
  std::size_t oracle_depth = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--max-order", config.max_order, "Largest group order accepted (env FUZDEG_MAX_ORDER)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", config.threads, "Worker threads for pair loops")->check(CLI::PositiveNumber);
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Subgroup lattice, s(G), s*(H) and sd(G) of one group");
  analyze_cmd->add_option("spec", config.spec, "Group spec, e.g. dihedral:8")->required();
  analyze_cmd->add_option("--format", format, "json, csv or markdown");
  analyze_cmd->add_option("--pair-cap", config.pair_cap, "Largest number of class pairs to examine")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--class-cap", config.class_cap, "Largest number of classes to enumerate")
      ->check(CLI::PositiveNumber);
  add_common(analyze_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check chain-level results against the brute-force oracle");
  verify_cmd->add_option("spec", config.spec, "Group spec")->required();
  verify_cmd->add_option("--oracle-depth", oracle_depth, "Membership grid depth (default: longest chain)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--oracle-max-order", oracle_max_order, "Largest order the oracle accepts")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--samples", samples, "Sampled pairs per suite above order 6")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", config.seed, "Seed for sampled pairs");
  verify_cmd->add_option("--format", format, "json or markdown");
  add_common(verify_cmd);

  auto* table_cmd = app.add_subcommand("paper-table", "Published values next to computed ones");
  table_cmd->add_option("--format", format, "markdown or csv");
  add_common(table_cmd);

  auto* export_cmd = app.add_subcommand("export-lattice", "Hasse diagram (dot) or full lattice (json)");
  export_cmd->add_option("spec", config.spec, "Group spec")->required();
  export_cmd->add_option("--format", format, "dot or json");
  add_common(export_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*analyze_cmd) {
      config.format = parse_format(format);
      const Analysis a = analyze(parse_group_spec(config.spec), config);
      switch (config.format) {
        case Format::kJson: std::cout << analysis_json(a).dump(2) << "\n"; break;
        case Format::kCsv: std::cout << analysis_csv(a); break;
        case Format::kMarkdown: std::cout << analysis_markdown(a); break;
        case Format::kDot: std::cout << lattice_dot(a.lattice); break;
      }
      return 0;
    }
    if (*verify_cmd) {
      config.format = parse_format(format);
      if (oracle_depth > 0) config.oracle_depth = oracle_depth;
      const SubgroupLattice lat(build_group(config.spec, config.max_order), config.threads);
      VerifyOptions opts;
      opts.oracle_depth = config.oracle_depth;
      opts.max_order = oracle_max_order;
      opts.sample_pairs = samples;
      opts.seed = config.seed;
      const VerificationReport report = run_verification(lat, opts);
      if (config.format == Format::kMarkdown) {
        std::cout << verification_markdown(report);
      } else {
        std::cout << verification_json(report).dump(2) << "\n";
      }
      for (const auto& suite : report.suites)
        if (!suite.passed) std::cerr << "failed: " << suite.name << ": " << suite.counterexample << "\n";
      return verify_exit_code(report);
    }
    if (*table_cmd) {
      const auto rows = paper_table(config);
      if (*table_cmd->get_option("--format") && format == "csv") {
        std::cout << paper_table_csv(rows);
      } else if (!*table_cmd->get_option("--format") || format == "markdown" || format == "md") {
        std::cout << paper_table_markdown(rows);
      } else {
        throw InvalidSpecError("paper-table supports markdown or csv, got '" + format + "'");
      }
      return 0;
    }
    if (*export_cmd) {
      const Format f = *export_cmd->get_option("--format") ? parse_format(format) : Format::kDot;
      const SubgroupLattice lat(build_group(config.spec, config.max_order), config.threads);
      if (f == Format::kDot) {
        std::cout << lattice_dot(lat);
      } else if (f == Format::kJson) {
        Json j = lattice_json(lat);
        j["census"] = census_json(lat, count_classes(lat));
        std::cout << j.dump(2) << "\n";
      } else {
        throw InvalidSpecError("export-lattice supports dot or json");
      }
      return 0;
    }
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const DepthError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const InvalidSpecError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "invalid table: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidInputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fuzdeg::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return fuzdeg::kExitCapacity;
  } catch (const fuzdeg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return fuzdeg::kExitVerifyFailed;
  }
}
