#include <iostream>

#include "CLI11.hpp"
#include "dimerpf/cli.hpp"

using namespace dimerpf;

int main(int argc, char** argv) {
  CLI::App app{"Exact monomer-dimer partition functions on planar graphs"};
  app.require_subcommand(1);

  cli::BoundaryOptions bp;
  auto* bp_cmd = app.add_subcommand("boundary-partition", "Partition function with monomers restricted to the boundary");
  bp_cmd->add_option("--graph", bp.graph, "Graph JSON file")->required();
  bp_cmd->add_option("--var", bp.var, "Output variable: x (per pair) or z (per monomer)")->check(CLI::IsMember({"x", "z"}));
  bp_cmd->add_option("--method", bp.method, "theorem1 or bijection")->check(CLI::IsMember({"theorem1", "bijection"}));
  bp_cmd->add_option("--threads", bp.threads, "Worker threads")->check(CLI::PositiveNumber);
  bp_cmd->add_flag("--timing", bp.timing, "Report wall-clock time");

  cli::FullOptions fp;
  auto* fp_cmd = app.add_subcommand("full-partition", "Partition function with monomers anywhere");
  fp_cmd->add_option("--graph", fp.graph, "Graph JSON file");
  fp_cmd->add_option("--method", fp.method, "skeleton, inout or oracle")->check(CLI::IsMember({"skeleton", "inout", "oracle"}));
  fp_cmd->add_option("--skeleton", fp.skeleton, "Skeleton JSON file");
  fp_cmd->add_option("--rect", fp.rect, "Rectangle COLSxROWS with its comb skeleton");
  fp_cmd->add_option("--var", fp.var, "Output variable: x or z")->check(CLI::IsMember({"x", "z"}));
  fp_cmd->add_option("--threads", fp.threads, "Worker threads")->check(CLI::PositiveNumber);
  fp_cmd->add_flag("--timing", fp.timing, "Report wall-clock time");

  cli::CorrelationOptions co;
  auto* co_cmd = app.add_subcommand("correlations", "Boundary monomer correlation at close packing");
  co_cmd->add_option("--graph", co.graph, "Graph JSON file")->required();
  co_cmd->add_option("--indices", co.indices, "Comma-separated boundary vertex ids")->required();
  co_cmd->add_option("--method", co.method, "wick or ratio")->check(CLI::IsMember({"wick", "ratio"}));

  cli::OrientOptions oo;
  auto* oo_cmd = app.add_subcommand("orient", "Kasteleyn orientation and positive labeling");
  oo_cmd->add_option("--graph", oo.graph, "Graph JSON file")->required();

  cli::CheckOptions ch;
  auto* ch_cmd = app.add_subcommand("check", "Cross-check methods on one graph");
  ch_cmd->add_option("--graph", ch.graph, "Graph JSON file")->required();
  ch_cmd->add_flag("--against-oracle", ch.against_oracle, "Also compare with brute-force enumeration");
  ch_cmd->add_option("--threads", ch.threads, "Worker threads")->check(CLI::PositiveNumber);

  cli::FixtureOptions fx;
  auto* fx_cmd = app.add_subcommand("fixtures", "Replay stored reference fixtures");
  fx_cmd->add_flag("--all", fx.all, "Include the slow 6x6 rectangle");
  fx_cmd->add_flag("--timing", fx.timing, "Report wall-clock time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << io::error_json("UsageError", e.what()).dump() << "\n";
    return cli::kExitInputError;
  }

  cli::CommandResult result = cli::guarded([&]() -> cli::CommandResult {
    if (*bp_cmd) return cli::cmd_boundary_partition(bp);
    if (*fp_cmd) return cli::cmd_full_partition(fp);
    if (*co_cmd) return cli::cmd_correlations(co);
    if (*oo_cmd) return cli::cmd_orient(oo);
    if (*ch_cmd) return cli::cmd_check(ch);
    return cli::cmd_fixtures(fx);
  });
  std::cout << result.output.dump() << "\n";
  return result.exit_code;
}
