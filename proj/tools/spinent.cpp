// spinent: entanglement and spin-squeezing analysis of symmetric N-atom states.

#include <iostream>

#include <CLI11.hpp>

#include "spinent/commands.hpp"
#include "spinent/error.hpp"

namespace cli = spinent::cli;

int main(int argc, char** argv) {
  CLI::App app{"Entanglement parameter and spin squeezing of symmetric N-atom pure states"};
  app.set_version_flag("--version", std::string(SPINENT_VERSION));
  app.require_subcommand(1);

  cli::AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a state file and print a JSON report");
  analyze_cmd->add_option("state", analyze.path, "State file")->required();
  analyze_cmd->add_option("--s-tol", analyze.analysis.s_tolerance,
                          "Classify as entangled when S exceeds this")
      ->capture_default_str();
  analyze_cmd->add_option("--epsilon", analyze.analysis.frame_epsilon,
                          "Mean-spin magnitude below which the frame is degenerate")
      ->capture_default_str();

  cli::MakeStateOptions make;
  auto* make_cmd = app.add_subcommand("make-state", "Emit a state file on standard output");
  make_cmd->add_option("kind", make.kind, "coherent | dicke | twist | custom")
      ->required()
      ->check(CLI::IsMember({"coherent", "dicke", "twist", "custom"}));
  make_cmd->add_option("--n", make.n, "Number of atoms")->required();
  make_cmd->add_option("--theta", make.theta, "Polar angle in radians");
  make_cmd->add_option("--phi", make.phi, "Azimuth in radians");
  make_cmd->add_option("--m", make.m, "Magnetic quantum number (dicke)");
  make_cmd->add_option("--mu", make.mu, "Twisting angle (twist)");
  make_cmd->add_option("--coeffs", make.coeffs, "Coefficients m=+j..-j, each re or re:im")
      ->delimiter(',');
  make_cmd->add_flag("--renormalize", make.renormalize, "Rescale custom coefficients");

  cli::SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate metrics over a parameter range as CSV");
  sweep_cmd->add_option("kind", sweep.kind, "coherent | twist | dicke")
      ->required()
      ->check(CLI::IsMember({"coherent", "twist", "dicke"}));
  sweep_cmd->add_option("--param", sweep.parameter,
                        "Swept parameter: theta, phi, mu or m (default: theta, mu, m by kind)");
  sweep_cmd->add_option("--start", sweep.start)->required();
  sweep_cmd->add_option("--stop", sweep.stop)->required();
  sweep_cmd->add_option("--steps", sweep.steps)->required();
  sweep_cmd->add_option("--n", sweep.n, "Number of atoms")->required();
  sweep_cmd->add_option("--theta", sweep.theta, "Fixed polar angle in radians");
  sweep_cmd->add_option("--phi", sweep.phi, "Fixed azimuth in radians");
  sweep_cmd->add_option("--mu", sweep.mu, "Fixed twisting angle");
  sweep_cmd->add_option("-o,--output", sweep.output, "CSV path, - for standard output")
      ->capture_default_str();
  sweep_cmd->add_option("--threads", sweep.threads)->capture_default_str();
  sweep_cmd->add_option("--s-tol", sweep.analysis.s_tolerance)->capture_default_str();

  cli::OracleCheckOptions check;
  std::string n_range = "2..8";
  auto* check_cmd =
      app.add_subcommand("oracle-check", "Compare the Dicke path with the 2^N tensor oracle");
  check_cmd->add_option("--n", n_range, "Atom count N or range A..B")->capture_default_str();
  check_cmd->add_option("--trials", check.trials, "Random states per N")->capture_default_str();
  check_cmd->add_option("--seed", check.seed)->capture_default_str();
  check_cmd->add_option("--cap", check.cap, "Largest N the oracle accepts")->capture_default_str();
  check_cmd->add_option("--threads", check.threads)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cli::kExitOk : cli::kExitError;
  }

  if (analyze_cmd->parsed()) return cli::cmd_analyze(analyze, std::cout, std::cerr);
  if (make_cmd->parsed()) return cli::cmd_make_state(make, std::cout, std::cerr);
  if (sweep_cmd->parsed()) return cli::cmd_sweep(sweep, std::cout, std::cerr);
  if (check_cmd->parsed()) {
    try {
      std::tie(check.n_min, check.n_max) = cli::parse_n_range(n_range);
    } catch (const spinent::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return cli::kExitError;
    }
    return cli::cmd_oracle_check(check, std::cout, std::cerr);
  }
  return cli::kExitError;
}
