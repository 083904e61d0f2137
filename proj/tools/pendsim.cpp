// Command-line front end: `stark` prints single-molecule qubit data,
// `scan` sweeps one parameter axis against time and writes CSV, `limit`
// prints the infinite-time observable at fixed parameters.
//
// Exit codes: 0 success, 2 configuration error, 3 convergence failure.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "pendsim/pendular.hpp"
#include "pendsim/scan.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitConvergence = 3;

struct ScanArgs {
  int n = 3;
  std::string observable;
  std::string initial;
  std::string gamma;
  std::string w;
  std::string omega;
  double alpha = pendsim::kDefaultAlpha;
  std::string t;
  std::string rho_in = "initial";
  int jmax = pendsim::kDefaultJmax;
  std::string out;
};

pendsim::ScanConfig to_config(const ScanArgs& args, bool with_time) {
  pendsim::ScanConfig cfg;
  cfg.n = args.n;
  cfg.observable = pendsim::parse_observable(args.observable);
  cfg.initial = pendsim::InitialStateSpec::parse(args.initial);
  cfg.gamma = pendsim::AxisSpec::parse(args.gamma);
  cfg.w = pendsim::AxisSpec::parse(args.w);
  cfg.omega = pendsim::AxisSpec::parse(args.omega);
  cfg.alpha = args.alpha;
  cfg.jmax = args.jmax;
  cfg.rho_in = pendsim::parse_rho_in(args.rho_in);
  if (with_time) cfg.t_grid = pendsim::AxisSpec::parse(args.t);
  return cfg;
}

void add_common_flags(CLI::App* cmd, ScanArgs& args) {
  cmd->add_option("--n", args.n, "number of molecules (2 or 3)")->required();
  cmd->add_option("--observable", args.observable,
                  "negativity3|fidelity|purity|populations")
      ->required();
  cmd->add_option("--initial", args.initial, "ghz|w|sep001|a,b")->required();
  cmd->add_option("--gamma", args.gamma, "decoherence factor: v or lo:hi:count")->required();
  cmd->add_option("--w", args.w, "reduced field: v or lo:hi:count")->required();
  cmd->add_option("--omega", args.omega, "dipole coupling: v or lo:hi:count")->required();
  cmd->add_option("--alpha", args.alpha, "chain-field angle in radians (default pi/2)");
  cmd->add_option("--jmax", args.jmax, "basis truncation (default 40)");
  cmd->add_option("--rho-in", args.rho_in, "fidelity input: psi-|phi+|initial");
}

int run_stark(double w, int jmax) {
  const pendsim::PendularQubit q = pendsim::solve_qubit(w, jmax);
  std::printf("E0 = %s\n", pendsim::format_significant(q.E0).c_str());
  std::printf("E1 = %s\n", pendsim::format_significant(q.E1).c_str());
  std::printf("C0 = %s\n", pendsim::format_significant(q.C0).c_str());
  std::printf("C1 = %s\n", pendsim::format_significant(q.C1).c_str());
  std::printf("Ct = %s\n", pendsim::format_significant(q.Ct).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pendular-state qubit simulator"};
  app.require_subcommand(1);

  double stark_w = 0.0;
  int stark_jmax = pendsim::kDefaultJmax;
  CLI::App* stark = app.add_subcommand("stark", "solve one molecule and print qubit data");
  stark->add_option("--w", stark_w, "reduced field")->required();
  stark->add_option("--jmax", stark_jmax, "basis truncation (default 40)");

  ScanArgs scan_args;
  CLI::App* scan = app.add_subcommand("scan", "sweep one axis against time, write CSV");
  add_common_flags(scan, scan_args);
  scan->add_option("--t", scan_args.t, "time grid lo:hi:count")->required();
  scan->add_option("--out", scan_args.out, "output CSV path")->required();

  ScanArgs limit_args;
  CLI::App* limit = app.add_subcommand("limit", "infinite-time observable at fixed parameters");
  add_common_flags(limit, limit_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (stark->parsed()) {
      return run_stark(stark_w, stark_jmax);
    }
    if (scan->parsed()) {
      const auto records = pendsim::run_scan(to_config(scan_args, true));
      pendsim::write_csv(records, scan_args.out);
      std::cout << "wrote " << records.size() << " records to " << scan_args.out << "\n";
      return 0;
    }
    if (limit->parsed()) {
      const double value = pendsim::long_time_value(to_config(limit_args, false));
      std::cout << pendsim::format_significant(value) << "\n";
      return 0;
    }
  } catch (const pendsim::ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitConfig;
}
