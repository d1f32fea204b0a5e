// Copyright 2026 The rabisim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end for the ladder-system simulator.
//
//   rabi simulate --config scenario.json [--kernel K] [--out PATH] ...
//   rabi eigs g1 [g2 g3 g4 ...]
//   rabi verify [--seed N] [--draws N]
//
// Exit codes: 0 success; 1 verification failure; 2 configuration or usage
// error; 3 model not resonant; 4 eigensolver convergence failure.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rabi/closed_form.hpp"
#include "rabi/errors.hpp"
#include "rabi/evolution.hpp"
#include "rabi/ladder.hpp"
#include "rabi/scenario.hpp"
#include "rabi/spectral.hpp"
#include "rabi/text.hpp"
#include "rabi/verify.hpp"

namespace {

using namespace rabi;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNotResonant = 3;
constexpr int kExitConvergence = 4;

struct SimulateArgs {
  std::string config_path;
  std::string kernel;
  std::string out;
  bool normalize_initial = false;
  std::optional<std::uint64_t> seed;
  bool kernel_given = false;
  bool out_given = false;
};

int run_simulate(const SimulateArgs& args) {
  ScenarioConfig cfg = load_scenario(args.config_path);
  if (args.kernel_given) cfg.kernel = parse_kernel(args.kernel);
  if (args.normalize_initial) cfg.normalize_initial = true;
  if (args.out_given) cfg.output.path = args.out;

  const LadderModel model = cfg.build_model();
  if (!model.anharmonic_ordering())
    std::cerr << "warning: level gaps are not strictly decreasing up the ladder"
                 " (unusual for a physical anharmonic system; simulation proceeds)\n";

  PropagatorOptions opts;
  opts.kernel = cfg.kernel;
  opts.normalize_initial = cfg.normalize_initial;

  // Keep the propagators so the summary can report the worst unitarity
  // defect over the whole grid; dropped from the output unless requested.
  const TimeSeries ts = time_series(model, cfg.time.points(), cfg.initial_level, opts,
                                    /*keep_propagators=*/true);
  double worst_defect = 0.0;
  for (const ComplexMatrix& u : ts.propagators)
    worst_defect = std::max(worst_defect, unitarity_defect(u));

  const std::string kernel_used = kernel_name(resolve_kernel(model, cfg.kernel));
  const std::string body = cfg.output.format == "json"
                               ? render_json(ts, cfg.output.include_propagator, kernel_used,
                                             args.seed)
                               : render_csv(ts, cfg.output.include_propagator);

  const bool to_stdout = cfg.output.path == "-";
  if (to_stdout) {
    std::cout << body;
  } else {
    std::ofstream out(cfg.output.path, std::ios::binary);
    if (!out) throw ConfigError("cannot write output file: " + cfg.output.path);
    out << body;
    if (!out.good()) throw ConfigError("write failed: " + cfg.output.path);
  }

  // The summary goes to stderr when the data itself occupies stdout.
  std::ostream& summary = to_stdout ? std::cerr : std::cout;
  summary << "levels: " << model.levels() << "\n"
          << "kernel: " << kernel_used << "\n"
          << "rows: " << ts.times.size() << "\n"
          << "max unitarity defect: " << format_sci(worst_defect, 4) << "\n";
  if (!to_stdout) summary << "wrote " << cfg.output.path << "\n";
  return kExitOk;
}

// Analytic eigenvalues for 1..4 couplings, descending; nullopt when the
// ladder is too large for a closed form.
std::optional<std::vector<double>> closed_eigenvalues(const CouplingVector& g) {
  switch (g.size()) {
    case 1:
      return std::vector<double>{g[0], -g[0]};
    case 2: {
      const double omega = std::sqrt(g[0] * g[0] + g[1] * g[1]);
      return std::vector<double>{omega, 0.0, -omega};
    }
    case 3: {
      const auto sp = spectrum4(g).eigenvalues();
      return std::vector<double>(sp.begin(), sp.end());
    }
    case 4: {
      const auto sp = spectrum5(g).eigenvalues();
      return std::vector<double>(sp.begin(), sp.end());
    }
    default:
      return std::nullopt;
  }
}

int run_eigs(const std::vector<double>& coupling_values) {
  const CouplingVector g(coupling_values);
  std::cout << "couplings: (";
  for (int k = 0; k < g.size(); ++k)
    std::cout << (k ? ", " : "") << format_double(g[k]);
  std::cout << ")  [" << g.levels() << " levels]\n";

  std::optional<std::vector<double>> closed;
  if (g.size() > 4) {
    std::cout << "closed form: not available for ladders with more than 5 levels\n";
  } else {
    try {
      if (g.size() == 3) {
        const QuarticSpectrum4 sp = spectrum4(g);
        std::cout << "A = " << format_double(sp.A) << "\nB = " << format_double(sp.B)
                  << "\nX = " << format_double(sp.X) << "\nY = " << format_double(sp.Y) << "\n";
      } else if (g.size() == 4) {
        const QuinticSpectrum5 sp = spectrum5(g);
        std::cout << "A = " << format_double(sp.A) << "\nB = " << format_double(sp.B)
                  << "\nX = " << format_double(sp.X) << "\nY = " << format_double(sp.Y) << "\n";
      }
      closed = closed_eigenvalues(g);
    } catch (const ClosedFormUnavailable& e) {
      std::cout << "closed form: DEGENERATE (" << e.what() << ")\n";
    }
  }

  const SpectralDecomposition eig = tridiag_eigen(coupling_matrix(g));
  std::cout << "eigenvalues (descending):\n";
  if (closed) {
    std::cout << "  " << pad("closed", 26) << "spectral\n";
    double deviation = 0.0;
    for (std::size_t j = 0; j < eig.eigenvalues.size(); ++j) {
      std::cout << "  " << pad(format_double((*closed)[j]), 26)
                << format_double(eig.eigenvalues[j]) << "\n";
      deviation = std::max(deviation, std::abs((*closed)[j] - eig.eigenvalues[j]));
    }
    std::cout << "max |closed - spectral| = " << format_sci(deviation, 4) << "\n";
  } else {
    std::cout << "  spectral\n";
    for (double lambda : eig.eigenvalues) std::cout << "  " << format_double(lambda) << "\n";
  }
  return kExitOk;
}

int run_verify(std::uint64_t seed, int draws) {
  if (draws < 1) {
    std::cerr << "error: --draws must be >= 1\n";
    return kExitConfig;
  }
  const VerifyReport rep = run_property_battery(seed, draws);
  std::cout << format_report(rep);
  return rep.all_pass() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rabi - exact dynamics of an n-level ladder atom under n-1 resonant drives.\n"
      "All energies and frequencies are angular frequencies with hbar = 1."};
  app.require_subcommand(0, 1);

  SimulateArgs sim_args;
  CLI::App* sim = app.add_subcommand(
      "simulate", "Run a scenario file and emit the population time series (CSV or JSON)");
  sim->add_option("--config", sim_args.config_path, "Scenario file (JSON)")->required();
  CLI::Option* kernel_opt = sim->add_option(
      "--kernel", sim_args.kernel, "Propagator kernel: auto | closed | spectral");
  sim->add_flag("--normalize-initial", sim_args.normalize_initial,
                "Right-multiply by U(0)^dag so the propagator starts at the identity");
  sim->add_option("--seed", sim_args.seed, "Seed echoed into JSON output metadata");
  CLI::Option* out_opt =
      sim->add_option("--out", sim_args.out, "Output path ('-' = stdout); overrides the config");

  std::vector<double> eigs_couplings;
  CLI::App* eigs = app.add_subcommand(
      "eigs", "Print the coupling-matrix eigenstructure (closed form vs. numeric)");
  eigs->add_option("couplings", eigs_couplings, "Coupling strengths g1 g2 ...")
      ->required()
      ->expected(1, -1);

  std::uint64_t verify_seed = 1;
  int verify_draws = 100;
  CLI::App* verify =
      app.add_subcommand("verify", "Run the randomized self-check battery and report defects");
  verify->add_option("--seed", verify_seed, "Base seed for the draw streams");
  verify->add_option("--draws", verify_draws, "Number of random draws per property suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  sim_args.kernel_given = kernel_opt->count() > 0;
  sim_args.out_given = out_opt->count() > 0;

  try {
    if (app.got_subcommand(sim)) return run_simulate(sim_args);
    if (app.got_subcommand(eigs)) return run_eigs(eigs_couplings);
    if (app.got_subcommand(verify)) return run_verify(verify_seed, verify_draws);
    std::cout << app.help();
    return kExitConfig;
  } catch (const NotResonant& e) {
    std::cerr << "error: " << e.what() << "\n" << e.report.table();
    return kExitNotResonant;
  } catch (const ConvergenceFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ModelInvalid& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}
