// sensesim: single runs and configuration sweeps of the sensing/EDCA
// coexistence simulator. Results go to CSV (stdout unless --out).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "sensesim/experiment.hpp"

using namespace sensesim;

int main(int argc, char** argv) {
  CLI::App app{"Discrete-event simulator of trigger-based WLAN sensing coexisting with EDCA data traffic"};

  std::optional<int> config_id;
  std::string access;
  std::optional<int> nsta, numapp, saw, jobs_opt;
  std::optional<std::string> stra;
  std::optional<double> duration_s;
  std::optional<std::uint64_t> seed;
  std::string out_path, trace_path, param_file, ledger_path;

  app.add_option("--config", config_id, "Run a configuration sweep (1, 2 or 3)")->check(CLI::Range(1, 3));
  app.add_option("--access", access, "Sensing medium access: edca, pifs or none");
  app.add_option("--nsta", nsta, "Number of sensing STAs (1..16)");
  app.add_option("--numapp", numapp, "Sensing applications per SAW window");
  app.add_option("--saw-duration", saw, "SAW duration code (units of 100 us)");
  app.add_option("--stra", stra, "Sensing antennas, TxR (e.g. 2x2)");
  app.add_option("--duration-s", duration_s, "Simulated time in seconds");
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--out", out_path, "CSV output file (default stdout)");
  app.add_option("--trace", trace_path, "Write an event trace (single runs only)");
  app.add_option("--ledger", ledger_path, "Write the per-window ledger CSV (single runs only)");
  app.add_option("--param-file", param_file, "key=value parameter file; flags override it");
  app.add_option("--jobs", jobs_opt, "Worker threads for sweeps")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    SimParams p;
    if (!param_file.empty()) {
      std::ifstream in(param_file);
      if (!in) throw std::runtime_error("cannot open parameter file " + param_file);
      apply_param_file(in, p);
    }
    if (!access.empty()) p.access_method = parse_access_method(access);
    if (nsta) p.n_sta = *nsta;
    if (numapp) p.num_app = *numapp;
    if (saw) p.saw_duration_code = *saw;
    if (stra) p.stra = parse_stra(*stra);
    if (duration_s) p.sim_duration_s = *duration_s;
    if (seed) p.rng_seed = *seed;

    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw std::runtime_error("cannot open " + out_path + " for writing");
    }
    std::ostream& out = out_path.empty() ? std::cout : file;

    if (config_id) {
      if (!trace_path.empty() || !ledger_path.empty()) {
        throw std::runtime_error("--trace and --ledger apply to single runs only");
      }
      run_sweep(make_sweep(*config_id, p), out, jobs_opt.value_or(1));
      return out ? 0 : 1;
    }

    validate(p);
    RunOptions opts;
    std::ofstream trace, ledger;
    if (!trace_path.empty()) {
      trace.open(trace_path);
      if (!trace) throw std::runtime_error("cannot open " + trace_path);
      trace << kTraceHeader << '\n';
      opts.trace = &trace;
    }
    if (!ledger_path.empty()) {
      ledger.open(ledger_path);
      if (!ledger) throw std::runtime_error("cannot open " + ledger_path);
      ledger << kLedgerHeader << '\n';
      opts.on_window = [&ledger](const SawWindowLedger& l) { ledger << to_csv(l) << '\n'; };
    }
    const ResultRow row = run_single(p, opts);
    out << kCsvHeader << '\n' << to_csv(row) << '\n';
    return out ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "sensesim: " << e.what() << '\n';
    return 2;
  }
}
