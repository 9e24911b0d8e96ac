#include "simplexstep/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "simplexstep/admissibility.hpp"
#include "simplexstep/divergence.hpp"
#include "simplexstep/dynamics.hpp"
#include "simplexstep/error.hpp"
#include "simplexstep/harness.hpp"
#include "simplexstep/io.hpp"

namespace simplexstep {

namespace fs = std::filesystem;

namespace {

enum class Format { Csv, Json };

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return kExitParseError;
    case ErrorKind::Overflow: return kExitNumericFailure;
    default: return kExitDomainError;
  }
}

void emit(std::ostream& out, const Table& table, Format format) {
  if (format == Format::Json) write_json(out, table);
  else write_csv(out, table);
}

const char* extension(Format format) { return format == Format::Json ? ".json" : ".csv"; }

void write_file(const fs::path& path, const Table& table, Format format) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
  emit(file, table, format);
  if (!file) throw std::runtime_error("failed writing " + path.string());
}

// Parses a probability list and reports whether normalization or clamping changed it.
Belief belief_from_flag(const std::string& text, bool& adjusted) {
  const auto raw = parse_real_list(text);
  Belief p = make_belief(raw);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (std::abs(raw[i] - p[i]) > 1e-12) adjusted = true;
  }
  return p;
}

struct BoundArgs {
  std::string probs;
  double b_max = BarrierConfig{}.b_max;
};

int cmd_bound(const BoundArgs& args, Format format, std::ostream& out, std::ostream& err) {
  bool adjusted = false;
  const Belief p = belief_from_flag(args.probs, adjusted);
  const BarrierConfig cfg{args.b_max, 0.0};
  cfg.validate();
  if (adjusted) err << "warning: --p was renormalized onto the simplex interior\n";

  const double b = normalized_entropy(p);
  Table table{{"eta_max", "b_entropy", "alpha", "backoff", "eta_ce", "normalized"}, {}};
  table.rows.push_back({format_double(ce_step_bound(p)), format_double(b), format_double(barrier(b, cfg)),
                        format_double(backoff(b, cfg)), format_double(ce_step(p, cfg)), adjusted ? "1" : "0"});
  emit(out, table, format);
  return kExitOk;
}

struct StepArgs {
  std::string probs;
  std::string target;
  double eta = 0.0;
  std::string map;
};

int cmd_step(const StepArgs& args, Format format, std::ostream& out, std::ostream& err) {
  const auto map = parse_step_map(args.map);
  if (!map) throw Error(ErrorKind::ParseError, "--map must be 'projected' or 'mirror'");
  bool adjusted = false;
  const Belief p = belief_from_flag(args.probs, adjusted);
  const Target q = belief_from_flag(args.target, adjusted);
  if (adjusted) err << "warning: --p or --q was renormalized onto the simplex interior\n";

  const Belief next = apply_step(*map, p, q, args.eta);
  const Admissibility adm = is_admissible(args.eta, p);

  Table table{{}, {{}}};
  for (std::size_t i = 0; i < next.size(); ++i) {
    table.header.push_back("p_" + std::to_string(i));
    table.rows[0].push_back(format_double(next[i]));
  }
  table.header.insert(table.header.end(), {"kl_before", "kl_after", "admissible", "gap", "normalized"});
  table.rows[0].insert(table.rows[0].end(), {format_double(kl(p, q)), format_double(kl(next, q)),
                                             adm.admissible ? "1" : "0", format_double(adm.gap),
                                             adjusted ? "1" : "0"});
  emit(out, table, format);
  return kExitOk;
}

struct ExperimentArgs {
  std::string config_path;
  std::string out_dir = "experiment_out";
};

int cmd_experiment(const ExperimentArgs& args, Format format, std::ostream& out, std::ostream& err) {
  ExperimentConfig cfg;
  try {
    if (!args.config_path.empty()) {
      std::ifstream file(args.config_path, std::ios::binary);
      if (!file) {
        err << "error: cannot read config " << args.config_path << '\n';
        return kExitParseError;
      }
      const std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
      cfg = parse_experiment_config(text);
    } else {
      cfg.validate();
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }

  std::vector<StrategyRun> runs;
  try {
    runs = run_experiment(cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumericFailure;
  }

  const fs::path dir(args.out_dir);
  fs::create_directories(dir);
  for (const auto& run : runs) {
    const fs::path path = dir / (run.name + extension(format));
    write_file(path, metrics_table(run.rows, cfg.c_classes), format);
    out << path.string() << '\n';
  }
  const fs::path summary = dir / (std::string("summary") + extension(format));
  write_file(summary, summary_table(runs, cfg.q_phase2), format);
  out << summary.string() << '\n';
  return kExitOk;
}

struct SweepArgs {
  std::size_t n = 0;
  std::string out_path;
  double b_max = BarrierConfig{}.b_max;
};

int cmd_sweep(const SweepArgs& args, Format format, std::ostream& out) {
  const BarrierConfig cfg{args.b_max, 0.0};
  const Table table = sweep_table(sweep_binary_slice(args.n, cfg));
  if (args.out_path.empty()) {
    emit(out, table, format);
  } else {
    write_file(args.out_path, table, format);
    out << args.out_path << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Admissible cross-entropy step bounds on the probability simplex", "simplexstep"};
  app.require_subcommand(1);

  std::string format_name = "csv";
  const auto add_format = [&format_name](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"csv", "json"}));
  };

  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "Evaluate the step bound and entropy backoff at a belief");
  bound->add_option("--p", bound_args.probs, "Comma-separated probabilities")->required();
  bound->add_option("--b-max", bound_args.b_max, "Clamp for normalized entropy before the barrier");
  add_format(bound);

  StepArgs step_args;
  auto* step = app.add_subcommand("step", "Apply one update step toward a target");
  step->add_option("--p", step_args.probs, "Comma-separated probabilities")->required();
  step->add_option("--q", step_args.target, "Comma-separated target probabilities")->required();
  step->add_option("--eta", step_args.eta, "Step size")->required();
  step->add_option("--map", step_args.map, "projected or mirror")->required();
  add_format(step);

  ExperimentArgs exp_args;
  auto* experiment = app.add_subcommand("experiment", "Run the distribution-shift tracking experiment");
  experiment->add_option("--config", exp_args.config_path, "JSON experiment configuration");
  experiment->add_option("--out", exp_args.out_dir, "Output directory");
  add_format(experiment);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Tabulate the bound on the binary slice (x, 1 - x)");
  sweep->add_option("--n", sweep_args.n, "Number of grid points")->required();
  sweep->add_option("--out", sweep_args.out_path, "Output file (standard output when omitted)");
  sweep->add_option("--b-max", sweep_args.b_max, "Clamp for normalized entropy before the barrier");
  add_format(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParseError;
  }
  const Format format = format_name == "json" ? Format::Json : Format::Csv;

  try {
    if (bound->parsed()) return cmd_bound(bound_args, format, out, err);
    if (step->parsed()) return cmd_step(step_args, format, out, err);
    if (experiment->parsed()) return cmd_experiment(exp_args, format, out, err);
    if (sweep->parsed()) return cmd_sweep(sweep_args, format, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumericFailure;
  }
  return kExitParseError;
}

}  // namespace simplexstep
