#include "simplexstep/harness.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "simplexstep/divergence.hpp"
#include "simplexstep/dynamics.hpp"
#include "simplexstep/error.hpp"

namespace simplexstep {

std::vector<NamedStrategy> default_strategies() {
  return {
      {"high", {FixedStep{2.0}}},
      {"low", {FixedStep{0.1}}},
      {"ads", {AdsAware{1.0}}},
  };
}

void ExperimentConfig::validate() const {
  if (c_classes < 2) throw Error(ErrorKind::InvalidConfig, "c_classes must be at least 2");
  if (p0.size() != c_classes || q_phase1.size() != c_classes || q_phase2.size() != c_classes) {
    throw Error(ErrorKind::InvalidConfig, "p0 and both targets must have c_classes entries");
  }
  if (total_steps < 1 || total_steps > kMaxTotalSteps) {
    throw Error(ErrorKind::InvalidConfig, "total_steps must lie in [1, " + std::to_string(kMaxTotalSteps) + "]");
  }
  if (shift_step >= total_steps) throw Error(ErrorKind::InvalidConfig, "shift_step must be below total_steps");
  if (strategies.empty()) throw Error(ErrorKind::InvalidConfig, "no strategies configured");
  std::set<std::string> names;
  for (const auto& s : strategies) {
    if (s.name.empty()) throw Error(ErrorKind::InvalidConfig, "strategy names must be nonempty");
    if (!names.insert(s.name).second) throw Error(ErrorKind::InvalidConfig, "duplicate strategy name " + s.name);
    s.spec.validate();
  }
}

std::vector<MetricsRow> run_strategy(const ExperimentConfig& cfg, const StrategySpec& spec) {
  std::vector<MetricsRow> rows;
  rows.reserve(cfg.total_steps);
  Belief p = cfg.p0;
  for (std::size_t t = 0; t < cfg.total_steps; ++t) {
    const Target& q = cfg.target_at(t);
    const double eta = effective_step(spec, p);
    const double eta_max = ce_step_bound(p);
    rows.push_back({t, p.values(), kl(p, q), normalized_entropy(p), eta, eta_max, eta / eta_max});
    p = mirror_descent_step(p, q, eta);
  }
  return rows;
}

std::vector<StrategyRun> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<std::future<std::vector<MetricsRow>>> pending;
  pending.reserve(cfg.strategies.size());
  for (const auto& s : cfg.strategies) {
    pending.push_back(std::async(std::launch::async, [&cfg, &s] { return run_strategy(cfg, s.spec); }));
  }

  std::vector<StrategyRun> runs;
  runs.reserve(cfg.strategies.size());
  for (std::size_t i = 0; i < pending.size(); ++i) {
    const auto& s = cfg.strategies[i];
    try {
      runs.push_back({s.name, s.spec, pending[i].get()});
    } catch (const Error& e) {
      // Drain the remaining futures before rethrowing so no thread outlives cfg.
      for (std::size_t j = i + 1; j < pending.size(); ++j) pending[j].wait();
      throw Error(e.kind(), "strategy '" + s.name + "': " + e.what());
    }
  }
  return runs;
}

std::vector<SweepRow> sweep_binary_slice(std::size_t n_points, const BarrierConfig& cfg) {
  if (n_points < 3) throw Error(ErrorKind::OutOfRange, "sweep needs at least 3 points");
  cfg.validate();
  std::vector<SweepRow> rows;
  rows.reserve(n_points);
  const double denom = static_cast<double>(n_points + 1);
  for (std::size_t i = 1; i <= n_points; ++i) {
    // Both coordinates are computed as exact quotients, so row i and row n+1-i mirror bit for bit.
    const double x = static_cast<double>(i) / denom;
    const double rest = static_cast<double>(n_points + 1 - i) / denom;
    const Belief p = make_belief({x, rest});
    rows.push_back({x, ce_step_bound(p), normalized_entropy(p), ce_step(p, cfg)});
  }
  return rows;
}

RunSummary summarize(const std::vector<MetricsRow>& rows, const Target& target) {
  if (rows.empty()) throw Error(ErrorKind::EmptyInput, "no rows to summarize");
  RunSummary s{0.0, std::nullopt, false, 0.0};
  for (const auto& row : rows) {
    if (row.probs.size() != target.size()) throw Error(ErrorKind::DimensionMismatch, "row and target differ");
    const Belief p = make_belief(row.probs);
    const double d = kl(p, target);
    if (!s.converged_step && d < kConvergedKl) s.converged_step = row.t;
    if (*std::min_element(row.probs.begin(), row.probs.end()) < kCollapseCoordinate) s.collapsed = true;
    s.max_ratio = std::max(s.max_ratio, row.ratio);
    s.final_kl = d;
  }
  return s;
}

}  // namespace simplexstep
