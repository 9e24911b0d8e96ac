#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simplexstep/admissibility.hpp"
#include "simplexstep/simplex.hpp"
#include "simplexstep/strategy.hpp"

namespace simplexstep {

struct NamedStrategy {
  std::string name;
  StrategySpec spec;
};

/// High (fixed 2.0), low (fixed 0.1) and ADS-aware (base 1.0) step rules.
std::vector<NamedStrategy> default_strategies();

inline constexpr std::size_t kMaxTotalSteps = 100'000'000;

/**
 * A two-phase tracking task: the target is q_phase1 for t < shift_step and
 * q_phase2 afterwards. Defaults reproduce the 3-class shift experiment.
 */
struct ExperimentConfig {
  std::size_t c_classes = 3;
  Belief p0 = Belief::uniform(3);
  Target q_phase1 = make_belief({0.7, 0.2, 0.1});
  Target q_phase2 = make_belief({0.1, 0.2, 0.7});
  std::size_t shift_step = 200;
  std::size_t total_steps = 600;
  std::vector<NamedStrategy> strategies = default_strategies();
  // Reserved for perturbed variants; the default experiment is noise-free.
  std::uint64_t seed = 0;

  /// Throws InvalidConfig on any violated invariant.
  void validate() const;
  const Target& target_at(std::size_t t) const { return t < shift_step ? q_phase1 : q_phase2; }
};

/// One step of a run. probs is the belief at the start of step t.
struct MetricsRow {
  std::size_t t;
  std::vector<double> probs;
  double kl_to_target;
  double b_entropy;
  double eta_eff;
  double eta_max;
  double ratio;
};

struct StrategyRun {
  std::string name;
  StrategySpec spec;
  std::vector<MetricsRow> rows;
};

/// Runs every strategy (concurrently) with the mirror-descent map; output order follows cfg.strategies.
std::vector<StrategyRun> run_experiment(const ExperimentConfig& cfg);

/// Runs a single strategy of the experiment.
std::vector<MetricsRow> run_strategy(const ExperimentConfig& cfg, const StrategySpec& spec);

struct SweepRow {
  double x;
  double eta_max;
  double b_entropy;
  double eta_ce;
};

/// Binary beliefs (x, 1 - x) at x = i / (n + 1), i = 1..n.
std::vector<SweepRow> sweep_binary_slice(std::size_t n_points, const BarrierConfig& cfg = {});

inline constexpr double kConvergedKl = 1e-3;
inline constexpr double kCollapseCoordinate = 1e-6;

struct RunSummary {
  double final_kl;
  std::optional<std::size_t> converged_step;  ///< first t with kl(p_t, target) < kConvergedKl
  bool collapsed;                             ///< some coordinate fell below kCollapseCoordinate
  double max_ratio;
};

RunSummary summarize(const std::vector<MetricsRow>& rows, const Target& target);

}  // namespace simplexstep
