#pragma once

#include <string>
#include <variant>

#include "simplexstep/admissibility.hpp"
#include "simplexstep/simplex.hpp"

namespace simplexstep {

/// A constant step regardless of the belief.
struct FixedStep {
  double eta;
};

/// min(eta_base, ce_step_bound(p)); the bound without the entropy backoff.
struct BoundClipped {
  double eta_base;
};

/// min(eta_base, ce_step_bound(p)) / (1 + alpha(B(p))).
struct AdsAware {
  double eta_base;
};

using StepKind = std::variant<FixedStep, BoundClipped, AdsAware>;

/// A step-size rule together with the barrier settings it uses.
struct StrategySpec {
  StepKind kind;
  BarrierConfig barrier_cfg{};

  /// Throws InvalidConfig unless the step parameter is finite and positive.
  void validate() const;
};

/// Step the strategy takes at belief p.
double effective_step(const StrategySpec& spec, const Belief& p);

/// Short tag such as "fixed", "bound_clipped" or "ads_aware".
std::string kind_name(const StepKind& kind);

}  // namespace simplexstep
