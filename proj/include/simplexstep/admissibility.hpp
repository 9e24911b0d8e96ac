#pragma once

#include "simplexstep/simplex.hpp"

namespace simplexstep {

/**
 * Settings for the entropy barrier.
 *
 * Normalized entropy is clamped to b_max before the barrier is taken, which
 * keeps alpha finite at the uniform belief (where B = 1 exactly). eta_floor
 * is a lower limit on the returned CE step.
 */
struct BarrierConfig {
  double b_max = 1.0 - 1e-9;
  double eta_floor = 0.0;

  /// Throws InvalidConfig unless 0 < b_max < 1 and eta_floor >= 0.
  void validate() const;
};

/// H(p) / log C, clamped into [0, 1] against rounding.
double normalized_entropy(const Belief& p);

/// alpha(B) = -log(1 - min(B, b_max)). Throws OutOfRange for B outside [0, 1].
double barrier(double b, const BarrierConfig& cfg = {});

/// 1 / (1 + alpha(B)).
double backoff(double b, const BarrierConfig& cfg = {});

/// 2 min(p)^2 / max(p): the largest step for which the projected CE update contracts.
double ce_step_bound(const Belief& p);

/// ce_step_bound(p) scaled by backoff(B(p)), raised to eta_floor but never above the bound.
double ce_step(const Belief& p, const BarrierConfig& cfg = {});

/// The MSE compensation step; its unscaled endpoint is 1, so this is backoff(B).
double mse_step(double b, const BarrierConfig& cfg = {});
double mse_step(const Belief& p, const BarrierConfig& cfg = {});

/// (1 - eta) p + eta y for eta in [0, 1].
Belief mse_compensate(const Belief& p, const Target& y, double eta);

/// Closed form (alpha / (1 + alpha))^2 ||p - y||^2 of the MSE left after an ADS-scaled step.
double mse_residual_after_ads(double b, const Belief& p, const Target& y, const BarrierConfig& cfg = {});

struct Admissibility {
  bool admissible;
  double gap;  ///< eta (2 mu - eta L^2)
};

/// Admissible iff 0 < eta < ce_step_bound(p).
Admissibility is_admissible(double eta, const Belief& p);

}  // namespace simplexstep
