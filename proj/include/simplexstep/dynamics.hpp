#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "simplexstep/simplex.hpp"
#include "simplexstep/strategy.hpp"

namespace simplexstep {

enum class StepMap {
  Projected,  ///< Euclidean projection of the explicit gradient step
  Mirror,     ///< multiplicative-weights (entropic mirror descent) step
};

std::string_view to_string(StepMap map) noexcept;
std::optional<StepMap> parse_step_map(std::string_view name) noexcept;

/// project_simplex(p - eta * grad E(p)) for the CE energy with target q.
Belief projected_gradient_step(const Belief& p, const Target& q, double eta);

/**
 * p_i <- p_i exp(-eta grad E(p)_i), normalized.
 *
 * Exponent arguments are shifted by their maximum, so arbitrarily large spreads
 * only underflow the losing coordinates (which the interior clamp then lifts).
 * Throws Overflow when an argument itself is not finite.
 */
Belief mirror_descent_step(const Belief& p, const Target& q, double eta);

Belief apply_step(StepMap map, const Belief& p, const Target& q, double eta);

/// D(F(p1) || F(p2)) / D(p1 || p2) for the chosen step map F.
double contraction_ratio(const Belief& p1, const Belief& p2, const Target& q, double eta, StepMap map);

struct ContractionConfig {
  double c_norm = 1.0;  ///< constant of the local KL / squared-Euclidean equivalence
  double pair_radius = 1e-4;

  void validate() const;

  /// c_norm = 1 / min_i q_i.
  static ContractionConfig for_anchor(const Target& q, double pair_radius = 1e-4);
};

/// k(eta) = 1 - eta (2 mu - eta L^2) / c_norm with (mu, L) read from p.
double contraction_factor(const Belief& p, double eta, const ContractionConfig& cfg);

/// Normalized label histogram with the interior clamp applied.
Belief empirical_anchor(std::span<const std::size_t> labels, std::size_t classes);

/// N + 1 points joined by N steps.
struct Trajectory {
  std::vector<Belief> points;
  std::vector<double> steps;
};

using StepRule = std::function<double(const Belief&)>;

/**
 * Applies the step map until kl(p_t, q) < tol or max_steps steps were taken.
 * The step size for each move is read from the rule at the current point.
 */
Trajectory iterate(const Belief& p0, const Target& q, const StepRule& rule, StepMap map, std::size_t max_steps,
                   double tol);
Trajectory iterate(const Belief& p0, const Target& q, const StrategySpec& rule, StepMap map, std::size_t max_steps,
                   double tol);

}  // namespace simplexstep
