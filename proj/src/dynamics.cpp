#include "simplexstep/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "simplexstep/admissibility.hpp"
#include "simplexstep/divergence.hpp"
#include "simplexstep/energy.hpp"
#include "simplexstep/error.hpp"

namespace simplexstep {

namespace {

void check_step_inputs(const Belief& p, const Target& q, double eta) {
  if (p.size() != q.size()) throw Error(ErrorKind::DimensionMismatch, "belief and target differ in dimension");
  if (std::isnan(eta)) throw Error(ErrorKind::NonFiniteInput, "step size is NaN");
  if (eta < 0.0) throw Error(ErrorKind::NegativeStep, "step size must be nonnegative");
}

}  // namespace

std::string_view to_string(StepMap map) noexcept {
  return map == StepMap::Projected ? "projected" : "mirror";
}

std::optional<StepMap> parse_step_map(std::string_view name) noexcept {
  if (name == "projected") return StepMap::Projected;
  if (name == "mirror") return StepMap::Mirror;
  return std::nullopt;
}

Belief projected_gradient_step(const Belief& p, const Target& q, double eta) {
  check_step_inputs(p, q, eta);
  if (eta == 0.0) return p;
  const auto grad = ce_gradient(p, q);
  std::vector<double> moved(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) moved[i] = p[i] - eta * grad[i];
  return project_simplex(moved);
}

Belief mirror_descent_step(const Belief& p, const Target& q, double eta) {
  check_step_inputs(p, q, eta);
  if (eta == 0.0) return p;
  const auto grad = ce_gradient(p, q);
  std::vector<double> arg(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    arg[i] = -eta * grad[i];
    if (!std::isfinite(arg[i])) throw Error(ErrorKind::Overflow, "mirror step exponent is not finite");
  }
  const double top = *std::max_element(arg.begin(), arg.end());
  std::vector<double> w(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) w[i] = p[i] * std::exp(arg[i] - top);
  return make_belief(w);
}

Belief apply_step(StepMap map, const Belief& p, const Target& q, double eta) {
  return map == StepMap::Projected ? projected_gradient_step(p, q, eta) : mirror_descent_step(p, q, eta);
}

double contraction_ratio(const Belief& p1, const Belief& p2, const Target& q, double eta, StepMap map) {
  if (!(eta > 0.0)) throw Error(ErrorKind::NegativeStep, "contraction is measured for positive steps only");
  const double before = kl(p1, p2);
  if (!(before > 0.0)) throw Error(ErrorKind::IdenticalInputs, "the two beliefs coincide");
  return kl(apply_step(map, p1, q, eta), apply_step(map, p2, q, eta)) / before;
}

void ContractionConfig::validate() const {
  if (!(c_norm > 0.0) || !std::isfinite(c_norm)) throw Error(ErrorKind::InvalidConfig, "c_norm must be positive");
  if (!(pair_radius > 0.0) || !std::isfinite(pair_radius)) {
    throw Error(ErrorKind::InvalidConfig, "pair_radius must be positive");
  }
}

ContractionConfig ContractionConfig::for_anchor(const Target& q, double pair_radius) {
  return {1.0 / q.min(), pair_radius};
}

double contraction_factor(const Belief& p, double eta, const ContractionConfig& cfg) {
  if (!(eta > 0.0)) throw Error(ErrorKind::NegativeStep, "contraction factor needs a positive step");
  cfg.validate();
  return 1.0 - is_admissible(eta, p).gap / cfg.c_norm;
}

Belief empirical_anchor(std::span<const std::size_t> labels, std::size_t classes) {
  if (labels.empty()) throw Error(ErrorKind::EmptyInput, "no labels");
  if (classes < 2) throw Error(ErrorKind::EmptyInput, "need at least 2 classes");
  std::vector<double> counts(classes, 0.0);
  for (std::size_t y : labels) {
    if (y >= classes) throw Error(ErrorKind::IndexOutOfRange, "label index exceeds class count");
    counts[y] += 1.0;
  }
  return make_belief(counts);
}

Trajectory iterate(const Belief& p0, const Target& q, const StepRule& rule, StepMap map, std::size_t max_steps,
                   double tol) {
  if (max_steps < 1) throw Error(ErrorKind::OutOfRange, "max_steps must be at least 1");
  if (!(tol >= 0.0)) throw Error(ErrorKind::OutOfRange, "tolerance must be nonnegative");

  Trajectory traj;
  traj.points.reserve(max_steps + 1);
  traj.steps.reserve(max_steps);
  traj.points.push_back(p0);
  while (traj.steps.size() < max_steps && !(kl(traj.points.back(), q) < tol)) {
    const double eta = rule(traj.points.back());
    traj.points.push_back(apply_step(map, traj.points.back(), q, eta));
    traj.steps.push_back(eta);
  }
  return traj;
}

Trajectory iterate(const Belief& p0, const Target& q, const StrategySpec& rule, StepMap map, std::size_t max_steps,
                   double tol) {
  return iterate(p0, q, [&rule](const Belief& p) { return effective_step(rule, p); }, map, max_steps, tol);
}

}  // namespace simplexstep
