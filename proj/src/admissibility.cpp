#include "simplexstep/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "simplexstep/energy.hpp"
#include "simplexstep/error.hpp"

namespace simplexstep {

void BarrierConfig::validate() const {
  if (!(b_max > 0.0 && b_max < 1.0)) throw Error(ErrorKind::InvalidConfig, "b_max must lie in (0, 1)");
  if (!(eta_floor >= 0.0) || !std::isfinite(eta_floor)) {
    throw Error(ErrorKind::InvalidConfig, "eta_floor must be finite and nonnegative");
  }
}

double normalized_entropy(const Belief& p) {
  const double b = entropy(p) / std::log(static_cast<double>(p.size()));
  return std::clamp(b, 0.0, 1.0);
}

double barrier(double b, const BarrierConfig& cfg) {
  if (!(b >= 0.0 && b <= 1.0)) throw Error(ErrorKind::OutOfRange, "normalized entropy must lie in [0, 1]");
  cfg.validate();
  return -std::log1p(-std::min(b, cfg.b_max));
}

double backoff(double b, const BarrierConfig& cfg) { return 1.0 / (1.0 + barrier(b, cfg)); }

double ce_step_bound(const Belief& p) {
  const double lo = p.min();
  return 2.0 * lo * lo / p.max();
}

double ce_step(const Belief& p, const BarrierConfig& cfg) {
  const double bound = ce_step_bound(p);
  const double eta = bound * backoff(normalized_entropy(p), cfg);
  return std::min(bound, std::max(eta, cfg.eta_floor));
}

double mse_step(double b, const BarrierConfig& cfg) { return backoff(b, cfg); }

double mse_step(const Belief& p, const BarrierConfig& cfg) { return backoff(normalized_entropy(p), cfg); }

Belief mse_compensate(const Belief& p, const Target& y, double eta) {
  if (p.size() != y.size()) throw Error(ErrorKind::DimensionMismatch, "belief and target differ in dimension");
  if (!(eta >= 0.0 && eta <= 1.0)) throw Error(ErrorKind::OutOfRange, "compensation step must lie in [0, 1]");
  if (eta == 1.0) return y;
  std::vector<double> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = (1.0 - eta) * p[i] + eta * y[i];
  return make_belief(out);
}

double mse_residual_after_ads(double b, const Belief& p, const Target& y, const BarrierConfig& cfg) {
  const double alpha = barrier(b, cfg);
  const double shrink = alpha / (1.0 + alpha);
  return shrink * shrink * mse_energy(p, y);
}

Admissibility is_admissible(double eta, const Belief& p) {
  // eta (2 mu - eta L^2) = eta L^2 (2 mu / L^2 - eta); the factored form keeps
  // the sign of the gap identical to the comparison against the bound.
  const double ell = curvature_constants(p).ell;
  const double bound = ce_step_bound(p);
  const double gap = eta * ell * ell * (bound - eta);
  return {eta > 0.0 && eta < bound, gap};
}

}  // namespace simplexstep
