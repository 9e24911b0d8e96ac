#include "simplexstep/energy.hpp"

#include <cmath>

#include "simplexstep/error.hpp"

namespace simplexstep {

namespace {

void require_same_size(const Belief& p, const Target& q) {
  if (p.size() != q.size()) throw Error(ErrorKind::DimensionMismatch, "belief and target differ in dimension");
}

}  // namespace

double ce_energy(const Belief& p, const Target& q) {
  require_same_size(p, q);
  double e = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) e -= q[i] * std::log(p[i]);
  return e;
}

std::vector<double> ce_gradient(const Belief& p, const Target& q) {
  require_same_size(p, q);
  std::vector<double> g(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) g[i] = -q[i] / p[i];
  return g;
}

std::vector<double> ce_hessian_diag_full(const Belief& p, const Target& q) {
  require_same_size(p, q);
  std::vector<double> h(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) h[i] = q[i] / (p[i] * p[i]);
  return h;
}

std::vector<double> ce_hessian_diag_proxy(const Belief& p) {
  std::vector<double> h(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) h[i] = 1.0 / p[i];
  return h;
}

CurvaturePair curvature_constants(const Belief& p) { return {1.0 / p.max(), 1.0 / p.min()}; }

double mse_energy(const Belief& p, const Target& y) {
  require_same_size(p, y);
  double m = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = p[i] - y[i];
    m += d * d;
  }
  return m;
}

}  // namespace simplexstep
