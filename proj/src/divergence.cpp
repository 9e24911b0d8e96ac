#include "simplexstep/divergence.hpp"

#include <cmath>

#include "simplexstep/error.hpp"

namespace simplexstep {

namespace {

void require_same_size(const Belief& a, const Belief& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "distributions differ in dimension");
}

// (1 + x) log(1 + x) - x. Below |x| = 1e-2 the closed form loses up to
// log10(1/|x|) digits, so use the alternating series sum_{n>=2} (-x)^n / (n (n-1)).
double kl_kernel(double x) {
  if (std::abs(x) < 1e-2) {
    double term = x * x;
    double sum = 0.0;
    for (int n = 2; n <= 10; ++n) {
      sum += term / static_cast<double>(n * (n - 1));
      term *= -x;
    }
    return sum;
  }
  return (1.0 + x) * std::log1p(x) - x;
}

}  // namespace

double negentropy(const Belief& p) {
  double phi = 0.0;
  for (double x : p.probs()) phi += x * std::log(x);
  return phi;
}

std::vector<double> negentropy_gradient(const Belief& p) {
  std::vector<double> g(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) g[i] = 1.0 + std::log(p[i]);
  return g;
}

double kl(const Belief& p, const Belief& q) {
  require_same_size(p, q);
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) d += q[i] * kl_kernel((p[i] - q[i]) / q[i]);
  return d;
}

double bregman_kl(const Belief& p, const Belief& q) {
  require_same_size(p, q);
  const auto grad_q = negentropy_gradient(q);
  double inner = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) inner += grad_q[i] * (p[i] - q[i]);
  return negentropy(p) - negentropy(q) - inner;
}

double three_point_residual(const Belief& p, const Belief& r, const Belief& q) {
  require_same_size(p, r);
  require_same_size(p, q);
  const auto grad_q = negentropy_gradient(q);
  const auto grad_r = negentropy_gradient(r);
  double inner = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) inner += (grad_q[i] - grad_r[i]) * (p[i] - r[i]);
  return kl(p, q) - kl(p, r) - kl(r, q) + inner;
}

}  // namespace simplexstep
