#pragma once

#include <vector>

#include "simplexstep/simplex.hpp"

namespace simplexstep {

/// Local strong-convexity (mu) and smoothness (ell) constants, both in 1/probability units.
struct CurvaturePair {
  double mu;
  double ell;
};

// Cross-entropy energy E(p) = -sum_i q_i log p_i and its derivatives.
double ce_energy(const Belief& p, const Target& q);
std::vector<double> ce_gradient(const Belief& p, const Target& q);
/// Diagonal of the exact Hessian, q_i / p_i^2.
std::vector<double> ce_hessian_diag_full(const Belief& p, const Target& q);
/// Diagonal of the target-free curvature proxy, 1 / p_i.
std::vector<double> ce_hessian_diag_proxy(const Belief& p);

/// (min, max) of the proxy Hessian diagonal: mu = 1/max p, ell = 1/min p.
CurvaturePair curvature_constants(const Belief& p);

/// Squared Euclidean distance ||p - y||^2.
double mse_energy(const Belief& p, const Target& y);

}  // namespace simplexstep
