#pragma once

#include <vector>

#include "simplexstep/simplex.hpp"

namespace simplexstep {

/// Negative entropy, the potential generating KL as a Bregman divergence.
double negentropy(const Belief& p);

/// Gradient of negentropy: 1 + log p_i.
std::vector<double> negentropy_gradient(const Belief& p);

/**
 * KL divergence D(p || q) in nats.
 *
 * Evaluated as sum_i q_i h(p_i / q_i - 1) with h(x) = (1 + x) log(1 + x) - x,
 * which equals sum_i p_i log(p_i / q_i) on the simplex but has no cancellation
 * for nearby arguments and is nonnegative term by term.
 */
double kl(const Belief& p, const Belief& q);

/// Bregman form phi(p) - phi(q) - <grad phi(q), p - q>; an independent route to kl().
double bregman_kl(const Belief& p, const Belief& q);

/// D(p||q) - D(p||r) - D(r||q) + <grad phi(q) - grad phi(r), p - r>. Zero up to rounding.
double three_point_residual(const Belief& p, const Belief& r, const Belief& q);

}  // namespace simplexstep
