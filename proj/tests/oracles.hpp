#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library: every routine works on raw vectors in long double.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <vector>

namespace oracle {

using Vec = std::vector<double>;

inline long double entropy(const Vec& p) {
  long double h = 0;
  for (double x : p) h -= static_cast<long double>(x) * std::log(static_cast<long double>(x));
  return h;
}

inline long double kl(const Vec& p, const Vec& q) {
  long double d = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    d += static_cast<long double>(p[i]) * std::log(static_cast<long double>(p[i]) / q[i]);
  }
  return d;
}

/// Euclidean projection onto the closed simplex by enumerating every support
/// set: on support S the KKT point is x_S = v_S - tau, tau = (sum v_S - 1)/|S|.
inline Vec projection_active_set(const Vec& v) {
  const std::size_t n = v.size();
  Vec best;
  long double best_dist = std::numeric_limits<long double>::infinity();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    long double sum = 0;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        sum += v[i];
        ++k;
      }
    }
    const long double tau = (sum - 1) / k;
    Vec x(n, 0.0);
    bool feasible = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        x[i] = static_cast<double>(v[i] - tau);
        if (v[i] - tau < 0) feasible = false;
      }
    }
    if (!feasible) continue;
    long double dist = 0;
    for (std::size_t i = 0; i < n; ++i) dist += (static_cast<long double>(x[i]) - v[i]) * (x[i] - v[i]);
    if (dist < best_dist) {
      best_dist = dist;
      best = x;
    }
  }
  return best;
}

/// -sum q_i log x_i extended to the positive orthant.
inline long double ce_energy(const Vec& x, const Vec& q) {
  long double e = 0;
  for (std::size_t i = 0; i < x.size(); ++i) e -= static_cast<long double>(q[i]) * std::log(static_cast<long double>(x[i]));
  return e;
}

/// Central difference of f along coordinate i.
template <class F>
long double central_difference(F&& f, Vec x, std::size_t i, double h) {
  const double x0 = x[i];
  x[i] = x0 + h;
  const long double up = f(x);
  x[i] = x0 - h;
  const long double down = f(x);
  return (up - down) / (2.0L * h);
}

/// Uniform draw from the simplex (Dirichlet(1,...,1)), bounded away from zero.
inline Vec random_simplex(std::mt19937_64& rng, std::size_t n, double floor = 1e-3) {
  std::exponential_distribution<double> expo(1.0);
  Vec p(n);
  double sum = 0;
  for (double& x : p) {
    x = expo(rng) + floor;
    sum += x;
  }
  for (double& x : p) x /= sum;
  return p;
}

/// A zero-sum direction of Euclidean norm `radius`.
inline Vec random_tangent(std::mt19937_64& rng, std::size_t n, double radius) {
  std::normal_distribution<double> gauss;
  Vec d(n);
  double mean = 0;
  for (double& x : d) {
    x = gauss(rng);
    mean += x;
  }
  mean /= static_cast<double>(n);
  double norm = 0;
  for (double& x : d) {
    x -= mean;
    norm += x * x;
  }
  norm = std::sqrt(norm);
  for (double& x : d) x *= radius / norm;
  return d;
}

}  // namespace oracle
