#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace simplexstep {

/// Coordinates below this are lifted before renormalization so that every
/// log and reciprocal taken on a belief stays finite.
inline constexpr double kInteriorEps = 1e-12;

/**
 * A strictly interior point of the probability simplex.
 *
 * Every coordinate lies in [kInteriorEps, 1] and the coordinates sum to one
 * within 1e-12. Instances can only be produced by the factory functions
 * below, so holding a Belief is proof that the invariants hold.
 */
class Belief {
 public:
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const noexcept { return probs_; }
  const std::vector<double>& values() const noexcept { return probs_; }

  double min() const noexcept;
  double max() const noexcept;
  std::size_t argmax() const noexcept;

  static Belief uniform(std::size_t classes);

  friend bool operator==(const Belief&, const Belief&) = default;

 private:
  explicit Belief(std::vector<double> probs) : probs_(std::move(probs)) {}
  friend Belief make_belief(std::span<const double> raw);

  std::vector<double> probs_;
};

/// Reference distribution defining an energy; shares Belief's invariants.
using Target = Belief;

/// Normalizes nonnegative weights and applies the interior clamp.
Belief make_belief(std::span<const double> raw);
inline Belief make_belief(std::initializer_list<double> raw) {
  return make_belief(std::span<const double>(raw.begin(), raw.size()));
}

/// Euclidean projection onto the closed simplex (no interior clamp).
std::vector<double> euclidean_projection(std::span<const double> v);

/// Euclidean projection followed by the interior clamp.
Belief project_simplex(std::span<const double> v);

Belief softmax(std::span<const double> logits);

/// Shannon entropy in nats.
double entropy(const Belief& p);

}  // namespace simplexstep
