#include "simplexstep/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "simplexstep/error.hpp"

namespace simplexstep {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NonFiniteInput: return "NonFiniteInput";
    case ErrorKind::NonPositiveSum: return "NonPositiveSum";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NegativeStep: return "NegativeStep";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::IdenticalInputs: return "IdenticalInputs";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

void require_finite(std::span<const double> v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) throw Error(ErrorKind::NonFiniteInput, std::string(what) + " has a non-finite entry");
  }
}

void require_min_size(std::span<const double> v, const char* what) {
  if (v.size() < 2) throw Error(ErrorKind::EmptyInput, std::string(what) + " needs at least 2 entries");
}

// Lifts coordinates to the interior floor and rescales the rest so that the
// result sums to one. Rescaling can push another coordinate under the floor,
// hence the fixed-point loop; it terminates because the floored set only grows.
std::vector<double> interior_clamp(std::vector<double> v) {
  const std::size_t n = v.size();
  if (std::all_of(v.begin(), v.end(), [](double x) { return x >= kInteriorEps; })) {
    const double sum = std::accumulate(v.begin(), v.end(), 0.0);
    for (double& x : v) x /= sum;
    if (std::all_of(v.begin(), v.end(), [](double x) { return x >= kInteriorEps; })) return v;
  }

  std::vector<bool> floored(n, false);
  double scale = 1.0;
  for (bool changed = true; changed;) {
    changed = false;
    double rest = 0.0;
    std::size_t n_floored = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (floored[i]) ++n_floored;
      else rest += v[i];
    }
    scale = rest > 0.0 ? (1.0 - static_cast<double>(n_floored) * kInteriorEps) / rest : 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!floored[i] && v[i] * scale < kInteriorEps) {
        floored[i] = true;
        changed = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) v[i] = floored[i] ? kInteriorEps : v[i] * scale;
  return v;
}

}  // namespace

double Belief::min() const noexcept { return *std::min_element(probs_.begin(), probs_.end()); }

double Belief::max() const noexcept { return *std::max_element(probs_.begin(), probs_.end()); }

std::size_t Belief::argmax() const noexcept {
  return static_cast<std::size_t>(std::max_element(probs_.begin(), probs_.end()) - probs_.begin());
}

Belief Belief::uniform(std::size_t classes) {
  std::vector<double> ones(classes, 1.0);
  return make_belief(ones);
}

Belief make_belief(std::span<const double> raw) {
  require_min_size(raw, "belief");
  require_finite(raw, "belief");
  double sum = 0.0;
  for (double x : raw) {
    if (x < 0.0) throw Error(ErrorKind::OutOfRange, "belief has a negative entry");
    sum += x;
  }
  if (!(sum > 0.0)) throw Error(ErrorKind::NonPositiveSum, "belief weights sum to zero");
  if (!std::isfinite(sum)) throw Error(ErrorKind::NonFiniteInput, "belief weights overflow when summed");

  std::vector<double> v(raw.begin(), raw.end());
  for (double& x : v) x /= sum;
  return Belief(interior_clamp(std::move(v)));
}

std::vector<double> euclidean_projection(std::span<const double> v) {
  require_min_size(v, "projection input");
  require_finite(v, "projection input");

  std::vector<double> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  // Largest k with sorted[k-1] > (sum of top k - 1) / k; k = 1 always qualifies.
  double prefix = 0.0;
  double theta = sorted[0] - 1.0;
  for (std::size_t k = 1; k <= sorted.size(); ++k) {
    prefix += sorted[k - 1];
    const double candidate = (prefix - 1.0) / static_cast<double>(k);
    if (sorted[k - 1] > candidate) theta = candidate;
  }

  std::vector<double> out(v.begin(), v.end());
  for (double& x : out) x = std::max(x - theta, 0.0);
  return out;
}

Belief project_simplex(std::span<const double> v) { return make_belief(euclidean_projection(v)); }

Belief softmax(std::span<const double> logits) {
  require_min_size(logits, "logits");
  require_finite(logits, "logits");
  const double top = *std::max_element(logits.begin(), logits.end());
  std::vector<double> w(logits.size());
  std::transform(logits.begin(), logits.end(), w.begin(), [top](double z) { return std::exp(z - top); });
  return make_belief(w);
}

double entropy(const Belief& p) {
  double h = 0.0;
  for (double x : p.probs()) h -= x * std::log(x);
  return h;
}

}  // namespace simplexstep
