#include "simplexstep/strategy.hpp"

#include <algorithm>
#include <cmath>

#include "simplexstep/error.hpp"

namespace simplexstep {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double step_parameter(const StepKind& kind) {
  return std::visit(overloaded{[](const FixedStep& s) { return s.eta; },
                               [](const BoundClipped& s) { return s.eta_base; },
                               [](const AdsAware& s) { return s.eta_base; }},
                    kind);
}

}  // namespace

void StrategySpec::validate() const {
  const double eta = step_parameter(kind);
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw Error(ErrorKind::InvalidConfig, "strategy step parameter must be finite and positive");
  }
  barrier_cfg.validate();
}

double effective_step(const StrategySpec& spec, const Belief& p) {
  return std::visit(
      overloaded{[](const FixedStep& s) { return s.eta; },
                 [&](const BoundClipped& s) { return std::min(s.eta_base, ce_step_bound(p)); },
                 [&](const AdsAware& s) {
                   return std::min(s.eta_base, ce_step_bound(p)) * backoff(normalized_entropy(p), spec.barrier_cfg);
                 }},
      spec.kind);
}

std::string kind_name(const StepKind& kind) {
  return std::visit(overloaded{[](const FixedStep&) { return std::string("fixed"); },
                               [](const BoundClipped&) { return std::string("bound_clipped"); },
                               [](const AdsAware&) { return std::string("ads_aware"); }},
                    kind);
}

}  // namespace simplexstep
