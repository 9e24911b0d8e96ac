#include "simplexstep/admissibility.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "simplexstep/energy.hpp"
#include "simplexstep/error.hpp"

using namespace simplexstep;

namespace {

// alpha at the default clamp: -log(1 - (1 - 1e-9)) with 1 - 1e-9 rounded to double.
const double kAlphaAtOne = 20.7232658652283430;
const double kBackoffAtOne = 0.0460335939450367975;

}  // namespace

TEST(NormalizedEntropy, KnownValues) {
  for (std::size_t n = 2; n <= 10; ++n) EXPECT_NEAR(normalized_entropy(Belief::uniform(n)), 1.0, 1e-15);
  EXPECT_EQ(normalized_entropy(make_belief({0.5, 0.5})), 1.0);
  // 0.468995593589281221 = H(0.9, 0.1) / log 2 at 30 digits.
  EXPECT_NEAR(normalized_entropy(make_belief({0.9, 0.1})), 0.468995593589281221, 1e-15);
}

TEST(NormalizedEntropy, InUnitInterval) {
  std::mt19937_64 rng(41);
  for (int s = 0; s < 5000; ++s) {
    const double b = normalized_entropy(make_belief(oracle::random_simplex(rng, 2 + s % 9, 0.0)));
    ASSERT_GT(b, 0.0);
    ASSERT_LE(b, 1.0);
  }
}

TEST(Barrier, KnownValues) {
  EXPECT_EQ(barrier(0.0), 0.0);
  EXPECT_NEAR(barrier(0.5), std::log(2.0), 1e-15);
  EXPECT_NEAR(barrier(1.0), kAlphaAtOne, 1e-13);
}

TEST(Barrier, RejectsOutOfRange) {
  for (double b : {-1e-12, 1.0 + 1e-12, double(NAN)}) {
    try {
      barrier(b);
      FAIL() << b;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
    }
  }
}

TEST(Barrier, RejectsBadConfig) {
  EXPECT_THROW(barrier(0.5, BarrierConfig{1.0, 0.0}), Error);
  EXPECT_THROW(barrier(0.5, BarrierConfig{0.0, 0.0}), Error);
  EXPECT_THROW(barrier(0.5, BarrierConfig{0.5, -1.0}), Error);
}

TEST(Backoff, KnownValues) {
  EXPECT_EQ(backoff(0.0), 1.0);
  // 1 / (1 + log 2) = 0.590616109149641250.
  EXPECT_NEAR(backoff(0.5), 0.590616109149641250, 1e-15);
  EXPECT_NEAR(backoff(1.0), kBackoffAtOne, 1e-9);
  EXPECT_NEAR(backoff(1.0), 0.04604, 1e-5);
}

TEST(Backoff, MonotoneOnGrid) {
  const BarrierConfig cfg;
  double prev_alpha = -1.0;
  double prev_backoff = 2.0;
  for (int i = 0; i < 1000; ++i) {
    const double b = cfg.b_max * i / 999.0;
    const double a = barrier(b, cfg);
    const double s = backoff(b, cfg);
    ASSERT_GE(a, 0.0);
    ASSERT_GT(a, prev_alpha);
    ASSERT_LT(s, prev_backoff);
    ASSERT_GT(s, 0.0);
    ASSERT_LE(s, 1.0);
    prev_alpha = a;
    prev_backoff = s;
  }
}

TEST(CeStepBound, KnownValues) {
  EXPECT_NEAR(ce_step_bound(Belief::uniform(3)), 2.0 / 3.0, 1e-15);
  EXPECT_EQ(ce_step_bound(make_belief({0.5, 0.5})), 1.0);
  EXPECT_NEAR(ce_step_bound(make_belief({0.9, 0.05, 0.05})), 0.00555555555555555556, 1e-16);
}

TEST(CeStepBound, AgreesWithCurvatureRoute) {
  std::mt19937_64 rng(42);
  for (int s = 0; s < 10000; ++s) {
    const Belief p = make_belief(oracle::random_simplex(rng, 2 + s % 9, 0.0));
    const auto [mu, ell] = curvature_constants(p);
    const double via_curvature = 2 * mu / (ell * ell);
    ASSERT_NEAR(ce_step_bound(p), via_curvature, 1e-12);
    ASSERT_NEAR(ce_step_bound(p), via_curvature, 1e-12 * via_curvature);
    ASSERT_GT(ce_step_bound(p), 0.0);
  }
}

TEST(CeStepBound, IncreasingTowardCenterOfBinarySlice) {
  double prev = 0.0;
  for (int i = 1; i <= 500; ++i) {
    const double x = i / 1000.0;
    const double bound = ce_step_bound(make_belief({x, 1 - x}));
    ASSERT_GT(bound, prev);
    prev = bound;
  }
}

TEST(CeStep, KnownValues) {
  // 2/3 * backoff(1) = 0.0306890626300245317.
  EXPECT_NEAR(ce_step(Belief::uniform(3)), 0.0306890626300245317, 1e-15);
  EXPECT_NEAR(ce_step(make_belief({0.5, 0.5})), kBackoffAtOne, 1e-9);
  const Belief sharp = make_belief({1.0 - 2e-9, 1e-9, 1e-9});
  EXPECT_NEAR(ce_step(sharp) / ce_step_bound(sharp), 1.0, 1e-6);
}

TEST(CeStep, NeverAboveBound) {
  std::mt19937_64 rng(43);
  for (int s = 0; s < 5000; ++s) {
    const Belief p = make_belief(oracle::random_simplex(rng, 2 + s % 9, 0.0));
    ASSERT_LE(ce_step(p), ce_step_bound(p));
    ASSERT_LE(ce_step(p, BarrierConfig{0.5, 10.0}), ce_step_bound(p));
  }
}

TEST(CeStep, FloorApplies) {
  const Belief p = make_belief({0.4, 0.6});
  const double unfloored = ce_step(p);
  EXPECT_EQ(ce_step(p, BarrierConfig{1 - 1e-9, unfloored * 1.5}), unfloored * 1.5);
}

TEST(MseStep, KnownValues) {
  EXPECT_EQ(mse_step(0.0), 1.0);
  EXPECT_NEAR(mse_step(0.5), 0.590616109149641250, 1e-15);
  EXPECT_NEAR(mse_step(1.0 - std::exp(-1.0)), 0.5, 1e-15);
  EXPECT_EQ(mse_step(make_belief({0.9, 0.1})), backoff(normalized_entropy(make_belief({0.9, 0.1}))));
}

TEST(MseCompensate, Endpoints) {
  const Belief p = make_belief({0.6, 0.4});
  const Target y = make_belief({0.5, 0.5});
  EXPECT_EQ(mse_compensate(p, y, 0.0), p);
  EXPECT_EQ(mse_compensate(p, y, 1.0), y);
  const Belief mid = mse_compensate(p, y, 0.5);
  EXPECT_NEAR(mid[0], 0.55, 1e-16);
  EXPECT_NEAR(mid[1], 0.45, 1e-16);
  EXPECT_NEAR(mse_energy(mid, y), 0.005, 1e-16);
}

TEST(MseCompensate, QuadraticResidual) {
  std::mt19937_64 rng(44);
  for (int s = 0; s < 1000; ++s) {
    const std::size_t n = 2 + s % 7;
    const Belief p = make_belief(oracle::random_simplex(rng, n, 0.0));
    const Target y = make_belief(oracle::random_simplex(rng, n, 0.0));
    for (int k = 0; k <= 20; ++k) {
      const double eta = k / 20.0;
      ASSERT_NEAR(mse_energy(mse_compensate(p, y, eta), y), (1 - eta) * (1 - eta) * mse_energy(p, y), 1e-12);
    }
  }
}

TEST(MseCompensate, RejectsOutOfRangeStep) {
  const Belief p = Belief::uniform(2);
  EXPECT_THROW(mse_compensate(p, p, -0.1), Error);
  EXPECT_THROW(mse_compensate(p, p, 1.1), Error);
  EXPECT_THROW(mse_compensate(p, Belief::uniform(3), 0.5), Error);
}

TEST(MseResidual, KnownValues) {
  const Belief p = make_belief({0.6, 0.4});
  const Target y = make_belief({0.5, 0.5});
  EXPECT_EQ(mse_residual_after_ads(0.0, p, y), 0.0);
  EXPECT_NEAR(mse_residual_after_ads(1.0 - std::exp(-1.0), p, y), 0.25 * 0.02, 1e-16);
  // (log 2 / (1 + log 2))^2 * 0.02 = 0.00335190340175556894.
  EXPECT_NEAR(mse_residual_after_ads(0.5, p, y), 0.00335190340175556894, 1e-16);
}

TEST(MseResidual, MatchesComposedPath) {
  std::mt19937_64 rng(45);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int s = 0; s < 2000; ++s) {
    const std::size_t n = 2 + s % 7;
    const Belief p = make_belief(oracle::random_simplex(rng, n, 0.0));
    const Target y = make_belief(oracle::random_simplex(rng, n, 0.0));
    const double b = unit(rng);
    ASSERT_NEAR(mse_residual_after_ads(b, p, y), mse_energy(mse_compensate(p, y, mse_step(b)), y), 1e-12);
  }
}

TEST(IsAdmissible, KnownValues) {
  const Belief u = Belief::uniform(3);
  const auto zero = is_admissible(0.0, u);
  EXPECT_FALSE(zero.admissible);
  EXPECT_EQ(zero.gap, 0.0);

  const auto third = is_admissible(1.0 / 3.0, u);
  EXPECT_TRUE(third.admissible);
  EXPECT_NEAR(third.gap, 1.0, 1e-14);

  const auto edge = is_admissible(ce_step_bound(u), u);
  EXPECT_FALSE(edge.admissible);
  EXPECT_EQ(edge.gap, 0.0);
  EXPECT_NEAR(is_admissible(2.0 / 3.0, u).gap, 0.0, 1e-14);
}

TEST(IsAdmissible, FlagMatchesGapSign) {
  std::mt19937_64 rng(46);
  for (int s = 0; s < 200; ++s) {
    const Belief p = make_belief(oracle::random_simplex(rng, 2 + s % 9, 0.0));
    const double bound = ce_step_bound(p);
    for (int k = 1; k <= 200; ++k) {
      const double eta = bound * k / 100.0;
      const auto a = is_admissible(eta, p);
      ASSERT_EQ(a.admissible, a.gap > 0.0) << "eta=" << eta;
      ASSERT_EQ(a.admissible, eta < bound);
    }
  }
}
