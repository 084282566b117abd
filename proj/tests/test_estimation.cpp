#include <cmath>
#include <vector>

#include "checks.hpp"
#include "doctest.h"
#include "entropics/divergence.hpp"
#include "entropics/entropy.hpp"
#include "entropics/errors.hpp"
#include "entropics/estimation.hpp"
#include "entropics/family.hpp"
#include "entropics/fisher.hpp"
#include "entropics/measure.hpp"
#include "generators.hpp"

using namespace entropics;

TEST_CASE("the information bound gap is zero for the efficient estimator") {
  const auto fam = bernoulli_family(0.1, 0.9);
  // The indicator of outcome 1 is unbiased with variance theta(1-theta) = 1/I.
  const RandomVar est(fam.space(), {0.0, 1.0});
  for (double t : {0.2, 0.5, 0.8}) CHECK_NEAR(cramer_rao_gap(fam, est, t), 0.0, 1e-9);
  // A deliberately rescaled estimator is strictly inefficient.
  const RandomVar bad(fam.space(), {0.1, 0.8});
  CHECK(cramer_rao_gap(fam, bad, 0.5) > 1e-3);
  testgen::Rng rng(81);
  for (int i = 0; i < 100; ++i) {
    std::vector<double> v{testgen::real_in(rng, -1.0, 1.0), testgen::real_in(rng, -1.0, 1.0)};
    const RandomVar any(fam.space(), std::move(v));
    CHECK(cramer_rao_gap(fam, any, testgen::real_in(rng, 0.15, 0.85)) >= -1e-9);
  }
}

TEST_CASE("the product-space gap matches the single-shot case and scales") {
  const auto fam = bernoulli_family(0.1, 0.9);
  const auto mean_est = [](const std::vector<int>& w) {
    double s = 0.0;
    for (int k : w) s += static_cast<double>(k);
    return s / static_cast<double>(w.size());
  };
  // The empirical mean stays efficient at every small N.
  for (std::int64_t n : {1, 2, 4}) {
    for (double t : {0.3, 0.6}) {
      CHECK_NEAR(cramer_rao_gap_product(fam, mean_est, t, n), 0.0, 1e-8);
    }
  }
  CHECK_THROWS_AS((void)cramer_rao_gap_product(fam, mean_est, 0.5, 60), EnumerationCapExceeded);
}

TEST_CASE("maximum likelihood on a bernoulli sample finds the sample mean") {
  const auto fam = bernoulli_family(0.1, 0.9);
  // Six ones in eight draws: the empirical mean 0.75 lies inside the window.
  const std::vector<std::size_t> sample{1, 0, 1, 1, 0, 1, 1, 1};
  const auto r = mle(fam, sample, 512, 1e-6);
  CHECK_NEAR(r.estimate, 0.75, 1e-6);
  CHECK_FALSE(r.boundary_hit);
  // The reported log-likelihood is the one at the estimate.
  double ll = 0.0;
  for (const auto k : sample) ll += std::log(fam.at(r.estimate).weight(k));
  CHECK_NEAR(r.loglik, ll, 1e-10);
  // Default tolerance refines well past 1e-8.
  const auto tight = mle(fam, sample);
  CHECK_NEAR(tight.estimate, 0.75, 1e-8);
}

TEST_CASE("maximum likelihood clamps to the window boundary when pushed") {
  const auto fam = bernoulli_family(0.2, 0.8);
  const std::vector<std::size_t> ones(10, 1);
  const auto r = mle(fam, ones);
  CHECK(r.boundary_hit);
  CHECK_NEAR(r.estimate, 0.8, 1e-9);
  const std::vector<std::size_t> zeros(10, 0);
  const auto r2 = mle(fam, zeros);
  CHECK(r2.boundary_hit);
  CHECK_NEAR(r2.estimate, 0.2, 1e-9);
  CHECK_THROWS_AS((void)mle(fam, {}), EmptySample);
  CHECK_THROWS_AS((void)mle(fam, {0, 5}), InvalidInput);
}

TEST_CASE("maximum likelihood works on a tilt family through its cgf geometry") {
  const auto s = OutcomeSpace::make({"-1", "+1"});
  const auto fam = exponential_tilt_family(ProbMeasure(s, {0.5, 0.5}),
                                           RandomVar(s, {-1.0, 1.0}), -2.0, 2.0);
  // Twelve draws with mean 1/3: the tilt estimate solves tanh(theta) = 1/3.
  std::vector<std::size_t> sample;
  for (int i = 0; i < 8; ++i) sample.push_back(1);
  for (int i = 0; i < 4; ++i) sample.push_back(0);
  const auto r = mle(fam, sample);
  CHECK_NEAR(r.estimate, std::atanh(1.0 / 3.0), 1e-7);
}

TEST_CASE("exact clamped-mean risk matches the frozen binomial sums") {
  CHECK_NEAR(4096.0 * bernoulli_risk_exact(1.0 / 3.0, 2.0 / 3.0, 0.5, 4096),
             0.25000000000061828, 1e-10);
  CHECK_NEAR(4096.0 * bernoulli_risk_exact(0.5, 2.0 / 3.0, 0.5, 4096),
             0.12500000000031397, 1e-10);
  CHECK_NEAR(bernoulli_risk_exact(1.0 / 3.0, 2.0 / 3.0, 0.5, 1), 1.0 / 36.0, 1e-15);
}

TEST_CASE("the cross-entropy surface splits into entropy plus divergence") {
  const auto fam = bernoulli_family(0.1, 0.9);
  testgen::Rng rng(82);
  for (int i = 0; i < 200; ++i) {
    const double t = testgen::real_in(rng, 0.15, 0.85);
    const double u = testgen::real_in(rng, 0.15, 0.85);
    const double cross = cross_entropy_surface(fam, t, u);
    CHECK_NEAR(cross, shannon_entropy(fam.at(t)) + kl_divergence(fam.at(t), fam.at(u)),
               1e-12);
    // The diagonal minimizes the surface in its second argument.
    CHECK(cross >= cross_entropy_surface(fam, t, t) - 1e-12);
  }
}

TEST_CASE("the efficiency experiment is seeded and approaches the information bound") {
  const auto fam = bernoulli_family(0.1, 0.9);
  const auto rows = efficiency_experiment(fam, {0.5}, {64, 256}, 400, 11);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].theta == 0.5);
  CHECK(rows[0].n == 64);
  CHECK(rows[1].n == 256);
  for (const auto& row : rows) {
    CHECK_NEAR(row.inv_fisher, 0.25, 1e-12);
    CHECK(row.std_error > 0.0);
    CHECK(row.mean_abs_error > 0.0);
    // Within five standard errors of the asymptotic risk.
    CHECK(std::abs(row.n_risk - row.inv_fisher) < 5.0 * row.std_error + 0.05);
  }
  CHECK(rows[1].mean_abs_error < rows[0].mean_abs_error);
  const auto again = efficiency_experiment(fam, {0.5}, {64, 256}, 400, 11);
  CHECK(again[0].n_risk == rows[0].n_risk);
  CHECK(again[1].n_risk == rows[1].n_risk);
}
