#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "entropics/family.hpp"
#include "entropics/measure.hpp"

namespace entropics {

// Quadratic risk minus the Cramer-Rao reference [dE(est)/dtheta]^2 / I(theta)
// at a single observation; non-negative up to rounding.
double cramer_rao_gap(const ParametricFamily& fam, const RandomVar& estimator,
                      double theta);

// Product-space version: the estimator maps an N-word of outcome indices to
// a real; enumerates all L^N words, so N must stay small.
double cramer_rao_gap_product(
    const ParametricFamily& fam,
    const std::function<double(const std::vector<int>&)>& estimator, double theta,
    std::int64_t n, double cap = 1e7);

struct MleResult {
  double estimate;
  bool boundary_hit;
  double loglik;  // log-likelihood at the estimate
};

// Minimizes the empirical entropy -sum log P_theta(w_k) by a uniform grid
// followed by golden-section refinement; interior ties break toward the
// smallest theta, boundary optima are flagged.
MleResult mle(const ParametricFamily& fam, const std::vector<std::size_t>& sample,
              int grid_points = 512, double refine_tol = -1.0);

// Exact quadratic risk of the clamped empirical mean for the Bernoulli
// family on [a,b]: a binomial sum, no sampling.
double bernoulli_risk_exact(double a, double b, double theta, std::int64_t n);

// S(theta, theta') = -sum P_theta log P_theta'; equals S(P_theta) plus
// the divergence S(P_theta|P_theta').
double cross_entropy_surface(const ParametricFamily& fam, double theta,
                             double theta_prime);

// Seeded Monte Carlo of the scaled MLE risk N E[(est - theta)^2] with
// standard errors and the 1/I(theta) reference.
struct EfficiencyRow {
  double theta;
  std::int64_t n;
  double n_risk;
  double std_error;        // standard error of n_risk
  double mean_abs_error;   // E|est - theta|, consistency diagnostic
  double inv_fisher;       // 1 / I(theta)
};
std::vector<EfficiencyRow> efficiency_experiment(const ParametricFamily& fam,
                                                 const std::vector<double>& thetas,
                                                 const std::vector<std::int64_t>& ns,
                                                 std::int64_t reps, std::uint64_t seed);

}  // namespace entropics
