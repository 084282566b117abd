#pragma once

#include <vector>

#include "entropics/family.hpp"
#include "entropics/measure.hpp"

namespace entropics {

// Sum over outcomes of (dp/dtheta)^2 / p.
double fisher_info(const ParametricFamily& fam, double theta);

// The same quantity via the score variance and via the expected second
// derivative of the entropy function; diagnostics for the primary formula.
double fisher_info_score_variance(const ParametricFamily& fam, double theta);
double fisher_info_curvature(const ParametricFamily& fam, double theta);

// The metric at p applied to a tangent vector (entries summing to zero).
double fisher_quadratic_form(const ProbMeasure& p, const std::vector<double>& tangent);

// Richardson-extrapolated limit of divergence(theta+eps, theta)/eps^2 over a
// factor-two eps grid. forward: S(P_{theta+eps}|P_theta) -> I/2; reverse:
// the flipped order -> I/2; js: the Jensen-Shannon entropy -> I/4.
enum class LocalDivergence { forward, reverse, js };
double local_kl_limit(const ParametricFamily& fam, double theta,
                      LocalDivergence mode = LocalDivergence::forward,
                      const std::vector<double>& eps_grid = {});

// Integrals of I and sqrt(I) over [a,b] by adaptive composite Simpson.
double path_energy(const ParametricFamily& fam, double rel_tol = 1e-8);
double path_length(const ParametricFamily& fam, double rel_tol = 1e-8);

// arccos of the Bhattacharyya affinity, the sphere-geodesic distance.
double geodesic_distance(const ProbMeasure& p, const ProbMeasure& q);

// g^F_{image}(mapped tangent) - g^F_p(tangent); non-positive by
// stochastic monotonicity, zero for congruent embeddings.
double chentsov_monotonicity_check(const ProbMeasure& p,
                                   const std::vector<double>& tangent,
                                   const StochasticMap& phi);

// The congruent embedding splitting outcome k into parts equal shares.
StochasticMap block_splitting_map(const SpacePtr& space,
                                  const std::vector<int>& parts);

}  // namespace entropics
