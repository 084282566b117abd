#pragma once

#include <cstdint>
#include <vector>

#include "entropics/measure.hpp"

namespace entropics {

// Cumulant generating function of a real variable X under P, restricted to
// the support of P: C(alpha) = log E[e^{alpha X}].
class CgfModel {
 public:
  CgfModel(ProbMeasure p, RandomVar x);

  double cgf(double alpha) const;
  double cgf_d1(double alpha) const;   // tilted mean
  double cgf_d2(double alpha) const;   // tilted variance
  ProbMeasure tilted_measure(double alpha) const;

  double min_value() const { return m_; }
  double max_value() const { return big_m_; }
  double mean() const { return mean_; }
  bool degenerate() const { return m_ == big_m_; }

  // log P{X = min} and log P{X = max}; level sets by exact comparison.
  double log_mass_min() const { return log_mass_min_; }
  double log_mass_max() const { return log_mass_max_; }

  const ProbMeasure& p() const { return p_; }
  const RandomVar& x() const { return x_; }

  // Support view: outcome indices with their values and log-weights.
  const std::vector<std::size_t>& support() const { return supp_; }
  const std::vector<double>& support_values() const { return xs_; }
  const std::vector<double>& support_log_weights() const { return logp_; }

 private:
  ProbMeasure p_;
  RandomVar x_;
  std::vector<std::size_t> supp_;
  std::vector<double> xs_;
  std::vector<double> logp_;
  double m_ = 0.0;
  double big_m_ = 0.0;
  double mean_ = 0.0;
  double log_mass_min_ = 0.0;
  double log_mass_max_ = 0.0;
};

// Solves C'(alpha) = theta for theta strictly inside (min, max); throws
// DegenerateVariable when X is constant on the support and
// ThetaOutOfOpenRange otherwise outside the open interval.
double solve_alpha_of_theta(const CgfModel& model, double theta);

// Legendre transform I(theta) = sup_alpha (alpha theta - C(alpha)).
class RateFunction {
 public:
  explicit RateFunction(CgfModel model);

  // +inf outside [min, max]; -log P{X = min/max} at the endpoints (inputs
  // within 1e-12 of the span snap to them); 0 exactly at the mean.
  double rate(double theta) const;

  // alpha attaining the supremum for theta strictly inside (min, max).
  double alpha_of(double theta) const { return solve_alpha_of_theta(model_, theta); }

  // |C(alpha) - sup_theta (alpha theta - I(theta))| with the inner sup taken
  // at the stationary point theta = C'(alpha).
  double inverse_legendre_gap(double alpha) const;

  const CgfModel& model() const { return model_; }

 private:
  CgfModel model_;
};

// Moment/cumulant conversions about zero, orders 1..K (K <= 20, else
// OrderTooLarge). Index k-1 holds order k.
std::vector<double> cumulants_to_moments(const std::vector<double>& cumulants);
std::vector<double> moments_to_cumulants(const std::vector<double>& moments);

// log P{ a <= S_N / N <= b } for S_N the iid N-fold sum of X under P,
// summed exactly over types of the support alphabet (closed comparisons on
// the type mean); throws EnumerationCapExceeded past cap compositions.
double cramer_exact_log(const CgfModel& model, std::int64_t n, double a, double b,
                        double cap = 1e7);
double cramer_exact(const CgfModel& model, std::int64_t n, double a, double b,
                    double cap = 1e7);

// Monte Carlo estimate of P{ a <= S_N / N <= b } over reps seeded replicas;
// replica r draws from substream (seed, r) so results are reproducible and
// independent of scheduling.
double cramer_mc(const CgfModel& model, std::int64_t n, double a, double b,
                 std::int64_t reps, std::uint64_t seed);

}  // namespace entropics
