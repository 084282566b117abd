#pragma once

#include <functional>
#include <string>

#include "entropics/measure.hpp"

namespace entropics {

// A theta-indexed curve of faithful measures on a fixed finite space,
// with analytic weight derivatives when the family provides them and
// five-node finite differences otherwise.
class ParametricFamily {
 public:
  using Eval = std::function<std::vector<double>(double)>;
  using Deriv = std::function<std::vector<double>(double)>;

  ParametricFamily(std::string kind, SpacePtr space, double a, double b, Eval eval,
                   Deriv d1 = nullptr, Deriv d2 = nullptr);

  const std::string& kind() const { return kind_; }
  const SpacePtr& space() const { return space_; }
  double a() const { return a_; }
  double b() const { return b_; }
  bool has_analytic_derivatives() const { return static_cast<bool>(d1_); }
  double fd_step() const;

  // Throws ThetaOutOfRange outside [a,b] and FaithfulnessError when the
  // evaluated weights are not strictly positive.
  ProbMeasure at(double theta) const;

  // d/dtheta and d2/dtheta2 of the weight vector; entries sum to zero.
  std::vector<double> weight_d1(double theta) const;
  std::vector<double> weight_d2(double theta) const;

  // Pairwise distinctness of measures on a theta-grid.
  bool identifiable_spot_check(int grid_points = 17) const;

 private:
  void require_theta(double theta) const;
  std::vector<double> fd_derivative(double theta, int order) const;

  std::string kind_;
  SpacePtr space_;
  double a_;
  double b_;
  Eval eval_;
  Deriv d1_;
  Deriv d2_;
};

// (1-theta, theta) on a two-outcome space, [a,b] inside (0,1).
ParametricFamily bernoulli_family(double a, double b);

// Exponential tilting e^{theta X} of a faithful base, normalized.
ParametricFamily exponential_tilt_family(ProbMeasure base, RandomVar x, double a,
                                         double b);

// Piecewise-linear interpolation through measures at increasing knots.
ParametricFamily table_family(SpacePtr space, std::vector<double> thetas,
                              std::vector<std::vector<double>> measures);

}  // namespace entropics
