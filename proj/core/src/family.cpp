#include "entropics/family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "entropics/errors.hpp"
#include "entropics/numeric.hpp"

namespace entropics {

ParametricFamily::ParametricFamily(std::string kind, SpacePtr space, double a, double b,
                                   Eval eval, Deriv d1, Deriv d2)
    : kind_(std::move(kind)),
      space_(std::move(space)),
      a_(a),
      b_(b),
      eval_(std::move(eval)),
      d1_(std::move(d1)),
      d2_(std::move(d2)) {
  if (!space_) throw InvalidInput("family needs a space");
  if (!(a_ < b_)) throw InvalidInput("family interval needs a < b");
  if (!eval_) throw InvalidInput("family needs an evaluation map");
}

double ParametricFamily::fd_step() const {
  return std::max(1e-6, 1e-5 * (b_ - a_));
}

void ParametricFamily::require_theta(double theta) const {
  if (!(theta >= a_ && theta <= b_))
    throw ThetaOutOfRange("theta outside the family interval");
}

ProbMeasure ParametricFamily::at(double theta) const {
  require_theta(theta);
  std::vector<double> w = eval_(theta);
  if (w.size() != space_->size())
    throw InvalidInput("family evaluation has the wrong length");
  ProbMeasure p(space_, std::move(w));
  if (!p.faithful())
    throw FaithfulnessError("family measures must be strictly positive");
  return p;
}

std::vector<double> ParametricFamily::fd_derivative(double theta, int order) const {
  const double h = fd_step();
  // Five nodes shifted to stay inside [a,b].
  double lo = theta - 2.0 * h;
  if (lo < a_) lo = a_;
  if (lo + 4.0 * h > b_) lo = b_ - 4.0 * h;
  if (lo < a_) throw InvalidInput("family interval too short for finite differences");
  std::vector<double> nodes(5);
  for (int j = 0; j < 5; ++j) nodes[static_cast<std::size_t>(j)] = lo + j * h;
  std::vector<double> w = num::fornberg_weights(nodes, theta, order);
  // Force exact zero weight sums so tangents sum to zero exactly.
  double s = 0.0;
  for (double v : w) s += v;
  for (double& v : w) v -= s / 5.0;
  std::vector<double> out(space_->size(), 0.0);
  for (int j = 0; j < 5; ++j) {
    std::vector<double> pj = eval_(nodes[static_cast<std::size_t>(j)]);
    for (std::size_t k = 0; k < out.size(); ++k)
      out[k] += w[static_cast<std::size_t>(j)] * pj[k];
  }
  return out;
}

std::vector<double> ParametricFamily::weight_d1(double theta) const {
  require_theta(theta);
  if (d1_) return d1_(theta);
  return fd_derivative(theta, 1);
}

std::vector<double> ParametricFamily::weight_d2(double theta) const {
  require_theta(theta);
  if (d2_) return d2_(theta);
  return fd_derivative(theta, 2);
}

bool ParametricFamily::identifiable_spot_check(int grid_points) const {
  if (grid_points < 2) throw InvalidInput("need at least two grid points");
  std::vector<ProbMeasure> ms;
  for (int i = 0; i < grid_points; ++i) {
    double theta = a_ + (b_ - a_) * static_cast<double>(i) /
                            static_cast<double>(grid_points - 1);
    ms.push_back(at(theta));
  }
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (variational_distance(ms[i], ms[j]) <= 1e-12) return false;
  return true;
}

ParametricFamily bernoulli_family(double a, double b) {
  if (!(0.0 < a && a < b && b < 1.0))
    throw InvalidInput("bernoulli interval must sit inside (0,1)");
  SpacePtr space = OutcomeSpace::make({"0", "1"});
  return ParametricFamily(
      "bernoulli", space, a, b,
      [](double theta) { return std::vector<double>{1.0 - theta, theta}; },
      [](double) { return std::vector<double>{-1.0, 1.0}; },
      [](double) { return std::vector<double>{0.0, 0.0}; });
}

ParametricFamily exponential_tilt_family(ProbMeasure base, RandomVar x, double a,
                                         double b) {
  require_same_space(base.space(), x.space());
  if (!base.faithful())
    throw FaithfulnessError("exponential tilting needs a faithful base");
  SpacePtr space = base.space();
  std::size_t l = base.size();
  std::vector<double> logw(l), xs(l);
  for (std::size_t k = 0; k < l; ++k) {
    logw[k] = std::log(base.weight(k));
    xs[k] = x.value(k);
  }
  auto weights = [logw, xs, l](double theta) {
    std::vector<double> e(l);
    double shift = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < l; ++k) {
      e[k] = logw[k] + theta * xs[k];
      shift = std::max(shift, e[k]);
    }
    double z = 0.0;
    for (std::size_t k = 0; k < l; ++k) z += std::exp(e[k] - shift);
    for (std::size_t k = 0; k < l; ++k) e[k] = std::exp(e[k] - shift) / z;
    return e;
  };
  auto d1 = [weights, xs, l](double theta) {
    std::vector<double> p = weights(theta);
    double mean = 0.0;
    for (std::size_t k = 0; k < l; ++k) mean += p[k] * xs[k];
    std::vector<double> out(l);
    for (std::size_t k = 0; k < l; ++k) out[k] = p[k] * (xs[k] - mean);
    return out;
  };
  auto d2 = [weights, xs, l](double theta) {
    std::vector<double> p = weights(theta);
    double mean = 0.0;
    for (std::size_t k = 0; k < l; ++k) mean += p[k] * xs[k];
    double var = 0.0;
    for (std::size_t k = 0; k < l; ++k) var += p[k] * (xs[k] - mean) * (xs[k] - mean);
    std::vector<double> out(l);
    for (std::size_t k = 0; k < l; ++k)
      out[k] = p[k] * ((xs[k] - mean) * (xs[k] - mean) - var);
    return out;
  };
  return ParametricFamily("exponential", space, a, b, weights, d1, d2);
}

ParametricFamily table_family(SpacePtr space, std::vector<double> thetas,
                              std::vector<std::vector<double>> measures) {
  if (!space) throw InvalidInput("table family needs a space");
  if (thetas.size() < 2 || thetas.size() != measures.size())
    throw InvalidInput("table family needs matching knots and measures, at least two");
  for (std::size_t i = 1; i < thetas.size(); ++i)
    if (!(thetas[i - 1] < thetas[i]))
      throw InvalidInput("table knots must be strictly increasing");
  for (const auto& m : measures) {
    if (m.size() != space->size())
      throw InvalidInput("table row length does not match the space");
    ProbMeasure check(space, m);  // validates normalization
    if (!check.faithful())
      throw FaithfulnessError("table rows must be strictly positive");
  }
  double a = thetas.front();
  double b = thetas.back();
  auto eval = [thetas = std::move(thetas), measures = std::move(measures)](double theta) {
    auto it = std::upper_bound(thetas.begin(), thetas.end(), theta);
    std::size_t hi = std::min<std::size_t>(
        thetas.size() - 1,
        std::max<std::size_t>(1, static_cast<std::size_t>(it - thetas.begin())));
    std::size_t lo = hi - 1;
    double t = (theta - thetas[lo]) / (thetas[hi] - thetas[lo]);
    std::vector<double> w(measures[lo].size());
    for (std::size_t k = 0; k < w.size(); ++k)
      w[k] = (1.0 - t) * measures[lo][k] + t * measures[hi][k];
    return w;
  };
  return ParametricFamily("table", std::move(space), a, b, std::move(eval));
}

}  // namespace entropics
