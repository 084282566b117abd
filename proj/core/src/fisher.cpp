#include "entropics/fisher.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "entropics/divergence.hpp"
#include "entropics/errors.hpp"
#include "entropics/numeric.hpp"

namespace entropics {

double fisher_info(const ParametricFamily& fam, double theta) {
  ProbMeasure p = fam.at(theta);
  std::vector<double> dp = fam.weight_d1(theta);
  double info = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) info += dp[k] * dp[k] / p.weight(k);
  return info;
}

double fisher_info_score_variance(const ParametricFamily& fam, double theta) {
  ProbMeasure p = fam.at(theta);
  std::vector<double> dp = fam.weight_d1(theta);
  double mean = 0.0, second = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    double score = dp[k] / p.weight(k);
    mean += p.weight(k) * score;
    second += p.weight(k) * score * score;
  }
  return second - mean * mean;
}

double fisher_info_curvature(const ParametricFamily& fam, double theta) {
  ProbMeasure p = fam.at(theta);
  std::vector<double> dp = fam.weight_d1(theta);
  std::vector<double> ddp = fam.weight_d2(theta);
  // E(d2/dtheta2 of -log p) = sum dp^2/p - sum ddp
  double info = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k)
    info += dp[k] * dp[k] / p.weight(k) - ddp[k];
  return info;
}

double fisher_quadratic_form(const ProbMeasure& p, const std::vector<double>& tangent) {
  if (tangent.size() != p.size())
    throw InvalidInput("tangent length does not match the space");
  if (!p.faithful()) throw FaithfulnessError("the metric is defined at faithful points");
  double scale = 0.0, sum = 0.0;
  for (double t : tangent) {
    scale += std::abs(t);
    sum += t;
  }
  if (std::abs(sum) > 1e-9 * std::max(1.0, scale))
    throw InvalidInput("tangent vectors must sum to zero");
  double g = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k)
    g += tangent[k] * tangent[k] / p.weight(k);
  return g;
}

double local_kl_limit(const ParametricFamily& fam, double theta, LocalDivergence mode,
                      const std::vector<double>& eps_grid) {
  std::vector<double> grid = eps_grid;
  if (grid.empty()) {
    double e = 1e-2;
    for (int i = 0; i < 7; ++i) {
      grid.push_back(e);
      e *= 0.5;
    }
  }
  double top = *std::max_element(grid.begin(), grid.end());
  double sign;
  if (theta + top <= fam.b())
    sign = 1.0;
  else if (theta - top >= fam.a())
    sign = -1.0;
  else
    throw InvalidInput("theta too close to both interval ends for the eps grid");
  ProbMeasure base = fam.at(theta);
  std::vector<double> samples;
  samples.reserve(grid.size());
  for (double eps : grid) {
    ProbMeasure moved = fam.at(theta + sign * eps);
    double div;
    switch (mode) {
      case LocalDivergence::forward:
        div = kl_divergence(moved, base);
        break;
      case LocalDivergence::reverse:
        div = kl_divergence(base, moved);
        break;
      default:
        div = js_entropy(moved, base);
        break;
    }
    samples.push_back(div / (eps * eps));
  }
  return num::richardson(samples);
}

double path_energy(const ParametricFamily& fam, double rel_tol) {
  return num::simpson_doubling([&](double t) { return fisher_info(fam, t); }, fam.a(),
                               fam.b(), rel_tol);
}

double path_length(const ParametricFamily& fam, double rel_tol) {
  return num::simpson_doubling(
      [&](double t) { return std::sqrt(std::max(0.0, fisher_info(fam, t))); }, fam.a(),
      fam.b(), rel_tol);
}

double geodesic_distance(const ProbMeasure& p, const ProbMeasure& q) {
  require_same_space(p.space(), q.space());
  if (!p.faithful() || !q.faithful())
    throw FaithfulnessError("geodesic distance is defined between faithful measures");
  double affinity = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k)
    affinity += std::sqrt(p.weight(k) * q.weight(k));
  affinity = std::clamp(affinity, -1.0, 1.0);
  return std::acos(affinity);
}

double chentsov_monotonicity_check(const ProbMeasure& p,
                                   const std::vector<double>& tangent,
                                   const StochasticMap& phi) {
  require_same_space(p.space(), phi.from());
  double before = fisher_quadratic_form(p, tangent);
  ProbMeasure image = phi.apply(p);
  if (!image.faithful())
    throw FaithfulnessError("the image measure must stay faithful");
  std::vector<double> mapped = phi.apply_tangent(tangent);
  double after = fisher_quadratic_form(image, mapped);
  return after - before;
}

StochasticMap block_splitting_map(const SpacePtr& space, const std::vector<int>& parts) {
  if (!space) throw InvalidInput("block splitting needs a space");
  if (parts.size() != space->size())
    throw InvalidInput("one part count per outcome required");
  std::size_t total = 0;
  for (int l : parts) {
    if (l < 1) throw InvalidInput("part counts must be positive");
    total += static_cast<std::size_t>(l);
  }
  std::vector<std::string> labels;
  labels.reserve(total);
  for (std::size_t k = 0; k < space->size(); ++k)
    for (int j = 0; j < parts[k]; ++j)
      labels.push_back(space->label(k) + ":" + std::to_string(j));
  SpacePtr target = OutcomeSpace::make(std::move(labels));
  std::vector<std::vector<double>> rows(space->size(),
                                        std::vector<double>(total, 0.0));
  std::size_t offset = 0;
  for (std::size_t k = 0; k < space->size(); ++k) {
    double share = 1.0 / static_cast<double>(parts[k]);
    for (int j = 0; j < parts[k]; ++j) rows[k][offset + static_cast<std::size_t>(j)] = share;
    offset += static_cast<std::size_t>(parts[k]);
  }
  return StochasticMap(space, target, std::move(rows));
}

}  // namespace entropics
