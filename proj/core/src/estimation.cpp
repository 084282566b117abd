#include "entropics/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "entropics/errors.hpp"
#include "entropics/fisher.hpp"
#include "entropics/numeric.hpp"

namespace entropics {

namespace {

// d/dtheta of a smooth scalar function on the family interval, five-node
// stencil shifted to stay inside [a,b].
double fd_scalar_d1(const ParametricFamily& fam,
                    const std::function<double(double)>& f, double theta) {
  const double h = fam.fd_step();
  double lo = theta - 2.0 * h;
  if (lo < fam.a()) lo = fam.a();
  if (lo + 4.0 * h > fam.b()) lo = fam.b() - 4.0 * h;
  if (lo < fam.a()) throw InvalidInput("family interval too short for finite differences");
  std::vector<double> nodes(5);
  for (int j = 0; j < 5; ++j) nodes[static_cast<std::size_t>(j)] = lo + j * h;
  std::vector<double> w = num::fornberg_weights(nodes, theta, 1);
  double d = 0.0;
  for (int j = 0; j < 5; ++j)
    d += w[static_cast<std::size_t>(j)] * f(nodes[static_cast<std::size_t>(j)]);
  return d;
}

}  // namespace

double cramer_rao_gap(const ParametricFamily& fam, const RandomVar& estimator,
                      double theta) {
  require_same_space(fam.space(), estimator.space());
  ProbMeasure p = fam.at(theta);
  double risk = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    double d = estimator.value(k) - theta;
    risk += p.weight(k) * d * d;
  }
  double info = fisher_info(fam, theta);
  double mean_dot;
  if (fam.has_analytic_derivatives()) {
    std::vector<double> dp = fam.weight_d1(theta);
    mean_dot = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) mean_dot += dp[k] * estimator.value(k);
  } else {
    mean_dot = fd_scalar_d1(
        fam, [&](double t) { return estimator.expectation(fam.at(t)); }, theta);
  }
  return risk - mean_dot * mean_dot / info;
}

double cramer_rao_gap_product(
    const ParametricFamily& fam,
    const std::function<double(const std::vector<int>&)>& estimator, double theta,
    std::int64_t n, double cap) {
  ProductIndex words(fam.space(), n);
  if (!(words.count() <= cap))
    throw EnumerationCapExceeded("word enumeration exceeds cap");
  auto risk_and_mean = [&](double t, double center) {
    ProbMeasure p = fam.at(t);
    std::vector<double> logp(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) logp[k] = std::log(p.weight(k));
    double risk = 0.0, mean = 0.0;
    for (std::uint64_t i = 0; i < words.exact_count(); ++i) {
      std::vector<int> word = words.decode(i);
      double lw = 0.0;
      for (int k : word) lw += logp[static_cast<std::size_t>(k)];
      double w = std::exp(lw);
      double est = estimator(word);
      mean += w * est;
      risk += w * (est - center) * (est - center);
    }
    return std::pair<double, double>{risk, mean};
  };
  auto [risk, mean] = risk_and_mean(theta, theta);
  (void)mean;
  double mean_dot = fd_scalar_d1(
      fam, [&](double t) { return risk_and_mean(t, theta).second; }, theta);
  double info_n = static_cast<double>(n) * fisher_info(fam, theta);
  return risk - mean_dot * mean_dot / info_n;
}

MleResult mle(const ParametricFamily& fam, const std::vector<std::size_t>& sample,
              int grid_points, double refine_tol) {
  if (sample.empty()) throw EmptySample("the estimator needs at least one observation");
  if (grid_points < 3) throw InvalidInput("need at least three grid points");
  const double a = fam.a(), b = fam.b();
  if (refine_tol <= 0.0) refine_tol = 1e-10 * (b - a);
  std::vector<double> counts(fam.space()->size(), 0.0);
  for (std::size_t idx : sample) {
    if (idx >= counts.size()) throw InvalidInput("sample index out of range");
    counts[idx] += 1.0;
  }
  auto neg_loglik = [&](double theta) {
    ProbMeasure p = fam.at(theta);
    double s = 0.0;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] == 0.0) continue;
      s -= counts[k] * std::log(p.weight(k));
    }
    return s;
  };
  const int g = grid_points;
  std::vector<double> vals(static_cast<std::size_t>(g));
  auto grid_theta = [&](int i) {
    return a + (b - a) * static_cast<double>(i) / static_cast<double>(g - 1);
  };
  double best_val = std::numeric_limits<double>::infinity();
  for (int i = 0; i < g; ++i) {
    vals[static_cast<std::size_t>(i)] = neg_loglik(grid_theta(i));
    best_val = std::min(best_val, vals[static_cast<std::size_t>(i)]);
  }
  // Prefer interior grid minima over boundary ones at equal value.
  double tie_tol = 1e-12 * std::max(1.0, std::abs(best_val));
  int pick = -1;
  for (int i = 1; i + 1 < g; ++i) {
    if (vals[static_cast<std::size_t>(i)] <= best_val + tie_tol) {
      pick = i;
      break;
    }
  }
  if (pick < 0)
    pick = vals[0] <= best_val + tie_tol ? 0 : g - 1;
  double lo = grid_theta(std::max(0, pick - 1));
  double hi = grid_theta(std::min(g - 1, pick + 1));
  double estimate = num::golden_min(neg_loglik, lo, hi, refine_tol);
  bool boundary = false;
  double snap = std::max(refine_tol, 1e-9 * (b - a));
  if (estimate - a <= snap && pick == 0) {
    estimate = a;
    boundary = true;
  } else if (b - estimate <= snap && pick == g - 1) {
    estimate = b;
    boundary = true;
  }
  MleResult res;
  res.estimate = estimate;
  res.boundary_hit = boundary;
  res.loglik = -neg_loglik(estimate);
  return res;
}

double bernoulli_risk_exact(double a, double b, double theta, std::int64_t n) {
  if (!(0.0 < a && a < b && b < 1.0))
    throw InvalidInput("bernoulli interval must sit inside (0,1)");
  if (!(theta > 0.0 && theta < 1.0)) throw InvalidInput("theta must lie in (0,1)");
  if (n < 1) throw InvalidInput("sample size must be positive");
  const double lt = std::log(theta), lc = std::log1p(-theta);
  double risk = 0.0;
  for (std::int64_t k = 0; k <= n; ++k) {
    double est = std::clamp(static_cast<double>(k) / static_cast<double>(n), a, b);
    double lp = num::log_binomial(n, k) + static_cast<double>(k) * lt +
                static_cast<double>(n - k) * lc;
    risk += std::exp(lp) * (est - theta) * (est - theta);
  }
  return risk;
}

double cross_entropy_surface(const ParametricFamily& fam, double theta,
                             double theta_prime) {
  ProbMeasure p = fam.at(theta);
  ProbMeasure pp = fam.at(theta_prime);
  double s = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p.weight(k) <= 0.0) continue;
    s -= p.weight(k) * std::log(pp.weight(k));
  }
  return s;
}

std::vector<EfficiencyRow> efficiency_experiment(const ParametricFamily& fam,
                                                 const std::vector<double>& thetas,
                                                 const std::vector<std::int64_t>& ns,
                                                 std::int64_t reps, std::uint64_t seed) {
  if (reps < 2) throw InvalidInput("need at least two replicas");
  const double margin = 0.05 * (fam.b() - fam.a());
  for (double theta : thetas)
    if (!(theta >= fam.a() + margin && theta <= fam.b() - margin))
      throw InvalidInput("efficiency is reported away from the interval ends only");
  std::vector<EfficiencyRow> rows;
  std::uint64_t stream_base = 0;
  for (double theta : thetas) {
    ProbMeasure p = fam.at(theta);
    std::vector<double> cdf(p.size(), 0.0);
    double run = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      run += p.weight(i);
      cdf[i] = run;
    }
    cdf.back() = 1.0;
    double inv_fisher = 1.0 / fisher_info(fam, theta);
    for (std::int64_t n : ns) {
      std::vector<double> sq(static_cast<std::size_t>(reps));
      std::vector<double> ab(static_cast<std::size_t>(reps));
      const std::uint64_t base = stream_base;
      num::parallel_for(static_cast<std::size_t>(reps),
                        [&](std::size_t lo, std::size_t hi) {
        std::vector<std::size_t> sample(static_cast<std::size_t>(n));
        for (std::size_t r = lo; r < hi; ++r) {
          num::Rng rng = num::Rng::substream(seed, base + r);
          for (std::size_t j = 0; j < sample.size(); ++j) {
            double u = rng.uniform();
            std::size_t idx = static_cast<std::size_t>(
                std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
            sample[j] = std::min(idx, p.size() - 1);
          }
          double est = mle(fam, sample).estimate;
          sq[r] = (est - theta) * (est - theta);
          ab[r] = std::abs(est - theta);
        }
      });
      stream_base += static_cast<std::uint64_t>(reps);
      double mean_sq = 0.0, mean_ab = 0.0;
      for (std::int64_t r = 0; r < reps; ++r) {
        mean_sq += sq[static_cast<std::size_t>(r)];
        mean_ab += ab[static_cast<std::size_t>(r)];
      }
      mean_sq /= static_cast<double>(reps);
      mean_ab /= static_cast<double>(reps);
      double var = 0.0;
      for (std::int64_t r = 0; r < reps; ++r) {
        double d = sq[static_cast<std::size_t>(r)] - mean_sq;
        var += d * d;
      }
      var /= static_cast<double>(reps - 1);
      EfficiencyRow row;
      row.theta = theta;
      row.n = n;
      row.n_risk = static_cast<double>(n) * mean_sq;
      row.std_error =
          static_cast<double>(n) * std::sqrt(var / static_cast<double>(reps));
      row.mean_abs_error = mean_ab;
      row.inv_fisher = inv_fisher;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace entropics
