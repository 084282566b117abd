#include "entropics/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "entropics/cgf.hpp"
#include "entropics/divergence.hpp"
#include "entropics/errors.hpp"
#include "entropics/numeric.hpp"

namespace entropics {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

std::vector<std::size_t> sample_iid(const ProbMeasure& p, std::int64_t n,
                                    std::uint64_t seed) {
  if (n < 0) throw InvalidInput("sample size must be non-negative");
  std::vector<double> cdf(p.size(), 0.0);
  double run = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    run += p.weight(i);
    cdf[i] = run;
  }
  cdf.back() = 1.0;
  num::Rng rng = num::Rng::substream(seed, 0);
  std::vector<std::size_t> out(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < out.size(); ++j) {
    double u = rng.uniform();
    std::size_t idx = static_cast<std::size_t>(
        std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    out[j] = std::min(idx, p.size() - 1);
  }
  return out;
}

ProbMeasure empirical_measure(const SpacePtr& space,
                              const std::vector<std::size_t>& sample) {
  if (!space) throw InvalidInput("empirical measure needs a space");
  if (sample.empty()) throw EmptySample("cannot form the empirical measure of nothing");
  std::vector<double> w(space->size(), 0.0);
  for (std::size_t idx : sample) {
    if (idx >= space->size()) throw InvalidInput("sample index out of range");
    w[idx] += 1.0;
  }
  for (double& x : w) x /= static_cast<double>(sample.size());
  return ProbMeasure(space, std::move(w));
}

std::vector<TypeVector> enumerate_types(int l, std::int64_t n, double cap) {
  std::vector<TypeVector> out;
  for_each_type(l, n, cap, [&](const TypeVector& t) { out.push_back(t); });
  return out;
}

bool constraint_contains(const ConstraintSet& gamma, const ProbMeasure& delta) {
  return std::visit(
      [&](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, BallConstraint>) {
          double d = variational_distance(c.center, delta);
          return c.closed ? d <= c.radius : d < c.radius;
        } else if constexpr (std::is_same_v<T, HalfspaceConstraint>) {
          double m = 0.0;
          for (std::size_t k = 0; k < delta.size(); ++k)
            m += delta.weight(k) * c.x.value(k);
          if (c.geq) return c.closed ? m >= c.threshold : m > c.threshold;
          return c.closed ? m <= c.threshold : m < c.threshold;
        } else {
          return c.fn(delta);
        }
      },
      gamma);
}

SanovPoint sanov_probability(const ProbMeasure& p, const ConstraintSet& gamma,
                             std::int64_t n, double cap) {
  if (!p.faithful()) throw FaithfulnessError("empirical exponents need a faithful p");
  if (n < 1) throw InvalidInput("sample size must be positive");
  LogAccumulator acc;
  for_each_type(static_cast<int>(p.size()), n, cap, [&](const TypeVector& t) {
    if (!constraint_contains(gamma, type_to_empirical(p.space(), t))) return;
    acc.add(log_type_prob(p, t));
  });
  SanovPoint pt;
  pt.probability = std::exp(acc.log_total());
  pt.exponent = acc.log_total() / static_cast<double>(n);
  return pt;
}

namespace {

double halfspace_rate(const ProbMeasure& p, const HalfspaceConstraint& c) {
  CgfModel model(p, c.x);
  RateFunction rate(std::move(model));
  const CgfModel& m = rate.model();
  if (c.geq) {
    if (c.closed ? c.threshold > m.max_value() : c.threshold >= m.max_value())
      return kInf;  // empty constraint set
    if (c.closed ? m.mean() >= c.threshold : m.mean() > c.threshold) return 0.0;
    return rate.rate(c.threshold);
  }
  if (c.closed ? c.threshold < m.min_value() : c.threshold <= m.min_value())
    return kInf;
  if (c.closed ? m.mean() <= c.threshold : m.mean() < c.threshold) return 0.0;
  return rate.rate(c.threshold);
}

double grid_rate(const ProbMeasure& p, const ConstraintSet& gamma, double resolution) {
  const std::size_t l = p.size();
  if (l > 4) throw AlphabetTooLarge("generic constraint search supports at most 4 outcomes");
  if (!(resolution > 0.0 && resolution <= 0.5))
    throw InvalidInput("resolution must lie in (0, 0.5]");
  std::vector<double> logp(l);
  for (std::size_t k = 0; k < l; ++k) logp[k] = std::log(p.weight(k));
  auto kl = [&](const std::vector<double>& r) {
    double d = 0.0;
    for (std::size_t k = 0; k < l; ++k) {
      if (r[k] <= 0.0) continue;
      d += r[k] * (std::log(r[k]) - logp[k]);
    }
    return d;
  };
  std::int64_t steps = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::llround(1.0 / resolution)));
  double best = kInf;
  std::vector<double> best_r, r(l, 0.0);
  for_each_type(static_cast<int>(l), steps, 2e7, [&](const TypeVector& t) {
    for (std::size_t k = 0; k < l; ++k)
      r[k] = static_cast<double>(t.counts[k]) / static_cast<double>(steps);
    if (!constraint_contains(gamma, ProbMeasure(p.space(), r))) return;
    double v = kl(r);
    if (v < best) {
      best = v;
      best_r = r;
    }
  });
  if (best == kInf) return kInf;  // no grid point inside Gamma
  double step = 1.0 / static_cast<double>(steps);
  std::vector<double> cand(l);
  while (step > 1e-12) {
    bool improved = false;
    for (std::size_t i = 0; i < l; ++i) {
      for (std::size_t j = 0; j < l; ++j) {
        if (i == j || best_r[j] < step) continue;
        cand = best_r;
        cand[i] += step;
        cand[j] -= step;
        if (!constraint_contains(gamma, ProbMeasure(p.space(), cand))) continue;
        double v = kl(cand);
        if (v < best - 1e-16) {
          best = v;
          best_r = cand;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

}  // namespace

double sanov_rate(const ProbMeasure& p, const ConstraintSet& gamma, double resolution) {
  if (!p.faithful()) throw FaithfulnessError("empirical exponents need a faithful p");
  if (const auto* half = std::get_if<HalfspaceConstraint>(&gamma)) {
    require_same_space(p.space(), half->x.space());
    return halfspace_rate(p, *half);
  }
  return grid_rate(p, gamma, resolution);
}

SanovReport sanov_experiment(const ProbMeasure& p, const ConstraintSet& gamma,
                             const std::vector<std::int64_t>& n_grid,
                             double resolution, double cap) {
  SanovReport rep;
  rep.limit = -sanov_rate(p, gamma, resolution);
  const auto* ball = std::get_if<BallConstraint>(&gamma);
  rep.envelope_checked = ball != nullptr && ball->closed;
  rep.envelope_ok = true;
  const double l = static_cast<double>(p.size());
  for (std::int64_t n : n_grid) {
    SanovPoint pt = sanov_probability(p, gamma, n, cap);
    rep.rows.push_back({n, pt.probability, pt.exponent});
    if (rep.envelope_checked) {
      double envelope = l * std::log(static_cast<double>(n) + 1.0) /
                            static_cast<double>(n) +
                        0.02;
      if (!(std::abs(pt.exponent - rep.limit) <= envelope)) rep.envelope_ok = false;
    }
  }
  return rep;
}

}  // namespace entropics
