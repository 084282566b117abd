#include "entropics/testing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "entropics/divergence.hpp"
#include "entropics/errors.hpp"
#include "entropics/numeric.hpp"
#include "entropics/types.hpp"

namespace entropics {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_prior(double prior) {
  if (!(prior > 0.0 && prior < 1.0)) throw InvalidInput("prior must lie in (0,1)");
}

RandomVar log_likelihood_ratio(const ProbMeasure& p, const ProbMeasure& q) {
  require_same_space(p.space(), q.space());
  if (!p.faithful() || !q.faithful())
    throw FaithfulnessError("the likelihood-ratio variable needs a faithful pair");
  std::vector<double> v(p.size());
  for (std::size_t k = 0; k < p.size(); ++k)
    v[k] = std::log(q.weight(k)) - std::log(p.weight(k));
  return RandomVar(p.space(), std::move(v));
}

}  // namespace

std::vector<std::size_t> optimal_test(const ProbMeasure& p, const ProbMeasure& q,
                                      double prior_p) {
  require_same_space(p.space(), q.space());
  require_prior(prior_p);
  std::vector<std::size_t> t;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (prior_p * p.weight(k) <= (1.0 - prior_p) * q.weight(k)) t.push_back(k);
  return t;
}

double bayes_error(const ProbMeasure& p, const ProbMeasure& q, double prior_p) {
  require_same_space(p.space(), q.space());
  require_prior(prior_p);
  double d = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k)
    d += std::min(prior_p * p.weight(k), (1.0 - prior_p) * q.weight(k));
  return d;
}

double bayes_error_exact_log(const ProbMeasure& p, const ProbMeasure& q,
                             double prior_p, std::int64_t n, double cap) {
  require_same_space(p.space(), q.space());
  require_prior(prior_p);
  if (n < 1) throw InvalidInput("sample size must be positive");
  std::size_t l = p.size();
  std::vector<double> logp(l, -kInf), logq(l, -kInf);
  for (std::size_t k = 0; k < l; ++k) {
    if (p.weight(k) > 0.0) logp[k] = std::log(p.weight(k));
    if (q.weight(k) > 0.0) logq[k] = std::log(q.weight(k));
  }
  const double log_prior = std::log(prior_p);
  const double log_coprior = std::log(1.0 - prior_p);
  LogAccumulator acc;
  for_each_type(static_cast<int>(l), n, cap, [&](const TypeVector& t) {
    double lp = 0.0, lq = 0.0;
    for (std::size_t k = 0; k < l; ++k) {
      if (t.counts[k] == 0) continue;
      double c = static_cast<double>(t.counts[k]);
      lp += c * logp[k];
      lq += c * logq[k];
    }
    double lmin = std::min(log_prior + lp, log_coprior + lq);
    if (lmin == -kInf) return;
    acc.add(log_multinomial_coeff(t) + lmin);
  });
  return acc.log_total();
}

ChernoffResult chernoff_exponent(const ProbMeasure& p, const ProbMeasure& q) {
  require_same_space(p.space(), q.space());
  double d0 = renyi_divergence_cgf_d1(p, q, 0.0);
  if (d0 >= 0.0) return {0.0, renyi_divergence_cgf(p, q, 0.0)};
  double d1 = renyi_divergence_cgf_d1(p, q, 1.0);
  if (d1 <= 0.0) return {1.0, renyi_divergence_cgf(p, q, 1.0)};
  double alpha = num::bisect_increasing(
      [&](double a) { return renyi_divergence_cgf_d1(p, q, a); }, 0.0, 1.0);
  return {alpha, renyi_divergence_cgf(p, q, alpha)};
}

SteinResult stein_exponent(const ProbMeasure& p, const ProbMeasure& q, double gamma,
                           std::int64_t n, double cap) {
  require_same_space(p.space(), q.space());
  if (!(gamma > 0.0 && gamma < 1.0)) throw InvalidInput("gamma must lie in (0,1)");
  if (n < 1) throw InvalidInput("sample size must be positive");
  std::size_t l = p.size();
  std::vector<double> logp(l, -kInf), logq(l, -kInf);
  for (std::size_t k = 0; k < l; ++k) {
    if (p.weight(k) > 0.0) logp[k] = std::log(p.weight(k));
    if (q.weight(k) > 0.0) logq[k] = std::log(q.weight(k));
  }
  // One row per type class with positive p-mass: per-word log-probabilities
  // under both hypotheses plus the class log-cardinality.
  struct Row {
    double delta;  // per-word log(p/q), +inf when the word is q-null
    double log_pword;
    double log_qword;
    double log_mult;
  };
  std::vector<Row> rows;
  for_each_type(static_cast<int>(l), n, cap, [&](const TypeVector& t) {
    double lp = 0.0, lq = 0.0;
    for (std::size_t k = 0; k < l; ++k) {
      if (t.counts[k] == 0) continue;
      double c = static_cast<double>(t.counts[k]);
      lp += c * logp[k];
      lq += c * logq[k];
    }
    if (lp == -kInf) return;  // p-null classes only cost q-mass; the greedy never takes them
    rows.push_back({lp - lq, lp, lq, log_multinomial_coeff(t)});
  });
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.delta != b.delta) return a.delta > b.delta;
    return a.log_pword > b.log_pword;
  });
  // Merge rows sharing (delta, per-word p-probability) within tolerance.
  struct Group {
    double delta;
    double log_pword;
    double log_qword;
    double log_mult;
  };
  std::vector<Group> groups;
  auto near = [](double a, double b) {
    if (a == b) return true;  // covers the +inf deltas
    return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b));
  };
  for (const Row& r : rows) {
    if (!groups.empty() && near(r.delta, groups.back().delta) &&
        near(r.log_pword, groups.back().log_pword)) {
      groups.back().log_mult = num::log_add_exp(groups.back().log_mult, r.log_mult);
    } else {
      groups.push_back({r.delta, r.log_pword, r.log_qword, r.log_mult});
    }
  }
  long double pmass = 0.0L;
  LogAccumulator qacc;
  for (const Group& g : groups) {
    long double group_pmass = expl(static_cast<long double>(g.log_mult + g.log_pword));
    if (pmass + group_pmass < static_cast<long double>(gamma)) {
      pmass += group_pmass;
      qacc.add(g.log_mult + g.log_qword);
      continue;
    }
    long double needed = static_cast<long double>(gamma) - pmass;
    long double per_word = expl(static_cast<long double>(g.log_pword));
    long double k = ceill(needed / per_word);
    if (k < 1.0L) k = 1.0L;
    qacc.add(static_cast<double>(logl(k)) + g.log_qword);
    break;
  }
  SteinResult res;
  res.normalized = qacc.log_total() / static_cast<double>(n);
  res.s_n = std::exp(qacc.log_total());
  return res;
}

TiltedPair::TiltedPair(ProbMeasure p_in, ProbMeasure q_in)
    : p(std::move(p_in)),
      q(std::move(q_in)),
      cgf(p, log_likelihood_ratio(p, q)) {}

HoeffdingPoint hoeffding_psi(const ProbMeasure& p, const ProbMeasure& q, double s) {
  if (s < 0.0) throw SOutOfRange("the type-II rate s must be non-negative");
  TiltedPair pair(p, q);
  const double s_pq = -pair.cgf.cgf_d1(0.0);  // S(P|Q)
  if (s >= s_pq) return {0.0, 0.0};
  if (s == 0.0) return {-pair.cgf.cgf_d1(1.0), 1.0};
  auto g = [&](double a) {
    return s + pair.cgf.cgf(a) + (1.0 - a) * pair.cgf.cgf_d1(a);
  };
  double alpha = num::bisect_increasing(g, 0.0, 1.0);
  return {-s - pair.cgf.cgf_d1(alpha), alpha};
}

namespace {

double phi_from_cgf(const CgfModel& cgf, double theta) {
  double lo_slope = cgf.cgf_d1(0.0);
  if (theta <= lo_slope) return 0.0;
  double hi_slope = cgf.cgf_d1(1.0);
  if (theta >= hi_slope) return theta;
  double alpha =
      num::bisect_increasing([&](double a) { return cgf.cgf_d1(a) - theta; }, 0.0, 1.0);
  return std::max(0.0, theta * alpha - cgf.cgf(alpha));
}

}  // namespace

double hoeffding_phi(const ProbMeasure& p, const ProbMeasure& q, double theta) {
  TiltedPair pair(p, q);
  return phi_from_cgf(pair.cgf, theta);
}

double hoeffding_phi_hat(const ProbMeasure& p, const ProbMeasure& q, double theta) {
  TiltedPair pair(p, q);
  return phi_from_cgf(pair.cgf, theta) - theta;
}

double hoeffding_phi_hat_inverse(const ProbMeasure& p, const ProbMeasure& q, double s) {
  if (s < 0.0) throw SOutOfRange("the shifted transform is only inverted for s >= 0");
  TiltedPair pair(p, q);
  const double s_pq = -pair.cgf.cgf_d1(0.0);
  if (s >= s_pq) return -s;
  const double s_qp = pair.cgf.cgf_d1(1.0);
  auto h = [&](double theta) { return s - (phi_from_cgf(pair.cgf, theta) - theta); };
  return num::bisect_increasing(h, -s_pq, s_qp);
}

double hoeffding_constrained_oracle(const ProbMeasure& p, const ProbMeasure& q,
                                    double s, double grid_resolution) {
  require_same_space(p.space(), q.space());
  if (p.size() > 4) throw AlphabetTooLarge("grid search supports at most 4 outcomes");
  if (!p.faithful() || !q.faithful())
    throw FaithfulnessError("the constrained search needs a faithful pair");
  if (s < 0.0) throw SOutOfRange("the constraint level s must be non-negative");
  if (!(grid_resolution > 0.0 && grid_resolution <= 0.5))
    throw InvalidInput("grid resolution must lie in (0, 0.5]");
  const std::size_t l = p.size();
  std::vector<double> logp(l), logq(l);
  for (std::size_t k = 0; k < l; ++k) {
    logp[k] = std::log(p.weight(k));
    logq[k] = std::log(q.weight(k));
  }
  auto kl_to = [&](const std::vector<double>& r, const std::vector<double>& logref) {
    double d = 0.0;
    for (std::size_t k = 0; k < l; ++k) {
      if (r[k] <= 0.0) continue;
      d += r[k] * (std::log(r[k]) - logref[k]);
    }
    return d;
  };
  std::int64_t steps = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::llround(1.0 / grid_resolution)));
  double best = kInf;
  std::vector<double> best_r(l, 0.0), r(l, 0.0);
  for_each_type(static_cast<int>(l), steps, 2e7, [&](const TypeVector& t) {
    for (std::size_t k = 0; k < l; ++k)
      r[k] = static_cast<double>(t.counts[k]) / static_cast<double>(steps);
    if (kl_to(r, logq) > s) return;
    double v = kl_to(r, logp);
    if (v < best) {
      best = v;
      best_r = r;
    }
  });
  // Local refinement: pairwise mass transfers with shrinking step.
  double step = 1.0 / static_cast<double>(steps);
  std::vector<double> cand(l);
  while (step > 1e-12) {
    bool improved = false;
    for (std::size_t i = 0; i < l; ++i) {
      for (std::size_t j = 0; j < l; ++j) {
        if (i == j) continue;
        if (best_r[j] < step) continue;
        cand = best_r;
        cand[i] += step;
        cand[j] -= step;
        if (kl_to(cand, logq) > s) continue;
        double v = kl_to(cand, logp);
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

ThresholdExponents threshold_test_exponents(const ProbMeasure& p, const ProbMeasure& q,
                                            double theta, std::int64_t n, double cap) {
  require_same_space(p.space(), q.space());
  if (!p.faithful() || !q.faithful())
    throw FaithfulnessError("threshold tests need a faithful pair");
  if (n < 1) throw InvalidInput("sample size must be positive");
  std::size_t l = p.size();
  std::vector<double> logp(l), logq(l);
  for (std::size_t k = 0; k < l; ++k) {
    logp[k] = std::log(p.weight(k));
    logq[k] = std::log(q.weight(k));
  }
  const double bar = static_cast<double>(n) * theta;
  LogAccumulator acc_p, acc_qc;
  for_each_type(static_cast<int>(l), n, cap, [&](const TypeVector& t) {
    double lp = 0.0, lq = 0.0;
    for (std::size_t k = 0; k < l; ++k) {
      if (t.counts[k] == 0) continue;
      double c = static_cast<double>(t.counts[k]);
      lp += c * logp[k];
      lq += c * logq[k];
    }
    double lm = log_multinomial_coeff(t);
    if (lq - lp >= bar)
      acc_p.add(lm + lp);
    else
      acc_qc.add(lm + lq);
  });
  ThresholdExponents res;
  res.p_exponent = acc_p.log_total() / static_cast<double>(n);
  res.q_complement_exponent = acc_qc.log_total() / static_cast<double>(n);
  return res;
}

}  // namespace entropics
