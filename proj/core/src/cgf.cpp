#include "entropics/cgf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "entropics/errors.hpp"
#include "entropics/numeric.hpp"
#include "entropics/types.hpp"

namespace entropics {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

CgfModel::CgfModel(ProbMeasure p, RandomVar x)
    : p_(std::move(p)), x_(std::move(x)) {
  require_same_space(p_.space(), x_.space());
  for (int i : p_.support()) supp_.push_back(static_cast<std::size_t>(i));
  xs_.reserve(supp_.size());
  logp_.reserve(supp_.size());
  for (std::size_t i : supp_) {
    xs_.push_back(x_.value(i));
    logp_.push_back(std::log(p_.weight(i)));
  }
  m_ = *std::min_element(xs_.begin(), xs_.end());
  big_m_ = *std::max_element(xs_.begin(), xs_.end());
  mean_ = 0.0;
  for (std::size_t k = 0; k < supp_.size(); ++k)
    mean_ += p_.weight(supp_[k]) * xs_[k];
  LogAccumulator lo, hi;
  for (std::size_t k = 0; k < supp_.size(); ++k) {
    if (xs_[k] == m_) lo.add(logp_[k]);
    if (xs_[k] == big_m_) hi.add(logp_[k]);
  }
  log_mass_min_ = lo.log_total();
  log_mass_max_ = hi.log_total();
}

double CgfModel::cgf(double alpha) const {
  // Shift by the max exponent so arbitrarily large |alpha| stays finite.
  double shift = -kInf;
  for (std::size_t k = 0; k < xs_.size(); ++k)
    shift = std::max(shift, logp_[k] + alpha * xs_[k]);
  double s = 0.0;
  for (std::size_t k = 0; k < xs_.size(); ++k)
    s += std::exp(logp_[k] + alpha * xs_[k] - shift);
  return shift + std::log(s);
}

double CgfModel::cgf_d1(double alpha) const {
  double c = cgf(alpha);
  double mean = 0.0;
  for (std::size_t k = 0; k < xs_.size(); ++k)
    mean += std::exp(logp_[k] + alpha * xs_[k] - c) * xs_[k];
  return mean;
}

double CgfModel::cgf_d2(double alpha) const {
  double c = cgf(alpha);
  double mean = 0.0;
  for (std::size_t k = 0; k < xs_.size(); ++k)
    mean += std::exp(logp_[k] + alpha * xs_[k] - c) * xs_[k];
  double var = 0.0;
  for (std::size_t k = 0; k < xs_.size(); ++k) {
    double d = xs_[k] - mean;
    var += std::exp(logp_[k] + alpha * xs_[k] - c) * d * d;
  }
  return var;
}

ProbMeasure CgfModel::tilted_measure(double alpha) const {
  double c = cgf(alpha);
  std::vector<double> w(p_.size(), 0.0);
  for (std::size_t k = 0; k < supp_.size(); ++k)
    w[supp_[k]] = std::exp(logp_[k] + alpha * xs_[k] - c);
  return ProbMeasure(p_.space(), std::move(w));
}

double solve_alpha_of_theta(const CgfModel& model, double theta) {
  if (model.degenerate())
    throw DegenerateVariable("tilting a constant variable cannot move its mean");
  if (!(theta > model.min_value() && theta < model.max_value()))
    throw ThetaOutOfOpenRange("theta must lie strictly between min and max of X");
  auto g = [&](double a) { return model.cgf_d1(a) - theta; };
  // C' is increasing with range (min, max), so a finite bracket exists.
  double lo = -1.0, hi = 1.0;
  int guard = 0;
  while (g(hi) < 0.0) {
    hi *= 2.0;
    if (++guard > 80) throw RootNonConvergence("tilting bracket failed to close");
  }
  guard = 0;
  while (g(lo) > 0.0) {
    lo *= 2.0;
    if (++guard > 80) throw RootNonConvergence("tilting bracket failed to close");
  }
  return num::bisect_increasing(g, lo, hi);
}

RateFunction::RateFunction(CgfModel model) : model_(std::move(model)) {}

double RateFunction::rate(double theta) const {
  const double m = model_.min_value();
  const double big_m = model_.max_value();
  if (model_.degenerate()) return theta == m ? 0.0 : kInf;
  const double span = big_m - m;
  if (std::abs(theta - m) <= 1e-12 * span) return -model_.log_mass_min();
  if (std::abs(theta - big_m) <= 1e-12 * span) return -model_.log_mass_max();
  if (theta < m || theta > big_m) return kInf;
  if (theta == model_.mean()) return 0.0;
  double alpha = solve_alpha_of_theta(model_, theta);
  return std::max(0.0, alpha * theta - model_.cgf(alpha));
}

double RateFunction::inverse_legendre_gap(double alpha) const {
  double theta = model_.cgf_d1(alpha);
  double value = alpha * theta - rate(theta);
  return std::abs(value - model_.cgf(alpha));
}

namespace {

// binom(n, k) table for small n, exact in double.
std::vector<std::vector<double>> pascal(int n) {
  std::vector<std::vector<double>> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    c[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1.0);
    for (int j = 1; j < i; ++j)
      c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
  }
  return c;
}

constexpr int kMaxOrder = 20;

}  // namespace

std::vector<double> cumulants_to_moments(const std::vector<double>& cumulants) {
  int big_k = static_cast<int>(cumulants.size());
  if (big_k > kMaxOrder) throw OrderTooLarge("orders beyond 20 are not supported");
  auto c = pascal(big_k);
  // M_n = sum_{k=0}^{n-1} binom(n-1, k) C_{k+1} M_{n-1-k}, with M_0 = 1.
  std::vector<double> mom(static_cast<std::size_t>(big_k) + 1, 0.0);
  mom[0] = 1.0;
  for (int n = 1; n <= big_k; ++n) {
    double s = 0.0;
    for (int k = 0; k <= n - 1; ++k)
      s += c[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)] *
           cumulants[static_cast<std::size_t>(k)] *
           mom[static_cast<std::size_t>(n - 1 - k)];
    mom[static_cast<std::size_t>(n)] = s;
  }
  return {mom.begin() + 1, mom.end()};
}

std::vector<double> moments_to_cumulants(const std::vector<double>& moments) {
  int big_k = static_cast<int>(moments.size());
  if (big_k > kMaxOrder) throw OrderTooLarge("orders beyond 20 are not supported");
  auto c = pascal(big_k);
  std::vector<double> mom(static_cast<std::size_t>(big_k) + 1, 0.0);
  mom[0] = 1.0;
  for (int n = 1; n <= big_k; ++n)
    mom[static_cast<std::size_t>(n)] = moments[static_cast<std::size_t>(n - 1)];
  // Invert the same recursion: the k = n-1 term isolates C_n.
  std::vector<double> cum(static_cast<std::size_t>(big_k), 0.0);
  for (int n = 1; n <= big_k; ++n) {
    double s = 0.0;
    for (int k = 0; k <= n - 2; ++k)
      s += c[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)] *
           cum[static_cast<std::size_t>(k)] *
           mom[static_cast<std::size_t>(n - 1 - k)];
    cum[static_cast<std::size_t>(n - 1)] = mom[static_cast<std::size_t>(n)] - s;
  }
  return cum;
}

double cramer_exact_log(const CgfModel& model, std::int64_t n, double a, double b,
                        double cap) {
  if (n < 1) throw InvalidInput("sample size must be positive");
  if (!(a <= b)) throw InvalidInput("window needs a <= b");
  const auto& xs = model.support_values();
  const auto& logp = model.support_log_weights();
  int l = static_cast<int>(xs.size());
  LogAccumulator acc;
  for_each_type(l, n, cap, [&](const TypeVector& t) {
    double sum = 0.0;
    for (int k = 0; k < l; ++k)
      sum += static_cast<double>(t.counts[static_cast<std::size_t>(k)]) *
             xs[static_cast<std::size_t>(k)];
    double theta = sum / static_cast<double>(n);
    if (theta >= a && theta <= b) {
      double lt = log_multinomial_coeff(t);
      for (int k = 0; k < l; ++k)
        lt += static_cast<double>(t.counts[static_cast<std::size_t>(k)]) *
              logp[static_cast<std::size_t>(k)];
      acc.add(lt);
    }
  });
  return acc.log_total();
}

double cramer_exact(const CgfModel& model, std::int64_t n, double a, double b,
                    double cap) {
  return std::exp(cramer_exact_log(model, n, a, b, cap));
}

double cramer_mc(const CgfModel& model, std::int64_t n, double a, double b,
                 std::int64_t reps, std::uint64_t seed) {
  if (n < 1 || reps < 1) throw InvalidInput("sample size and reps must be positive");
  if (!(a <= b)) throw InvalidInput("window needs a <= b");
  const ProbMeasure& p = model.p();
  std::vector<double> cdf(p.size(), 0.0);
  double run = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    run += p.weight(i);
    cdf[i] = run;
  }
  cdf.back() = 1.0;
  const RandomVar& x = model.x();
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(reps), 0);
  num::parallel_for(static_cast<std::size_t>(reps), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t r = lo; r < hi; ++r) {
      num::Rng rng = num::Rng::substream(seed, static_cast<std::uint64_t>(r));
      double sum = 0.0;
      for (std::int64_t j = 0; j < n; ++j) {
        double u = rng.uniform();
        std::size_t idx = static_cast<std::size_t>(
            std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        if (idx >= p.size()) idx = p.size() - 1;
        sum += x.value(idx);
      }
      double theta = sum / static_cast<double>(n);
      hit[r] = (theta >= a && theta <= b) ? 1 : 0;
    }
  });
  std::int64_t count = 0;
  for (std::uint8_t h : hit) count += h;
  return static_cast<double>(count) / static_cast<double>(reps);
}

}  // namespace entropics
