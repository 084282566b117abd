#include "entropics/divergence.hpp"

#include <cmath>
#include <limits>

#include "entropics/entropy.hpp"
#include "entropics/errors.hpp"
#include "entropics/numeric.hpp"

namespace entropics {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// Common-support tilted weights p^alpha q^(1-alpha), log-domain; empty if singular.
struct TiltedSupport {
  std::vector<int> idx;
  std::vector<double> logw;  // alpha*log p + (1-alpha)*log q
  std::vector<double> llr;   // log(p/q)
};

TiltedSupport tilted_support(const ProbMeasure& p, const ProbMeasure& q, double alpha) {
  require_same_space(*p.space(), *q.space());
  TiltedSupport t;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p.weight(k) > 0.0 && q.weight(k) > 0.0) {
      double lp = std::log(p.weight(k)), lq = std::log(q.weight(k));
      t.idx.push_back(static_cast<int>(k));
      t.logw.push_back(alpha * lp + (1.0 - alpha) * lq);
      t.llr.push_back(lp - lq);
    }
  }
  return t;
}
}  // namespace

double kl_divergence(const ProbMeasure& p, const ProbMeasure& q) {
  require_same_space(*p.space(), *q.space());
  double s = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p.weight(k) == 0.0) continue;
    if (q.weight(k) == 0.0) return kInf;
    s += p.weight(k) * std::log(p.weight(k) / q.weight(k));
  }
  return s;
}

double kl_vs_chaotic(const ProbMeasure& p) {
  return std::log(static_cast<double>(p.size())) - shannon_entropy(p);
}

double pinsker_gap(const ProbMeasure& p, const ProbMeasure& q) {
  double d = variational_distance(p, q);
  return kl_divergence(p, q) - 0.5 * d * d;
}

double renyi_divergence_cgf(const ProbMeasure& p, const ProbMeasure& q, double alpha) {
  auto t = tilted_support(p, q, alpha);
  return num::log_sum_exp(t.logw);
}

double renyi_divergence_cgf_d1(const ProbMeasure& p, const ProbMeasure& q, double alpha) {
  auto t = tilted_support(p, q, alpha);
  double z = num::log_sum_exp(t.logw);
  double mean = 0.0;
  for (std::size_t i = 0; i < t.logw.size(); ++i)
    mean += std::exp(t.logw[i] - z) * t.llr[i];
  return mean;
}

double renyi_divergence_cgf_d2(const ProbMeasure& p, const ProbMeasure& q, double alpha) {
  auto t = tilted_support(p, q, alpha);
  double z = num::log_sum_exp(t.logw);
  double mean = 0.0;
  for (std::size_t i = 0; i < t.logw.size(); ++i)
    mean += std::exp(t.logw[i] - z) * t.llr[i];
  double var = 0.0;
  for (std::size_t i = 0; i < t.logw.size(); ++i) {
    double d = t.llr[i] - mean;
    var += std::exp(t.logw[i] - z) * d * d;
  }
  return var;
}

ProbMeasure renyi_tilted(const ProbMeasure& p, const ProbMeasure& q, double alpha) {
  auto t = tilted_support(p, q, alpha);
  if (t.idx.empty()) throw AbsContViolation("tilted interpolation needs a common support atom");
  double z = num::log_sum_exp(t.logw);
  std::vector<double> w(p.size(), 0.0);
  for (std::size_t i = 0; i < t.idx.size(); ++i)
    w[static_cast<std::size_t>(t.idx[i])] = std::exp(t.logw[i] - z);
  return ProbMeasure(p.space(), std::move(w));
}

double renyi_divergence(const ProbMeasure& p, const ProbMeasure& q, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw AlphaOutOfRange("normalized Renyi relative entropy needs alpha in (0,1)");
  return renyi_divergence_cgf(p, q, alpha) / (alpha - 1.0);
}

double js_entropy(const ProbMeasure& p, const ProbMeasure& q) {
  require_same_space(*p.space(), *q.space());
  std::vector<double> m(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) m[k] = 0.5 * (p.weight(k) + q.weight(k));
  ProbMeasure mid(p.space(), std::move(m));
  return shannon_entropy(mid) - 0.5 * shannon_entropy(p) - 0.5 * shannon_entropy(q);
}

double js_metric(const ProbMeasure& p, const ProbMeasure& q) {
  return std::sqrt(std::max(0.0, js_entropy(p, q)));
}

double js_pointwise_L(double x, double y) {
  if (!(x >= 0.0) || !(y >= 0.0)) throw InvalidInput("pointwise mixture divergence needs non-negative arguments");
  if (x == 0.0 && y == 0.0) return 0.0;
  double s = x + y;
  double r = 0.0;
  if (x > 0.0) r += x * std::log(2.0 * x / s);
  if (y > 0.0) r += y * std::log(2.0 * y / s);
  return r;
}

double kl_variational_value(const ProbMeasure& p, const ProbMeasure& q, const RandomVar& x) {
  require_same_space(*p.space(), *q.space());
  require_same_space(*p.space(), *x.space());
  std::vector<double> terms;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p.weight(k) > 0.0 && q.weight(k) > 0.0)
      terms.push_back(x.value(k) + std::log(q.weight(k)));
  return x.expectation(p) - num::log_sum_exp(terms);
}

std::pair<double, RandomVar> kl_variational_sup(const ProbMeasure& p, const ProbMeasure& q) {
  double s = kl_divergence(p, q);
  if (s == kInf)
    throw AbsContViolation("variational maximizer needs P absolutely continuous w.r.t. Q");
  std::vector<double> v(p.size(), 0.0);
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p.weight(k) > 0.0) v[k] = std::log(p.weight(k) / q.weight(k));
  return {s, RandomVar(p.space(), std::move(v))};
}

std::pair<ProbMeasure, double> gibbs_maximizer(const ProbMeasure& q, const RandomVar& x) {
  require_same_space(*q.space(), *x.space());
  std::vector<double> logw;
  std::vector<int> idx;
  for (std::size_t k = 0; k < q.size(); ++k)
    if (q.weight(k) > 0.0) {
      idx.push_back(static_cast<int>(k));
      logw.push_back(x.value(k) + std::log(q.weight(k)));
    }
  double z = num::log_sum_exp(logw);
  std::vector<double> w(q.size(), 0.0);
  for (std::size_t i = 0; i < idx.size(); ++i)
    w[static_cast<std::size_t>(idx[i])] = std::exp(logw[i] - z);
  return {ProbMeasure(q.space(), std::move(w)), z};
}

double log_sum_gap(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InvalidInput("log-sum inequality needs equal-length inputs");
  double sa = 0.0, sb = 0.0, lhs = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] >= 0.0) || !(b[i] >= 0.0)) throw InvalidInput("log-sum inequality needs non-negative entries");
    sa += a[i];
    sb += b[i];
    if (a[i] > 0.0) {
      if (b[i] == 0.0) return kInf;
      lhs += a[i] * std::log(a[i] / b[i]);
    }
  }
  if (sa == 0.0) return 0.0;
  if (sb == 0.0) return kInf;
  return lhs - sa * std::log(sa / sb);
}

}  // namespace entropics
