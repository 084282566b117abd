#pragma once

#include <span>
#include <utility>

#include "entropics/measure.hpp"

namespace entropics {

// Relative entropy S(P|Q) in nats; +inf when P is not absolutely continuous
// with respect to Q.
double kl_divergence(const ProbMeasure& p, const ProbMeasure& q);

// S(P|P_chaotic) = log L - S(P).
double kl_vs_chaotic(const ProbMeasure& p);

// S(P|Q) - d_V(P,Q)^2 / 2; non-negative, 0 iff P = Q.
double pinsker_gap(const ProbMeasure& p, const ProbMeasure& q);

// Normalized Renyi relative entropy S_alpha(P|Q) for alpha in (0,1),
// derived from the extended form restricted to the common support.
double renyi_divergence(const ProbMeasure& p, const ProbMeasure& q, double alpha);

// Extended Renyi relative entropy: log sum_T p^alpha q^(1-alpha) over
// T = supp P intersect supp Q; -inf iff P and Q are mutually singular.
// It is the cumulant generating function of log(p/q); the derivatives are
// the mean and variance of log(p/q) under the tilted measure.
double renyi_divergence_cgf(const ProbMeasure& p, const ProbMeasure& q, double alpha);
double renyi_divergence_cgf_d1(const ProbMeasure& p, const ProbMeasure& q, double alpha);
double renyi_divergence_cgf_d2(const ProbMeasure& p, const ProbMeasure& q, double alpha);

// Tilted interpolation proportional to p^alpha q^(1-alpha) on the common
// support, zero elsewhere.
ProbMeasure renyi_tilted(const ProbMeasure& p, const ProbMeasure& q, double alpha);

// Jensen-Shannon entropy S(M) - S(P)/2 - S(Q)/2 with M the even mixture,
// and the metric sqrt of it.
double js_entropy(const ProbMeasure& p, const ProbMeasure& q);
double js_metric(const ProbMeasure& p, const ProbMeasure& q);

// Two-point building block L(x,y) = x log(2x/(x+y)) + y log(2y/(x+y)).
double js_pointwise_L(double x, double y);

// Donsker-Varadhan style lower bound: int X dP - log int_{supp P} e^X dQ.
double kl_variational_value(const ProbMeasure& p, const ProbMeasure& q, const RandomVar& x);
// The supremum S(P|Q) together with its maximizer log(p/q) extended by 0.
std::pair<double, RandomVar> kl_variational_sup(const ProbMeasure& p, const ProbMeasure& q);

// Gibbs dual: the maximizer e^X Q / Z of X-tilting and the value log int e^X dQ.
std::pair<ProbMeasure, double> gibbs_maximizer(const ProbMeasure& q, const RandomVar& x);

// Scalar log-sum inequality gap: sum a_i log(a_i/b_i) - A log(A/B) >= 0.
double log_sum_gap(std::span<const double> a, std::span<const double> b);

}  // namespace entropics
