#pragma once

#include <cstdint>

#include "entropics/cgf.hpp"
#include "entropics/measure.hpp"

namespace entropics {

// Outcomes where deciding for q is at least as good: prior p(w) <= (1-prior) q(w).
std::vector<std::size_t> optimal_test(const ProbMeasure& p, const ProbMeasure& q,
                                      double prior_p);

// Minimal Bayesian error sum min{prior p(w), (1-prior) q(w)}.
double bayes_error(const ProbMeasure& p, const ProbMeasure& q, double prior_p);

// log of the exact Bayesian error between the N-fold products, via types.
double bayes_error_exact_log(const ProbMeasure& p, const ProbMeasure& q,
                             double prior_p, std::int64_t n, double cap = 1e7);

// Minimum over [0,1] of the log-domain Renyi divergence of the pair.
struct ChernoffResult {
  double alpha_min;
  double value;
};
ChernoffResult chernoff_exponent(const ProbMeasure& p, const ProbMeasure& q);

// Minimal q-mass over tests T with p-mass at least gamma, greedy in
// decreasing likelihood-ratio order over the N-fold product.
struct SteinResult {
  double s_n;         // minimal q-mass
  double normalized;  // (1/N) log s_n
};
SteinResult stein_exponent(const ProbMeasure& p, const ProbMeasure& q, double gamma,
                           std::int64_t n, double cap = 1e7);

// Faithful pair with the log-likelihood-ratio variable log(q/p) tilted
// under p; its CGF at alpha is the log-domain Renyi divergence of (q, p).
struct TiltedPair {
  ProbMeasure p;
  ProbMeasure q;
  CgfModel cgf;
  TiltedPair(ProbMeasure p_in, ProbMeasure q_in);
};

// Best type-I decay rate given type-II decay at rate s, with the tilting
// parameter that attains it.
struct HoeffdingPoint {
  double psi;
  double alpha_star;
};
HoeffdingPoint hoeffding_psi(const ProbMeasure& p, const ProbMeasure& q, double s);

// Legendre transform of the pair CGF clamped to [0,1], its shift by theta,
// and the inverse of the shift.
double hoeffding_phi(const ProbMeasure& p, const ProbMeasure& q, double theta);
double hoeffding_phi_hat(const ProbMeasure& p, const ProbMeasure& q, double theta);
double hoeffding_phi_hat_inverse(const ProbMeasure& p, const ProbMeasure& q, double s);

// Brute-force min of S(R|P) over simplex grid points R with S(R|Q) <= s,
// locally refined; alphabets larger than 4 are rejected.
double hoeffding_constrained_oracle(const ProbMeasure& p, const ProbMeasure& q,
                                    double s, double grid_resolution);

// Exact exponents of the threshold test {Q_N >= e^{N theta} P_N}:
// (1/N) log P_N(T) and (1/N) log Q_N(T^c).
struct ThresholdExponents {
  double p_exponent;
  double q_complement_exponent;
};
ThresholdExponents threshold_test_exponents(const ProbMeasure& p, const ProbMeasure& q,
                                            double theta, std::int64_t n,
                                            double cap = 1e7);

}  // namespace entropics
