#pragma once

#include "entropics/measure.hpp"

namespace entropics {

// Boltzmann-Gibbs-Shannon entropy in nats; 0 log 0 = 0.
double shannon_entropy(const ProbMeasure& p);

// The random variable omega -> -log p(omega); +inf off supp p.
RandomVar entropy_function(const ProbMeasure& p);

// log |supp p|.
double hartley_entropy(const ProbMeasure& p);

// Renyi entropy S_alpha with the analytic-extension conventions
// S_1 = Shannon, S_0 = Hartley; the power sum runs over supp p for all alpha.
double renyi_entropy(const ProbMeasure& p, double alpha);

// Extended Renyi entropy: the cumulant generating function of the entropy
// function, log sum p^(1-alpha). Requires a faithful measure; satisfies
// renyi_cgf(p, a) = a * renyi_entropy(p, 1-a).
double renyi_cgf(const ProbMeasure& p, double alpha);

struct ConditionalDecomposition {
  double joint;        // S(P)
  double left;         // S(P_l)
  double conditional;  // sum_w P_l(w) S(P_r | left = w)
};

// Chain rule decomposition S(P) = S(P_l) + conditional on a 2-fold product.
ConditionalDecomposition conditional_decomposition(const ProbMeasure& p);

}  // namespace entropics
