#pragma once

#include <vector>

#include "entropics/measure.hpp"

namespace entropics {

// A self-inverse relabeling of outcomes.
struct Involution {
  std::vector<std::size_t> perm;
};

// Validates perm against the space: a permutation with perm[perm[i]] = i.
Involution make_involution(const SpacePtr& space, std::vector<std::size_t> perm);

// The image measure w'[i] = w[perm[i]].
ProbMeasure involution_push(const ProbMeasure& p, const Involution& theta);

// Distribution of the entropy production s(w) = log p(w)/p(perm(w)).
struct EpAtom {
  double s;
  double prob;
};
struct EpDistribution {
  std::vector<EpAtom> atoms;  // sorted by s ascending
};

// Groups outcomes by s-value, merging within absolute tolerance 1e-9;
// requires the permutation to preserve the support of p.
EpDistribution ep_distribution(const ProbMeasure& p, const Involution& theta);

// max_s |Q(-s) - e^{-s} Q(s)|; zero (to rounding) by the fluctuation relation.
double fluctuation_check(const EpDistribution& dist);

// max over the grid of |S^_alpha - S^_{1-alpha}| for the pair (p, image of p).
double renyi_symmetry_check(const ProbMeasure& p, const Involution& theta,
                            const std::vector<double>& alpha_grid);

}  // namespace entropics
