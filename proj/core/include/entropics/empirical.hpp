#pragma once

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "entropics/measure.hpp"
#include "entropics/types.hpp"

namespace entropics {

// N iid outcome indices by CDF inversion on the (seed, 0) substream.
std::vector<std::size_t> sample_iid(const ProbMeasure& p, std::int64_t n,
                                    std::uint64_t seed);

// Normalized counts of a non-empty sample of outcome indices.
ProbMeasure empirical_measure(const SpacePtr& space,
                              const std::vector<std::size_t>& sample);

// All compositions of n into l parts, lexicographic; small instances only.
std::vector<TypeVector> enumerate_types(int l, std::int64_t n, double cap = 1e7);

// Constraint sets on the simplex of probability measures.
struct BallConstraint {
  ProbMeasure center;
  double radius;  // in variational distance
  bool closed;
};
struct HalfspaceConstraint {
  RandomVar x;
  double threshold;
  bool geq;  // mean(x) >= threshold when true, <= when false
  bool closed;
};
struct PredicateConstraint {
  std::function<bool(const ProbMeasure&)> fn;
};
using ConstraintSet = std::variant<BallConstraint, HalfspaceConstraint, PredicateConstraint>;

bool constraint_contains(const ConstraintSet& gamma, const ProbMeasure& delta);

// Exact P_N{empirical measure in Gamma} over types: (probability, (1/N) log).
struct SanovPoint {
  double probability;
  double exponent;
};
SanovPoint sanov_probability(const ProbMeasure& p, const ConstraintSet& gamma,
                             std::int64_t n, double cap = 1e7);

// inf_{Q in Gamma} S(Q|P): exact via the rate function for halfspaces;
// simplex grid search plus local refinement otherwise (alphabet <= 4).
double sanov_rate(const ProbMeasure& p, const ConstraintSet& gamma,
                  double resolution = 0.005);

// Finite-N exponents against the limiting rate, with the method-of-types
// envelope |gap| <= l log(N+1)/N + 0.02 asserted for closed balls.
struct SanovRow {
  std::int64_t n;
  double probability;
  double exponent;
};
struct SanovReport {
  std::vector<SanovRow> rows;
  double limit;  // -inf_Gamma S(Q|P)
  bool envelope_checked;
  bool envelope_ok;
};
SanovReport sanov_experiment(const ProbMeasure& p, const ConstraintSet& gamma,
                             const std::vector<std::int64_t>& n_grid,
                             double resolution = 0.005, double cap = 1e7);

}  // namespace entropics
