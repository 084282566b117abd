#pragma once

#include <cstdint>
#include <functional>

#include "entropics/measure.hpp"

namespace entropics {

// Occupation counts of an N-sample over L outcomes.
struct TypeVector {
  std::vector<std::int64_t> counts;
  std::int64_t total = 0;
};

// binom(N+L-1, L-1) as a double.
double composition_count(int l, std::int64_t n);

// Visits every composition of N into L parts in lexicographic order
// ((0,...,0,N) first, (N,0,...,0) last); throws EnumerationCapExceeded when
// the composition count exceeds cap.
void for_each_type(int l, std::int64_t n, double cap,
                   const std::function<void(const TypeVector&)>& fn);

// log of the multinomial coefficient N! / prod(counts!).
double log_multinomial_coeff(const TypeVector& t);

// log of the type-class probability under iid p: multinomial * prod p^n;
// -inf when the type charges an outcome of zero weight.
double log_type_prob(const ProbMeasure& p, const TypeVector& t);

// The empirical measure counts / N.
ProbMeasure type_to_empirical(const SpacePtr& space, const TypeVector& t);

// Streaming log-sum-exp accumulator for type sweeps.
class LogAccumulator {
 public:
  void add(double log_term);
  double log_total() const;
  bool empty() const { return empty_; }

 private:
  double max_ = 0.0;
  double sum_ = 0.0;
  bool empty_ = true;
};

}  // namespace entropics
