#include "entropics/entropy.hpp"

#include <cmath>
#include <limits>

#include "entropics/errors.hpp"
#include "entropics/numeric.hpp"

namespace entropics {

double shannon_entropy(const ProbMeasure& p) {
  double s = 0.0;
  for (double w : p.weights()) s -= num::xlogx(w);
  return s;
}

RandomVar entropy_function(const ProbMeasure& p) {
  std::vector<double> v(p.size());
  for (std::size_t k = 0; k < p.size(); ++k)
    v[k] = p.weight(k) > 0.0 ? -std::log(p.weight(k))
                             : std::numeric_limits<double>::infinity();
  return RandomVar(p.space(), std::move(v));
}

double hartley_entropy(const ProbMeasure& p) {
  return std::log(static_cast<double>(p.support().size()));
}

double renyi_entropy(const ProbMeasure& p, double alpha) {
  if (alpha == 1.0) return shannon_entropy(p);
  if (alpha == 0.0) return hartley_entropy(p);
  double s = 0.0;
  for (double w : p.weights())
    if (w > 0.0) s += std::pow(w, alpha);
  return std::log(s) / (1.0 - alpha);
}

double renyi_cgf(const ProbMeasure& p, double alpha) {
  if (!p.faithful())
    throw FaithfulnessError("extended Renyi entropy needs a faithful measure");
  double s = 0.0;
  for (double w : p.weights()) s += std::pow(w, 1.0 - alpha);
  return std::log(s);
}

ConditionalDecomposition conditional_decomposition(const ProbMeasure& p) {
  const auto& space = *p.space();
  if (!space.is_product())
    throw NotAProductSpace("conditional decomposition needs a 2-fold product space");
  auto [pl, pr] = marginals(p);
  const std::size_t lr = pr.size();
  double cond = 0.0;
  for (std::size_t i = 0; i < pl.size(); ++i) {
    if (pl.weight(i) == 0.0) continue;
    double s = 0.0;
    for (std::size_t j = 0; j < lr; ++j) {
      double c = p.weight(i * lr + j) / pl.weight(i);
      s -= num::xlogx(c);
    }
    cond += pl.weight(i) * s;
  }
  return {shannon_entropy(p), shannon_entropy(pl), cond};
}

}  // namespace entropics
