#pragma once

// Hand-rolled random generators for property tests. Everything derives from
// entropics::num::Rng so suites are reproducible across platforms.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "entropics/measure.hpp"
#include "entropics/numeric.hpp"
#include "entropics/space.hpp"

namespace testgen {

using entropics::num::Rng;

inline int int_in(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.next() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline double real_in(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * rng.uniform();
}

// Flat Dirichlet point via exponential spacings; floor_mass bounds every
// coordinate away from zero (needs floor_mass * l < 1).
inline std::vector<double> simplex_point(Rng& rng, int l, double floor_mass = 0.0) {
  std::vector<double> w(static_cast<std::size_t>(l));
  double tot = 0.0;
  for (auto& x : w) {
    x = -std::log(1.0 - rng.uniform());
    tot += x;
  }
  for (auto& x : w) x /= tot;
  if (floor_mass > 0.0) {
    const double squeeze = 1.0 - floor_mass * static_cast<double>(l);
    for (auto& x : w) x = squeeze * x + floor_mass;
  }
  return w;
}

inline entropics::ProbMeasure measure(Rng& rng, const entropics::SpacePtr& space,
                                      double floor_mass = 0.0) {
  return {space, simplex_point(rng, static_cast<int>(space->size()), floor_mass)};
}

// Row-stochastic map with strictly positive rows, so faithful inputs have
// faithful images.
inline entropics::StochasticMap stochastic_map(Rng& rng, const entropics::SpacePtr& from,
                                               const entropics::SpacePtr& to) {
  std::vector<std::vector<double>> rows;
  rows.reserve(from->size());
  for (std::size_t i = 0; i < from->size(); ++i)
    rows.push_back(simplex_point(rng, static_cast<int>(to->size()), 1e-3));
  return {from, to, std::move(rows)};
}

inline std::vector<double> zero_sum_tangent(Rng& rng, std::size_t l) {
  std::vector<double> z(l);
  double mean = 0.0;
  for (auto& x : z) {
    x = 2.0 * rng.uniform() - 1.0;
    mean += x;
  }
  mean /= static_cast<double>(l);
  for (auto& x : z) x -= mean;
  return z;
}

// Random involution: shuffle, then pair consecutive entries (odd leftover
// stays fixed).
inline std::vector<std::size_t> involution_perm(Rng& rng, std::size_t l) {
  std::vector<std::size_t> idx(l);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = l; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.next() % i);
    std::swap(idx[i - 1], idx[j]);
  }
  std::vector<std::size_t> perm(l);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t k = 0; k + 1 < l; k += 2) {
    perm[idx[k]] = idx[k + 1];
    perm[idx[k + 1]] = idx[k];
  }
  return perm;
}

inline entropics::SpacePtr space_of(int l) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) labels.push_back(std::to_string(i));
  return entropics::OutcomeSpace::make(std::move(labels));
}

}  // namespace testgen
