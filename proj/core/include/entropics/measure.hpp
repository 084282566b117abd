#pragma once

#include <span>
#include <utility>
#include <vector>

#include "entropics/space.hpp"

namespace entropics {

class Measure {
 public:
  Measure(SpacePtr space, std::vector<double> weights);

  const SpacePtr& space() const { return space_; }
  std::size_t size() const { return w_.size(); }
  double weight(std::size_t k) const { return w_[k]; }
  const std::vector<double>& weights() const { return w_; }

  double total() const;
  // Indices with weight strictly > 0 (exact comparison).
  std::vector<int> support() const;
  double mass_of(std::span<const int> outcomes) const;

 protected:
  SpacePtr space_;
  std::vector<double> w_;
};

class ProbMeasure : public Measure {
 public:
  // Accepts weights summing to 1 within 1e-12, then renormalizes exactly.
  ProbMeasure(SpacePtr space, std::vector<double> weights);

  static ProbMeasure chaotic(SpacePtr space);
  static ProbMeasure pure(SpacePtr space, std::size_t outcome);

  bool faithful() const;
};

class RandomVar {
 public:
  RandomVar(SpacePtr space, std::vector<double> values);

  const SpacePtr& space() const { return space_; }
  std::size_t size() const { return v_.size(); }
  double value(std::size_t k) const { return v_[k]; }
  const std::vector<double>& values() const { return v_; }

  // Support-restricted expectation: the 0 * inf = 0 convention is enforced
  // by summing over supp p only.
  double expectation(const ProbMeasure& p) const;

 private:
  SpacePtr space_;
  std::vector<double> v_;
};

class StochasticMap {
 public:
  // Each row must sum to 1 within 1e-12; rows are renormalized on storage.
  StochasticMap(SpacePtr from, SpacePtr to, std::vector<std::vector<double>> rows);

  static StochasticMap identity(SpacePtr space);

  const SpacePtr& from() const { return from_; }
  const SpacePtr& to() const { return to_; }
  double entry(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }

  ProbMeasure apply(const ProbMeasure& p) const;
  // Linear action on a tangent vector (no normalization).
  std::vector<double> apply_tangent(std::span<const double> zeta) const;
  bool doubly_stochastic(double tol = 1e-12) const;

 private:
  SpacePtr from_;
  SpacePtr to_;
  std::vector<std::vector<double>> rows_;
};

RandomVar radon_nikodym(const Measure& p, const Measure& q);
std::pair<Measure, Measure> lebesgue_decompose(const Measure& m, const Measure& rho);
double variational_distance(const ProbMeasure& p, const ProbMeasure& q);
std::pair<ProbMeasure, ProbMeasure> marginals(const ProbMeasure& p);
ProbMeasure product(const ProbMeasure& p, const ProbMeasure& q);
Measure push_forward(const Measure& m, std::span<const int> target_of, SpacePtr target);
ProbMeasure push_forward(const ProbMeasure& p, std::span<const int> target_of, SpacePtr target);
ProbMeasure mix(std::span<const double> weights, std::span<const ProbMeasure> components);

// log P_N(word) for the iid product of p.
double iid_log_prob(const ProbMeasure& p, std::span<const int> word);
// Materializes (Omega^N, P_N); throws EnumerationCapExceeded past the cap.
std::pair<SpacePtr, ProbMeasure> materialize_iid(const ProbMeasure& p, std::int64_t n,
                                                 double cap = 1e7);

}  // namespace entropics
