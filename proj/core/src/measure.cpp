#include "entropics/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "entropics/errors.hpp"

namespace entropics {

Measure::Measure(SpacePtr space, std::vector<double> weights)
    : space_(std::move(space)), w_(std::move(weights)) {
  if (w_.size() != space_->size())
    throw InvalidInput("weight count does not match outcome count");
  for (double w : w_) {
    if (!(w >= 0.0)) throw InvalidInput("measure weights must be non-negative");
  }
}

double Measure::total() const {
  double s = 0.0;
  for (double w : w_) s += w;
  return s;
}

std::vector<int> Measure::support() const {
  std::vector<int> s;
  for (std::size_t k = 0; k < w_.size(); ++k)
    if (w_[k] > 0.0) s.push_back(static_cast<int>(k));
  return s;
}

double Measure::mass_of(std::span<const int> outcomes) const {
  double s = 0.0;
  for (int k : outcomes) s += w_[static_cast<std::size_t>(k)];
  return s;
}

ProbMeasure::ProbMeasure(SpacePtr space, std::vector<double> weights)
    : Measure(std::move(space), std::move(weights)) {
  double s = total();
  if (std::abs(s - 1.0) > 1e-12)
    throw InvalidInput("probability weights sum to " + std::to_string(s) + ", not 1");
  for (double& w : w_) w /= s;
}

ProbMeasure ProbMeasure::chaotic(SpacePtr space) {
  std::vector<double> w(space->size(), 1.0 / static_cast<double>(space->size()));
  return ProbMeasure(std::move(space), std::move(w));
}

ProbMeasure ProbMeasure::pure(SpacePtr space, std::size_t outcome) {
  std::vector<double> w(space->size(), 0.0);
  w.at(outcome) = 1.0;
  return ProbMeasure(std::move(space), std::move(w));
}

bool ProbMeasure::faithful() const {
  return std::all_of(w_.begin(), w_.end(), [](double w) { return w > 0.0; });
}

RandomVar::RandomVar(SpacePtr space, std::vector<double> values)
    : space_(std::move(space)), v_(std::move(values)) {
  if (v_.size() != space_->size())
    throw InvalidInput("value count does not match outcome count");
}

double RandomVar::expectation(const ProbMeasure& p) const {
  require_same_space(*space_, *p.space());
  double s = 0.0;
  for (std::size_t k = 0; k < v_.size(); ++k)
    if (p.weight(k) > 0.0) s += p.weight(k) * v_[k];
  return s;
}

StochasticMap::StochasticMap(SpacePtr from, SpacePtr to, std::vector<std::vector<double>> rows)
    : from_(std::move(from)), to_(std::move(to)), rows_(std::move(rows)) {
  if (rows_.size() != from_->size()) throw InvalidInput("stochastic map needs one row per input outcome");
  for (auto& row : rows_) {
    if (row.size() != to_->size()) throw InvalidInput("stochastic map row width does not match target space");
    double s = 0.0;
    for (double x : row) {
      if (!(x >= 0.0)) throw InvalidInput("stochastic map entries must be non-negative");
      s += x;
    }
    if (std::abs(s - 1.0) > 1e-12)
      throw InvalidInput("stochastic map row sums to " + std::to_string(s) + ", not 1");
    for (double& x : row) x /= s;
  }
}

StochasticMap StochasticMap::identity(SpacePtr space) {
  std::vector<std::vector<double>> rows(space->size(), std::vector<double>(space->size(), 0.0));
  for (std::size_t k = 0; k < space->size(); ++k) rows[k][k] = 1.0;
  SpacePtr to = space;
  return StochasticMap(std::move(space), std::move(to), std::move(rows));
}

ProbMeasure StochasticMap::apply(const ProbMeasure& p) const {
  require_same_space(*from_, *p.space());
  std::vector<double> out(to_->size(), 0.0);
  for (std::size_t i = 0; i < from_->size(); ++i) {
    if (p.weight(i) == 0.0) continue;
    for (std::size_t j = 0; j < to_->size(); ++j) out[j] += p.weight(i) * rows_[i][j];
  }
  return ProbMeasure(to_, std::move(out));
}

std::vector<double> StochasticMap::apply_tangent(std::span<const double> zeta) const {
  if (zeta.size() != from_->size()) throw InvalidInput("tangent size does not match map input space");
  std::vector<double> out(to_->size(), 0.0);
  for (std::size_t i = 0; i < from_->size(); ++i)
    for (std::size_t j = 0; j < to_->size(); ++j) out[j] += zeta[i] * rows_[i][j];
  return out;
}

bool StochasticMap::doubly_stochastic(double tol) const {
  if (from_->size() != to_->size()) return false;
  for (std::size_t j = 0; j < to_->size(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < from_->size(); ++i) s += rows_[i][j];
    if (std::abs(s - 1.0) > tol) return false;
  }
  return true;
}

RandomVar radon_nikodym(const Measure& p, const Measure& q) {
  require_same_space(*p.space(), *q.space());
  std::vector<double> v(p.size(), 0.0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p.weight(k) > 0.0) {
      if (q.weight(k) == 0.0)
        throw AbsContViolation("measure puts weight on " + p.space()->label(k) +
                               " where the reference vanishes");
      v[k] = p.weight(k) / q.weight(k);
    }
  }
  return RandomVar(p.space(), std::move(v));
}

std::pair<Measure, Measure> lebesgue_decompose(const Measure& m, const Measure& rho) {
  require_same_space(*m.space(), *rho.space());
  std::vector<double> ac(m.size(), 0.0), sing(m.size(), 0.0);
  for (std::size_t k = 0; k < m.size(); ++k)
    (rho.weight(k) > 0.0 ? ac[k] : sing[k]) = m.weight(k);
  return {Measure(m.space(), std::move(ac)), Measure(m.space(), std::move(sing))};
}

double variational_distance(const ProbMeasure& p, const ProbMeasure& q) {
  require_same_space(*p.space(), *q.space());
  double s = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) s += std::abs(p.weight(k) - q.weight(k));
  return s;
}

std::pair<ProbMeasure, ProbMeasure> marginals(const ProbMeasure& p) {
  const auto& space = *p.space();
  if (!space.is_product())
    throw NotAProductSpace("marginals need a space declared as a 2-fold product");
  const auto& l = space.left();
  const auto& r = space.right();
  std::vector<double> wl(l->size(), 0.0), wr(r->size(), 0.0);
  for (std::size_t i = 0; i < l->size(); ++i)
    for (std::size_t j = 0; j < r->size(); ++j) {
      double w = p.weight(i * r->size() + j);
      wl[i] += w;
      wr[j] += w;
    }
  return {ProbMeasure(l, std::move(wl)), ProbMeasure(r, std::move(wr))};
}

ProbMeasure product(const ProbMeasure& p, const ProbMeasure& q) {
  SpacePtr space = OutcomeSpace::product(p.space(), q.space());
  std::vector<double> w;
  w.reserve(p.size() * q.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) w.push_back(p.weight(i) * q.weight(j));
  return ProbMeasure(std::move(space), std::move(w));
}

Measure push_forward(const Measure& m, std::span<const int> target_of, SpacePtr target) {
  if (target_of.size() != m.size()) throw InvalidInput("pushforward map must be total on the source space");
  std::vector<double> w(target->size(), 0.0);
  for (std::size_t k = 0; k < m.size(); ++k) {
    int t = target_of[k];
    if (t < 0 || static_cast<std::size_t>(t) >= target->size())
      throw InvalidInput("pushforward target index out of range");
    w[static_cast<std::size_t>(t)] += m.weight(k);
  }
  return Measure(std::move(target), std::move(w));
}

ProbMeasure push_forward(const ProbMeasure& p, std::span<const int> target_of, SpacePtr target) {
  Measure m = push_forward(static_cast<const Measure&>(p), target_of, std::move(target));
  return ProbMeasure(m.space(), m.weights());
}

ProbMeasure mix(std::span<const double> weights, std::span<const ProbMeasure> components) {
  if (weights.size() != components.size() || components.empty())
    throw InvalidInput("mixture needs matching weights and components");
  const auto& space = components[0].space();
  std::vector<double> w(space->size(), 0.0);
  for (std::size_t i = 0; i < components.size(); ++i) {
    require_same_space(*space, *components[i].space());
    for (std::size_t k = 0; k < w.size(); ++k) w[k] += weights[i] * components[i].weight(k);
  }
  return ProbMeasure(space, std::move(w));
}

double iid_log_prob(const ProbMeasure& p, std::span<const int> word) {
  double s = 0.0;
  for (int k : word) {
    double w = p.weight(static_cast<std::size_t>(k));
    if (w == 0.0) return -std::numeric_limits<double>::infinity();
    s += std::log(w);
  }
  return s;
}

std::pair<SpacePtr, ProbMeasure> materialize_iid(const ProbMeasure& p, std::int64_t n, double cap) {
  ProductIndex idx(p.space(), n);
  if (idx.count() > cap)
    throw EnumerationCapExceeded("product space of " + std::to_string(idx.count()) +
                                 " atoms exceeds the enumeration cap");
  const std::uint64_t total = idx.exact_count();
  std::vector<std::string> labels;
  std::vector<double> weights;
  labels.reserve(total);
  weights.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) {
    auto word = idx.decode(i);
    std::string label;
    double w = 1.0;
    for (int k : word) {
      if (!label.empty()) label += ",";
      label += p.space()->label(static_cast<std::size_t>(k));
      w *= p.weight(static_cast<std::size_t>(k));
    }
    labels.push_back(std::move(label));
    weights.push_back(w);
  }
  SpacePtr space = OutcomeSpace::make(std::move(labels));
  return {space, ProbMeasure(space, std::move(weights))};
}

}  // namespace entropics
