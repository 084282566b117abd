#include "entropics/fluctuation.hpp"

#include <algorithm>
#include <cmath>

#include "entropics/divergence.hpp"
#include "entropics/errors.hpp"

namespace entropics {

namespace {

constexpr double kMergeTol = 1e-9;

}  // namespace

Involution make_involution(const SpacePtr& space, std::vector<std::size_t> perm) {
  if (!space) throw InvalidInput("involution needs a space");
  if (perm.size() != space->size())
    throw InvalidInput("permutation length does not match the space");
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= perm.size()) throw InvalidInput("permutation entry out of range");
    if (perm[perm[i]] != i)
      throw InvalidInput("the map must be an involution: perm[perm[i]] = i");
  }
  return Involution{std::move(perm)};
}

ProbMeasure involution_push(const ProbMeasure& p, const Involution& theta) {
  if (theta.perm.size() != p.size())
    throw SpaceMismatch("involution does not match the measure's space");
  std::vector<double> w(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) w[i] = p.weight(theta.perm[i]);
  return ProbMeasure(p.space(), std::move(w));
}

EpDistribution ep_distribution(const ProbMeasure& p, const Involution& theta) {
  if (theta.perm.size() != p.size())
    throw SpaceMismatch("involution does not match the measure's space");
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.weight(i) > 0.0 && p.weight(theta.perm[i]) <= 0.0)
      throw SupportNotInvariant("the involution must preserve the support of p");
  std::vector<EpAtom> raw;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.weight(i) <= 0.0) continue;
    raw.push_back({std::log(p.weight(i)) - std::log(p.weight(theta.perm[i])),
                   p.weight(i)});
  }
  std::sort(raw.begin(), raw.end(),
            [](const EpAtom& a, const EpAtom& b) { return a.s < b.s; });
  EpDistribution dist;
  for (const EpAtom& a : raw) {
    if (!dist.atoms.empty() && a.s - dist.atoms.back().s <= kMergeTol) {
      EpAtom& last = dist.atoms.back();
      // probability-weighted merge keeps the representative s symmetric
      last.s = (last.s * last.prob + a.s * a.prob) / (last.prob + a.prob);
      last.prob += a.prob;
    } else {
      dist.atoms.push_back(a);
    }
  }
  return dist;
}

double fluctuation_check(const EpDistribution& dist) {
  double worst = 0.0;
  for (const EpAtom& a : dist.atoms) {
    double q_neg = 0.0;
    // locate the atom at -s, if any
    auto it = std::lower_bound(
        dist.atoms.begin(), dist.atoms.end(), -a.s - 2.0 * kMergeTol,
        [](const EpAtom& x, double v) { return x.s < v; });
    for (; it != dist.atoms.end() && it->s <= -a.s + 2.0 * kMergeTol; ++it)
      q_neg += it->prob;
    worst = std::max(worst, std::abs(q_neg - std::exp(-a.s) * a.prob));
  }
  return worst;
}

double renyi_symmetry_check(const ProbMeasure& p, const Involution& theta,
                            const std::vector<double>& alpha_grid) {
  ProbMeasure image = involution_push(p, theta);
  double worst = 0.0;
  for (double a : alpha_grid) {
    double d = std::abs(renyi_divergence_cgf(p, image, a) -
                        renyi_divergence_cgf(p, image, 1.0 - a));
    worst = std::max(worst, d);
  }
  return worst;
}

}  // namespace entropics
