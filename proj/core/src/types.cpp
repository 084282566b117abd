#include "entropics/types.hpp"

#include <cmath>
#include <limits>

#include "entropics/errors.hpp"
#include "entropics/numeric.hpp"

namespace entropics {

double composition_count(int l, std::int64_t n) {
  if (l < 1 || n < 0) throw InvalidInput("composition_count needs l >= 1, n >= 0");
  // C(n+l-1, l-1) by the stepwise-exact product; each division is exact
  // because the running value is itself a binomial coefficient.
  unsigned __int128 r = 1;
  const unsigned __int128 kMax = ~static_cast<unsigned __int128>(0);
  for (std::int64_t i = 1; i < l; ++i) {
    const auto f = static_cast<unsigned __int128>(n + i);
    if (r > kMax / f)
      return std::exp(num::log_binomial(static_cast<double>(n) + l - 1, l - 1));
    r = r * f / static_cast<unsigned __int128>(i);
  }
  return static_cast<double>(r);
}

void for_each_type(int l, std::int64_t n, double cap,
                   const std::function<void(const TypeVector&)>& fn) {
  if (composition_count(l, n) > cap)
    throw EnumerationCapExceeded("type enumeration exceeds cap");
  TypeVector t;
  t.counts.assign(static_cast<std::size_t>(l), 0);
  t.total = n;
  // counts[k] runs fastest in the last slot; slot 0 is most significant, so
  // the visit order is lexicographic ascending.
  std::function<void(int, std::int64_t)> rec = [&](int slot, std::int64_t left) {
    if (slot == l - 1) {
      t.counts[static_cast<std::size_t>(slot)] = left;
      fn(t);
      return;
    }
    for (std::int64_t c = 0; c <= left; ++c) {
      t.counts[static_cast<std::size_t>(slot)] = c;
      rec(slot + 1, left - c);
    }
  };
  rec(0, n);
}

double log_multinomial_coeff(const TypeVector& t) {
  return num::log_multinomial(t.counts);
}

double log_type_prob(const ProbMeasure& p, const TypeVector& t) {
  if (t.counts.size() != p.size())
    throw SpaceMismatch("type length does not match alphabet size");
  double lp = log_multinomial_coeff(t);
  for (std::size_t k = 0; k < t.counts.size(); ++k) {
    if (t.counts[k] == 0) continue;
    if (p.weight(k) <= 0.0) return -std::numeric_limits<double>::infinity();
    lp += static_cast<double>(t.counts[k]) * std::log(p.weight(k));
  }
  return lp;
}

ProbMeasure type_to_empirical(const SpacePtr& space, const TypeVector& t) {
  if (t.total <= 0) throw InvalidInput("empty type has no empirical measure");
  std::vector<double> w(t.counts.size());
  for (std::size_t k = 0; k < t.counts.size(); ++k)
    w[k] = static_cast<double>(t.counts[k]) / static_cast<double>(t.total);
  return ProbMeasure(space, std::move(w));
}

void LogAccumulator::add(double log_term) {
  if (log_term == -std::numeric_limits<double>::infinity()) return;
  if (empty_) {
    max_ = log_term;
    sum_ = 1.0;
    empty_ = false;
    return;
  }
  if (log_term <= max_) {
    sum_ += std::exp(log_term - max_);
  } else {
    sum_ = sum_ * std::exp(max_ - log_term) + 1.0;
    max_ = log_term;
  }
}

double LogAccumulator::log_total() const {
  if (empty_) return -std::numeric_limits<double>::infinity();
  return max_ + std::log(sum_);
}

}  // namespace entropics
