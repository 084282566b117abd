#include "entropics/coding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "entropics/entropy.hpp"
#include "entropics/errors.hpp"
#include "entropics/numeric.hpp"
#include "entropics/types.hpp"

namespace entropics {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
using U128 = unsigned __int128;
constexpr U128 kU128Max = ~static_cast<U128>(0);

// Exact binomial via the multiplicative scheme; false on overflow.
bool exact_binomial(std::int64_t n, std::int64_t k, U128& out) {
  if (k < 0 || k > n) {
    out = 0;
    return true;
  }
  k = std::min(k, n - k);
  U128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    U128 num = static_cast<U128>(n - k + i);
    if (r > kU128Max / num) return false;
    r = r * num / static_cast<U128>(i);
  }
  out = r;
  return true;
}

// Multinomial coefficient as a product of binomials of partial sums.
bool exact_multinomial(const TypeVector& t, U128& out) {
  U128 r = 1;
  std::int64_t partial = 0;
  for (std::int64_t c : t.counts) {
    partial += c;
    U128 b = 0;
    if (!exact_binomial(partial, c, b)) return false;
    if (b != 0 && r > kU128Max / b) return false;
    r *= b;
  }
  out = r;
  return true;
}

struct ExactCount {
  U128 value = 0;
  bool ok = true;
  void add(U128 x) {
    if (!ok) return;
    if (value > kU128Max - x) {
      ok = false;
      return;
    }
    value += x;
  }
  bool fits_int64() const {
    return ok && value <= static_cast<U128>(std::numeric_limits<std::int64_t>::max());
  }
};

// One probability level: words sharing a per-word log-probability.
struct Level {
  double log_per_word;
  double log_count;
  U128 exact_count;
  bool exact;
};

// Groups the types of p^N into probability levels, merging per-word
// log-probabilities within relative tolerance 1e-12.
std::vector<Level> probability_levels(const ProbMeasure& p, std::int64_t n, double cap) {
  struct Row {
    double log_per_word;
    double log_mult;
    U128 mult;
    bool exact;
  };
  std::vector<Row> rows;
  std::vector<double> logp(p.size(), -kInf);
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p.weight(k) > 0.0) logp[k] = std::log(p.weight(k));
  for_each_type(static_cast<int>(p.size()), n, cap, [&](const TypeVector& t) {
    double lw = 0.0;
    for (std::size_t k = 0; k < t.counts.size(); ++k) {
      if (t.counts[k] == 0) continue;
      lw += static_cast<double>(t.counts[k]) * logp[k];
    }
    if (lw == -kInf) return;  // the whole type class has zero mass
    Row row;
    row.log_per_word = lw;
    row.log_mult = log_multinomial_coeff(t);
    row.exact = exact_multinomial(t, row.mult);
    rows.push_back(row);
  });
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.log_per_word > b.log_per_word;
  });
  std::vector<Level> levels;
  for (const Row& row : rows) {
    bool merge = !levels.empty() &&
                 std::abs(row.log_per_word - levels.back().log_per_word) <=
                     1e-12 * std::max(1.0, std::abs(levels.back().log_per_word));
    if (!merge) {
      levels.push_back({row.log_per_word, -kInf, 0, true});
    }
    Level& lv = levels.back();
    lv.log_count = num::log_add_exp(lv.log_count, row.log_mult);
    if (lv.exact && row.exact) {
      if (lv.exact_count > kU128Max - row.mult)
        lv.exact = false;
      else
        lv.exact_count += row.mult;
    } else {
      lv.exact = false;
    }
  }
  return levels;
}

}  // namespace

TypicalReport typical_set_bounds(const ProbMeasure& p, std::int64_t n, double eps,
                                 double cap) {
  if (!p.faithful()) throw FaithfulnessError("typical sets need a faithful measure");
  if (n < 1 || !(eps > 0.0)) throw InvalidInput("need n >= 1 and eps > 0");
  const double s = shannon_entropy(p);
  std::vector<double> logp(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) logp[k] = std::log(p.weight(k));

  LogAccumulator log_mass, log_count;
  ExactCount count;
  for_each_type(static_cast<int>(p.size()), n, cap, [&](const TypeVector& t) {
    double lw = 0.0;
    for (std::size_t k = 0; k < t.counts.size(); ++k) {
      if (t.counts[k] == 0) continue;
      lw += static_cast<double>(t.counts[k]) * logp[k];
    }
    double empirical_rate = -lw / static_cast<double>(n);
    if (std::abs(empirical_rate - s) >= eps) return;
    double lm = log_multinomial_coeff(t);
    log_count.add(lm);
    log_mass.add(lm + lw);
    U128 m = 0;
    if (exact_multinomial(t, m))
      count.add(m);
    else
      count.ok = false;
  });

  TypicalReport rep;
  rep.n = n;
  rep.eps = eps;
  rep.log_count = log_count.log_total();
  rep.mass = std::exp(log_mass.log_total());
  rep.count_exact = count.fits_int64();
  rep.count = rep.count_exact ? static_cast<std::int64_t>(count.value) : 0;
  double nd = static_cast<double>(n);
  rep.sandwich_ok = (log_mass.log_total() + nd * (s - eps) < rep.log_count) &&
                    (rep.log_count < nd * (s + eps));
  return rep;
}

CoveringReport covering_exponent(const ProbMeasure& p, std::int64_t n, double gamma,
                                 double cap) {
  if (n < 1 || !(gamma > 0.0 && gamma < 1.0))
    throw InvalidInput("need n >= 1 and gamma in (0,1)");
  std::vector<Level> levels = probability_levels(p, n, cap);

  long double mass = 0.0L;
  LogAccumulator log_count;
  ExactCount count;
  for (const Level& lv : levels) {
    double log_level_mass = lv.log_count + lv.log_per_word;
    long double level_mass = expl(static_cast<long double>(log_level_mass));
    if (mass + level_mass < static_cast<long double>(gamma)) {
      mass += level_mass;
      log_count.add(lv.log_count);
      if (lv.exact)
        count.add(lv.exact_count);
      else
        count.ok = false;
      continue;
    }
    // This level crosses gamma: take only the words still needed.
    long double needed = static_cast<long double>(gamma) - mass;
    long double per_word = expl(static_cast<long double>(lv.log_per_word));
    long double k = ceill(needed / per_word);
    if (k < 1.0L) k = 1.0L;
    double log_k = static_cast<double>(logl(k));
    log_count.add(log_k);
    if (k <= 9.2e18L)
      count.add(static_cast<U128>(k));
    else
      count.ok = false;
    mass += k * per_word;
    break;
  }

  CoveringReport rep;
  rep.n = n;
  rep.gamma = gamma;
  rep.log_c_n = log_count.log_total();
  rep.c_exact = count.fits_int64();
  rep.c_n = rep.c_exact ? static_cast<std::int64_t>(count.value) : 0;
  rep.normalized = rep.log_c_n / static_cast<double>(n);
  rep.entropy_target = shannon_entropy(p);
  rep.mass_achieved = static_cast<double>(mass);
  return rep;
}

std::int64_t source_coding_optimum(const ProbMeasure& p, std::int64_t n, double eps,
                                   double cap) {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidInput("need eps in (0,1)");
  CoveringReport rep = covering_exponent(p, n, 1.0 - eps, cap);
  if (rep.c_exact) {
    U128 c = static_cast<U128>(rep.c_n);
    std::int64_t m = 0;
    while (c > 1) {
      c >>= 1;
      ++m;
    }
    return m;
  }
  double bits = rep.log_c_n / std::log(2.0);
  // Snap near-integer values before flooring so exact powers of two survive
  // the log-domain path.
  double rounded = std::round(bits);
  if (std::abs(bits - rounded) < 1e-9) bits = rounded;
  return static_cast<std::int64_t>(std::floor(bits));
}

}  // namespace entropics
