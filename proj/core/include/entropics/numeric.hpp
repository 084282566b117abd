#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace entropics::num {

// 0 log 0 = 0 convention.
double xlogx(double x);
// x log y with the x=0 convention; x>0, y=0 gives -inf.
double xlogy(double x, double y);

// Max-shifted log(sum(exp(v))); empty input gives -inf.
double log_sum_exp(std::span<const double> v);
double log_add_exp(double a, double b);

double log_binomial(std::int64_t n, std::int64_t k);
double log_multinomial(std::span<const std::int64_t> counts);

// Root of an increasing function on [lo, hi] with f(lo) <= 0 <= f(hi).
// x_tol <= 0 runs the bisection to the floating-point fixpoint.
double bisect_increasing(const std::function<double(double)>& f, double lo, double hi,
                         double x_tol = 0.0);

// Minimum of a unimodal function on [a, b] to interval width tol.
double golden_min(const std::function<double(double)>& f, double a, double b, double tol);

// Composite Simpson, panel count doubled from `panels` until the relative
// change is below rel_tol; throws QuadratureNonConvergence past max_panels.
double simpson_doubling(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-8, int panels = 256,
                        long max_panels = (1L << 20));

// Finite-difference weights for the m-th derivative at x0 on the given nodes.
std::vector<double> fornberg_weights(std::span<const double> nodes, double x0, int order);

// Richardson extrapolation for samples f(e0), f(e0/2), f(e0/4), ... of a
// function with a power-series error expansion in e; returns the top estimate.
double richardson(std::span<const double> samples);

// Deterministic 64-bit stream derivation: replica substreams of a master seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  static Rng substream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(mix_seed(seed, stream));
  }
  std::uint64_t next() { return eng_(); }
  // Uniform in [0, 1) with 53-bit resolution; identical across platforms.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 eng_;
};

// Runs fn(begin, end) over a partition of [0, n); chunks join in index order,
// so results written to per-index slots are scheduling-independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace entropics::num
