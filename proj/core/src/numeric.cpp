#include "entropics/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <thread>

#include "entropics/errors.hpp"

namespace entropics::num {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

double xlogy(double x, double y) {
  if (x == 0.0) return 0.0;
  return x * std::log(y);
}

double log_sum_exp(std::span<const double> v) {
  double m = -kInf;
  for (double x : v) m = std::max(m, x);
  if (!(m > -kInf)) return -kInf;
  if (m == kInf) return kInf;
  double s = 0.0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

double log_add_exp(double a, double b) {
  if (a < b) std::swap(a, b);
  if (!(a > -kInf)) return -kInf;
  return a + std::log1p(std::exp(b - a));
}

double log_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return -kInf;
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

double log_multinomial(std::span<const std::int64_t> counts) {
  std::int64_t n = 0;
  double denom = 0.0;
  for (std::int64_t c : counts) {
    n += c;
    denom += std::lgamma(static_cast<double>(c) + 1.0);
  }
  return std::lgamma(static_cast<double>(n) + 1.0) - denom;
}

double bisect_increasing(const std::function<double(double)>& f, double lo, double hi,
                         double x_tol) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo > 0.0 || fhi < 0.0)
    throw RootNonConvergence("bisection bracket does not enclose a sign change");
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  while (true) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;           // floating fixpoint
    if (x_tol > 0.0 && hi - lo <= x_tol) break;
    double fm = f(mid);
    if (fm == 0.0) return mid;
    (fm < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double golden_min(const std::function<double(double)>& f, double a, double b, double tol) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    if (!(c < d)) break;  // interval collapsed to rounding
  }
  return 0.5 * (a + b);
}

namespace {
double simpson_fixed(const std::function<double(double)>& f, double a, double b, long n) {
  double h = (b - a) / static_cast<double>(n);
  double odd = 0.0, even = 0.0;
  for (long i = 1; i < n; i += 2) odd += f(a + h * static_cast<double>(i));
  for (long i = 2; i < n; i += 2) even += f(a + h * static_cast<double>(i));
  return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}
}  // namespace

double simpson_doubling(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, int panels, long max_panels) {
  if (a == b) return 0.0;
  long n = panels;
  double prev = simpson_fixed(f, a, b, n);
  while (n <= max_panels) {
    n *= 2;
    double cur = simpson_fixed(f, a, b, n);
    double scale = std::max({std::abs(cur), std::abs(prev), 1e-300});
    if (std::abs(cur - prev) <= rel_tol * scale) return cur;
    prev = cur;
  }
  throw QuadratureNonConvergence("composite Simpson did not converge within the panel cap");
}

std::vector<double> fornberg_weights(std::span<const double> nodes, double x0, int order) {
  // Fornberg's recursion for finite-difference weights on arbitrary nodes.
  const int n = static_cast<int>(nodes.size()) - 1;
  const int m = order;
  std::vector<std::vector<std::vector<double>>> d(
      static_cast<std::size_t>(n + 1),
      std::vector<std::vector<double>>(static_cast<std::size_t>(n + 1),
                                       std::vector<double>(static_cast<std::size_t>(m + 1), 0.0)));
  d[0][0][0] = 1.0;
  double c1 = 1.0;
  for (int i = 1; i <= n; ++i) {
    double c2 = 1.0;
    for (int j = 0; j < i; ++j) {
      double c3 = nodes[static_cast<std::size_t>(i)] - nodes[static_cast<std::size_t>(j)];
      c2 *= c3;
      for (int k = 0; k <= std::min(i, m); ++k) {
        double prev_k = d[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]
                         [static_cast<std::size_t>(k)];
        double prev_km1 =
            k > 0 ? d[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]
                     [static_cast<std::size_t>(k - 1)]
                  : 0.0;
        d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
            ((nodes[static_cast<std::size_t>(i)] - x0) * prev_k - static_cast<double>(k) * prev_km1) / c3;
      }
    }
    for (int k = 0; k <= std::min(i, m); ++k) {
      double prev_k = d[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)]
                       [static_cast<std::size_t>(k)];
      double prev_km1 =
          k > 0 ? d[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)]
                   [static_cast<std::size_t>(k - 1)]
                : 0.0;
      d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
          c1 / c2 *
          (static_cast<double>(k) * prev_km1 - (nodes[static_cast<std::size_t>(i - 1)] - x0) * prev_k);
    }
    c1 = c2;
  }
  std::vector<double> w(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j)
    w[j] = d[static_cast<std::size_t>(n)][j][static_cast<std::size_t>(m)];
  return w;
}

double richardson(std::span<const double> samples) {
  std::vector<double> a(samples.begin(), samples.end());
  const std::size_t n = a.size();
  for (std::size_t j = 1; j < n; ++j) {
    double factor = std::pow(2.0, static_cast<double>(j));
    for (std::size_t i = 0; i + j < n; ++i)
      a[i] = (factor * a[i + 1] - a[i]) / (factor - 1.0);
  }
  return a.empty() ? 0.0 : a[0];
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over (seed, stream); decorrelates adjacent streams.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  std::size_t threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  threads = std::min(threads, n);
  if (threads == 1) {
    fn(0, n);
    return;
  }
  std::size_t chunk = (n + threads - 1) / threads;
  std::vector<std::future<void>> futs;
  futs.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    std::size_t begin = t * chunk;
    std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    futs.push_back(std::async(std::launch::async, [&fn, begin, end] { fn(begin, end); }));
  }
  for (auto& f : futs) f.get();
}

}  // namespace entropics::num
