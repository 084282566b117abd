#pragma once

#include <cstdint>

#include "entropics/measure.hpp"

namespace entropics {

// Exact census of the eps-typical set T = {words: |-(1/N)log P_N - S(P)| < eps}.
struct TypicalReport {
  std::int64_t n = 0;
  double eps = 0.0;
  double mass = 0.0;       // P_N(T)
  double log_count = 0.0;  // log |T|
  bool count_exact = false;
  std::int64_t count = 0;  // valid when count_exact
  // P_N(T) e^{N(S-eps)} < |T| < e^{N(S+eps)}, checked in log domain.
  bool sandwich_ok = false;
};

TypicalReport typical_set_bounds(const ProbMeasure& p, std::int64_t n, double eps,
                                 double cap = 1e7);

// Minimal number of highest-probability words whose total mass reaches gamma.
struct CoveringReport {
  std::int64_t n = 0;
  double gamma = 0.0;
  double log_c_n = 0.0;
  bool c_exact = false;
  std::int64_t c_n = 0;    // valid when c_exact
  double normalized = 0.0; // (1/N) log c_N
  double entropy_target = 0.0;
  double mass_achieved = 0.0;
};

CoveringReport covering_exponent(const ProbMeasure& p, std::int64_t n, double gamma,
                                 double cap = 1e7);

// Optimal fixed-length code size M_N = floor(log2 c_N(1-eps)).
std::int64_t source_coding_optimum(const ProbMeasure& p, std::int64_t n, double eps,
                                   double cap = 1e7);

}  // namespace entropics
