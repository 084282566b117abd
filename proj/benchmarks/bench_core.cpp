#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "entropics/cgf.hpp"
#include "entropics/coding.hpp"
#include "entropics/divergence.hpp"
#include "entropics/entropy.hpp"
#include "entropics/estimation.hpp"
#include "entropics/family.hpp"
#include "entropics/fisher.hpp"
#include "entropics/measure.hpp"
#include "entropics/numeric.hpp"
#include "entropics/testing.hpp"

namespace {

using namespace entropics;

SpacePtr space_of(int l) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) labels.push_back(std::to_string(i));
  return OutcomeSpace::make(std::move(labels));
}

ProbMeasure random_measure(const SpacePtr& space, std::uint64_t seed) {
  num::Rng rng(seed);
  std::vector<double> w(space->size());
  double tot = 0.0;
  for (auto& x : w) {
    x = -std::log(1.0 - rng.uniform());
    tot += x;
  }
  for (auto& x : w) x /= tot;
  return {space, std::move(w)};
}

void bm_shannon_entropy_64(benchmark::State& state) {
  const auto p = random_measure(space_of(64), 1);
  for (auto _ : state) benchmark::DoNotOptimize(shannon_entropy(p));
}
BENCHMARK(bm_shannon_entropy_64);

void bm_kl_divergence_64(benchmark::State& state) {
  const auto s = space_of(64);
  const auto p = random_measure(s, 1);
  const auto q = random_measure(s, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kl_divergence(p, q));
}
BENCHMARK(bm_kl_divergence_64);

void bm_cramer_exact_log_N400(benchmark::State& state) {
  const auto s = space_of(2);
  const CgfModel model(ProbMeasure(s, {0.5, 0.5}), RandomVar(s, {-1.0, 1.0}));
  for (auto _ : state)
    benchmark::DoNotOptimize(cramer_exact_log(model, 400, 0.5, 1.0));
}
BENCHMARK(bm_cramer_exact_log_N400);

void bm_stein_exponent_N200(benchmark::State& state) {
  const auto s = space_of(2);
  const ProbMeasure p(s, {0.5, 0.5}), q(s, {0.9, 0.1});
  for (auto _ : state) benchmark::DoNotOptimize(stein_exponent(p, q, 0.5, 200));
}
BENCHMARK(bm_stein_exponent_N200);

void bm_covering_exponent_N100(benchmark::State& state) {
  const auto s = space_of(2);
  const ProbMeasure p(s, {0.25, 0.75});
  for (auto _ : state) benchmark::DoNotOptimize(covering_exponent(p, 100, 0.5));
}
BENCHMARK(bm_covering_exponent_N100);

void bm_mle_bernoulli(benchmark::State& state) {
  const auto fam = bernoulli_family(0.1, 0.9);
  std::vector<std::size_t> sample;
  num::Rng rng(3);
  for (int i = 0; i < 256; ++i) sample.push_back(rng.uniform() < 0.6 ? 1 : 0);
  for (auto _ : state) benchmark::DoNotOptimize(mle(fam, sample));
}
BENCHMARK(bm_mle_bernoulli);

void bm_path_energy_bernoulli(benchmark::State& state) {
  const auto fam = bernoulli_family(1.0 / 3.0, 2.0 / 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(path_energy(fam));
}
BENCHMARK(bm_path_energy_bernoulli);

}  // namespace

BENCHMARK_MAIN();
