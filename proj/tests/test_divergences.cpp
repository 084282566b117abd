#include <cmath>
#include <limits>
#include <vector>

#include "checks.hpp"
#include "doctest.h"
#include "entropics/divergence.hpp"
#include "entropics/errors.hpp"
#include "entropics/measure.hpp"
#include "generators.hpp"

using namespace entropics;

namespace {
const double kInf = std::numeric_limits<double>::infinity();

ProbMeasure coin(double w0) {
  return {OutcomeSpace::make({"0", "1"}), {w0, 1.0 - w0}};
}
}  // namespace

TEST_CASE("relative entropy matches closed forms and detects singular parts") {
  const auto s = OutcomeSpace::make({"0", "1"});
  CHECK_NEAR(kl_divergence(coin(0.5), coin(0.25)), 0.14384103622589046, 1e-15);
  CHECK_NEAR(kl_divergence(coin(0.5), coin(0.9)), 0.5108256237659907, 1e-15);  // log(5/3)
  CHECK_NEAR(kl_divergence(coin(0.9), coin(0.5)), 0.36806420716849707, 1e-15);
  CHECK(kl_divergence(coin(0.5), coin(0.5)) == 0.0);
  CHECK(kl_divergence(coin(0.5), ProbMeasure(s, {1.0, 0.0})) == kInf);
  CHECK(kl_divergence(ProbMeasure(s, {1.0, 0.0}), coin(0.5)) < kInf);
  CHECK_THROWS_AS((void)kl_divergence(coin(0.5), ProbMeasure::chaotic(testgen::space_of(3))),
                  SpaceMismatch);
}

TEST_CASE("divergence from the chaotic measure is the entropy defect") {
  CHECK_NEAR(kl_vs_chaotic(coin(0.25)), 0.13081203594113696, 1e-15);
  CHECK(kl_vs_chaotic(coin(0.5)) == 0.0);
  testgen::Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto space = testgen::space_of(testgen::int_in(rng, 2, 6));
    const auto p = testgen::measure(rng, space);
    CHECK_NEAR(kl_vs_chaotic(p), kl_divergence(p, ProbMeasure::chaotic(space)), 1e-12);
  }
}

TEST_CASE("pinsker gap is non-negative and vanishes on the diagonal") {
  CHECK(pinsker_gap(coin(0.3), coin(0.3)) == 0.0);
  testgen::Rng rng(22);
  for (int i = 0; i < 500; ++i) {
    const auto space = testgen::space_of(testgen::int_in(rng, 2, 6));
    const auto p = testgen::measure(rng, space);
    const auto q = testgen::measure(rng, space, 1e-4);
    CHECK(pinsker_gap(p, q) >= -1e-13);
  }
}

TEST_CASE("renyi relative entropy cgf hits the frozen value and is convex") {
  CHECK_NEAR(renyi_divergence_cgf(coin(0.5), coin(0.9), 0.5), -0.11157177565710488, 1e-15);
  CHECK_NEAR(renyi_divergence_cgf(coin(0.5), coin(0.9), 0.0), 0.0, 1e-15);
  CHECK_NEAR(renyi_divergence_cgf(coin(0.5), coin(0.9), 1.0), 0.0, 1e-15);
  // Endpoint slopes are the two relative entropies.
  CHECK_NEAR(renyi_divergence_cgf_d1(coin(0.5), coin(0.9), 1.0), 0.5108256237659907, 1e-13);
  CHECK_NEAR(renyi_divergence_cgf_d1(coin(0.5), coin(0.9), 0.0), -0.36806420716849707, 1e-13);
  testgen::Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    const auto space = testgen::space_of(testgen::int_in(rng, 2, 6));
    const auto p = testgen::measure(rng, space, 1e-4);
    const auto q = testgen::measure(rng, space, 1e-4);
    const double a = testgen::real_in(rng, -0.5, 1.5);
    CHECK(renyi_divergence_cgf(p, q, a) <= 1e-12 + std::max(0.0, renyi_divergence_cgf(p, q, a)));
    CHECK(renyi_divergence_cgf_d2(p, q, a) >= -1e-12);
    // Chord above the curve at the midpoint.
    const double b = testgen::real_in(rng, -0.5, 1.5);
    const double mid = renyi_divergence_cgf(p, q, 0.5 * (a + b));
    const double chord =
        0.5 * (renyi_divergence_cgf(p, q, a) + renyi_divergence_cgf(p, q, b));
    CHECK(mid <= chord + 1e-12);
  }
  // Mutually singular pair: empty common support.
  const auto s = OutcomeSpace::make({"0", "1"});
  CHECK(renyi_divergence_cgf(ProbMeasure(s, {1.0, 0.0}), ProbMeasure(s, {0.0, 1.0}), 0.5) ==
        -kInf);
}

TEST_CASE("normalized renyi relative entropy is positive, monotone, and guarded") {
  CHECK_THROWS_AS((void)renyi_divergence(coin(0.5), coin(0.9), 0.0), AlphaOutOfRange);
  CHECK_THROWS_AS((void)renyi_divergence(coin(0.5), coin(0.9), 1.0), AlphaOutOfRange);
  CHECK_THROWS_AS((void)renyi_divergence(coin(0.5), coin(0.9), 1.5), AlphaOutOfRange);
  testgen::Rng rng(24);
  for (int i = 0; i < 300; ++i) {
    const auto space = testgen::space_of(testgen::int_in(rng, 2, 6));
    const auto p = testgen::measure(rng, space, 1e-4);
    const auto q = testgen::measure(rng, space, 1e-4);
    double a1 = testgen::real_in(rng, 0.02, 0.98);
    double a2 = testgen::real_in(rng, 0.02, 0.98);
    if (a1 > a2) std::swap(a1, a2);
    const double d1 = renyi_divergence(p, q, a1);
    const double d2 = renyi_divergence(p, q, a2);
    CHECK(d1 >= -1e-13);
    CHECK(d1 <= d2 + 1e-10);
    CHECK(d2 <= kl_divergence(p, q) + 1e-8);
    // Order 1/2 is symmetric in its arguments.
    CHECK_NEAR(renyi_divergence(p, q, 0.5), renyi_divergence(q, p, 0.5), 1e-12);
  }
}

TEST_CASE("tilted interpolation sweeps from q to p") {
  const auto p = coin(0.5);
  const auto q = coin(0.9);
  const auto r0 = renyi_tilted(p, q, 0.0);
  const auto r1 = renyi_tilted(p, q, 1.0);
  CHECK_NEAR(r0.weight(0), 0.9, 1e-15);
  CHECK_NEAR(r1.weight(0), 0.5, 1e-15);
  const auto rh = renyi_tilted(p, q, 0.5);
  // Proportional to sqrt(p q): (sqrt(.45), sqrt(.05)) normalized.
  const double z = std::sqrt(0.45) + std::sqrt(0.05);
  CHECK_NEAR(rh.weight(0), std::sqrt(0.45) / z, 1e-15);
  const auto s = OutcomeSpace::make({"0", "1"});
  CHECK_THROWS_AS((void)renyi_tilted(ProbMeasure(s, {1.0, 0.0}), ProbMeasure(s, {0.0, 1.0}), 0.5),
                  AbsContViolation);
}

TEST_CASE("mixture entropy gain matches frozen values and yields a metric") {
  const auto s = OutcomeSpace::make({"0", "1"});
  const ProbMeasure point(s, {1.0, 0.0});
  const ProbMeasure other(s, {0.0, 1.0});
  CHECK_NEAR(js_entropy(point, coin(0.5)), 0.2157615543388357, 1e-15);  // (3/4) log(4/3)
  CHECK_NEAR(js_entropy(point, other), std::log(2.0), 1e-15);
  CHECK(js_entropy(coin(0.3), coin(0.3)) == 0.0);
  CHECK_NEAR(js_metric(point, other), std::sqrt(std::log(2.0)), 1e-15);
  testgen::Rng rng(25);
  for (int i = 0; i < 300; ++i) {
    const auto space = testgen::space_of(testgen::int_in(rng, 2, 6));
    const auto a = testgen::measure(rng, space);
    const auto b = testgen::measure(rng, space);
    const auto c = testgen::measure(rng, space);
    CHECK_NEAR(js_entropy(a, b), js_entropy(b, a), 1e-14);
    CHECK(js_entropy(a, b) >= 0.0);
    CHECK(js_entropy(a, b) <= std::log(2.0) + 1e-12);
    CHECK(js_metric(a, c) <= js_metric(a, b) + js_metric(b, c) + 1e-12);
  }
}

TEST_CASE("pointwise mixture divergence sums to the mixture entropy gain") {
  CHECK_NEAR(std::sqrt(js_pointwise_L(0.1, 2.0 / 3.0)), 0.4843036417920906, 1e-15);
  CHECK(js_pointwise_L(0.0, 0.0) == 0.0);
  CHECK(js_pointwise_L(0.3, 0.3) == 0.0);
  CHECK_THROWS_AS((void)js_pointwise_L(-0.1, 0.5), InvalidInput);
  testgen::Rng rng(26);
  for (int i = 0; i < 200; ++i) {
    const auto space = testgen::space_of(testgen::int_in(rng, 2, 6));
    const auto p = testgen::measure(rng, space);
    const auto q = testgen::measure(rng, space);
    double acc = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k)
      acc += 0.5 * js_pointwise_L(p.weight(k), q.weight(k));
    CHECK_NEAR(acc, js_entropy(p, q), 1e-13);
  }
}

TEST_CASE("variational lower bounds are tight exactly at the log-likelihood ratio") {
  const auto p = coin(0.5);
  const auto q = coin(0.25);
  const auto [sup, xstar] = kl_variational_sup(p, q);
  CHECK_NEAR(sup, 0.14384103622589046, 1e-15);
  CHECK_NEAR(kl_variational_value(p, q, xstar), sup, 1e-13);
  testgen::Rng rng(27);
  for (int i = 0; i < 300; ++i) {
    const auto space = testgen::space_of(testgen::int_in(rng, 2, 6));
    const auto a = testgen::measure(rng, space, 1e-4);
    const auto b = testgen::measure(rng, space, 1e-4);
    std::vector<double> v(space->size());
    for (auto& x : v) x = testgen::real_in(rng, -3.0, 3.0);
    const RandomVar rv(space, std::move(v));
    CHECK(kl_variational_value(a, b, rv) <= kl_divergence(a, b) + 1e-11);
  }
  const auto s = OutcomeSpace::make({"0", "1"});
  CHECK_THROWS_AS((void)kl_variational_sup(coin(0.5), ProbMeasure(s, {1.0, 0.0})),
                  AbsContViolation);
}

TEST_CASE("the gibbs tilt maximizes the variational functional") {
  const auto s = OutcomeSpace::make({"0", "1"});
  const RandomVar x(s, {std::log(2.0), 0.0});
  const auto [pstar, z] = gibbs_maximizer(ProbMeasure(s, {0.5, 0.5}), x);
  CHECK_NEAR(z, 0.4054651081081644, 1e-15);  // log(3/2)
  CHECK_NEAR(pstar.weight(0), 2.0 / 3.0, 1e-15);
  CHECK_NEAR(pstar.weight(1), 1.0 / 3.0, 1e-15);
  // Optimality: X-expectation minus KL is maximal at the tilt.
  testgen::Rng rng(28);
  for (int i = 0; i < 200; ++i) {
    const auto space = testgen::space_of(testgen::int_in(rng, 2, 5));
    const auto q = testgen::measure(rng, space, 1e-4);
    std::vector<double> v(space->size());
    for (auto& w : v) w = testgen::real_in(rng, -2.0, 2.0);
    const RandomVar rv(space, std::move(v));
    const auto [opt, logz] = gibbs_maximizer(q, rv);
    const double at_opt = rv.expectation(opt) - kl_divergence(opt, q);
    CHECK_NEAR(at_opt, logz, 1e-12);
    const auto trial = testgen::measure(rng, space);
    CHECK(rv.expectation(trial) - kl_divergence(trial, q) <= logz + 1e-11);
  }
}

TEST_CASE("the scalar log-sum gap is zero exactly on proportional inputs") {
  const std::vector<double> a{0.2, 0.4, 0.4};
  const std::vector<double> b{0.1, 0.2, 0.2};
  CHECK_NEAR(log_sum_gap(a, b), 0.0, 1e-15);
  const std::vector<double> c{0.5, 0.1, 0.4};
  CHECK(log_sum_gap(a, c) > 0.0);
  const std::vector<double> zero_cell{0.1, 0.0, 0.2};
  CHECK(log_sum_gap(a, zero_cell) == kInf);
  CHECK_THROWS_AS((void)log_sum_gap(a, std::vector<double>{1.0, 2.0}), InvalidInput);
}

TEST_CASE("coarse graining can only shrink the relative entropy") {
  // Deterministic merge of a binary alphabet collapses any pair to zero.
  const auto s2 = OutcomeSpace::make({"0", "1"});
  const auto s1 = OutcomeSpace::make({"*"});
  const StochasticMap merge(s2, s1, {{1.0}, {1.0}});
  CHECK_NEAR(kl_divergence(merge.apply(coin(0.5)), merge.apply(coin(0.9))), 0.0, 1e-15);
  testgen::Rng rng(29);
  for (int i = 0; i < 300; ++i) {
    const auto from = testgen::space_of(testgen::int_in(rng, 2, 6));
    const auto to = testgen::space_of(testgen::int_in(rng, 2, 6));
    const auto p = testgen::measure(rng, from, 1e-4);
    const auto q = testgen::measure(rng, from, 1e-4);
    const auto phi = testgen::stochastic_map(rng, from, to);
    CHECK(kl_divergence(phi.apply(p), phi.apply(q)) <= kl_divergence(p, q) + 1e-11);
  }
}
