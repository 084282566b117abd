#include <cmath>
#include <vector>

#include "checks.hpp"
#include "doctest.h"
#include "entropics/errors.hpp"
#include "entropics/measure.hpp"
#include "entropics/space.hpp"

using namespace entropics;

TEST_CASE("outcome spaces index labels and remember product factors") {
  const auto s = OutcomeSpace::make({"H", "T"});
  CHECK(s->size() == 2);
  CHECK(s->label(1) == "T");
  CHECK(s->index_of("H") == 0);
  CHECK_THROWS_AS((void)s->index_of("X"), InvalidInput);

  const auto t = OutcomeSpace::make({"a", "b", "c"});
  const auto prod = OutcomeSpace::product(s, t);
  CHECK(prod->is_product());
  CHECK(prod->size() == 6);
  CHECK(prod->left()->same_as(*s));
  CHECK(prod->right()->same_as(*t));
  CHECK_FALSE(s->is_product());
  CHECK(s->same_as(*OutcomeSpace::make({"H", "T"})));
  CHECK_FALSE(s->same_as(*t));
}

TEST_CASE("product index is lexicographic with the first slot most significant") {
  const auto s = OutcomeSpace::make({"0", "1", "2"});
  const ProductIndex pi(s, 4);
  CHECK(pi.countable());
  CHECK(pi.exact_count() == 81);
  CHECK(pi.decode(0) == std::vector<int>{0, 0, 0, 0});
  CHECK(pi.decode(80) == std::vector<int>{2, 2, 2, 2});
  CHECK(pi.decode(27)[0] == 1);
  for (const std::uint64_t i : {std::uint64_t{0}, std::uint64_t{7}, std::uint64_t{80}})
    CHECK(pi.encode(pi.decode(i)) == i);
}

TEST_CASE("measures expose totals, strict supports, and event masses") {
  const auto s = OutcomeSpace::make({"a", "b", "c"});
  const Measure m(s, {0.2, 0.0, 0.3});
  CHECK_NEAR(m.total(), 0.5, 1e-15);
  CHECK(m.support() == std::vector<int>{0, 2});
  const std::vector<int> ev{0, 1};
  CHECK_NEAR(m.mass_of(ev), 0.2, 1e-15);
  CHECK_THROWS_AS(Measure(s, {0.1, 0.2}), InvalidInput);
  CHECK_THROWS_AS(Measure(s, {-0.1, 0.5, 0.6}), InvalidInput);
}

TEST_CASE("probability measures renormalize only within tolerance") {
  const auto s = OutcomeSpace::make({"a", "b"});
  const ProbMeasure p(s, {0.5, 0.5 + 5e-13});
  CHECK_NEAR(p.total(), 1.0, 1e-15);
  CHECK_THROWS_AS(ProbMeasure(s, {0.6, 0.6}), InvalidInput);
  CHECK(ProbMeasure::chaotic(s).weight(0) == 0.5);
  CHECK(ProbMeasure::pure(s, 1).weight(1) == 1.0);
  CHECK_FALSE(ProbMeasure::pure(s, 1).faithful());
  CHECK(ProbMeasure::chaotic(s).faithful());
}

TEST_CASE("expectations ignore outcomes outside the support") {
  const auto s = OutcomeSpace::make({"a", "b"});
  const ProbMeasure p(s, {1.0, 0.0});
  const RandomVar x(s, {2.0, 1e308});
  CHECK(x.expectation(p) == 2.0);
}

TEST_CASE("radon-nikodym derivatives reproduce the numerator measure") {
  const auto s = OutcomeSpace::make({"a", "b"});
  const ProbMeasure p(s, {0.25, 0.75});
  const ProbMeasure q(s, {0.5, 0.5});
  const auto d = radon_nikodym(p, q);
  CHECK_NEAR(d.value(0), 0.5, 1e-15);
  CHECK_NEAR(d.value(1), 1.5, 1e-15);
  const ProbMeasure bad(s, {1.0, 0.0});
  CHECK_THROWS_AS(radon_nikodym(p, bad), AbsContViolation);
}

TEST_CASE("lebesgue decomposition splits into absolutely continuous and singular parts") {
  const auto s = OutcomeSpace::make({"a", "b", "c"});
  const Measure m(s, {0.3, 0.3, 0.4});
  const Measure rho(s, {0.5, 0.5, 0.0});
  const auto [ac, sing] = lebesgue_decompose(m, rho);
  for (std::size_t k = 0; k < 3; ++k)
    CHECK_NEAR(ac.weight(k) + sing.weight(k), m.weight(k), 1e-15);
  CHECK(ac.weight(2) == 0.0);
  CHECK(sing.weight(0) == 0.0);
  CHECK(sing.weight(2) == 0.4);
}

TEST_CASE("variational distance sums the pointwise gaps") {
  const auto s = OutcomeSpace::make({"a", "b"});
  const ProbMeasure p(s, {0.9, 0.1});
  const ProbMeasure q(s, {0.5, 0.5});
  CHECK_NEAR(variational_distance(p, q), 0.8, 1e-15);
  CHECK(variational_distance(ProbMeasure(s, {1.0, 0.0}), ProbMeasure(s, {0.0, 1.0})) == 2.0);
  CHECK(variational_distance(p, p) == 0.0);
  const auto other = OutcomeSpace::make({"x", "y"});
  CHECK_THROWS_AS((void)variational_distance(p, ProbMeasure::chaotic(other)), SpaceMismatch);
}

TEST_CASE("products and marginals are mutually inverse") {
  const auto sl = OutcomeSpace::make({"0", "1"});
  const auto sr = OutcomeSpace::make({"a", "b", "c"});
  const ProbMeasure pl(sl, {0.3, 0.7});
  const ProbMeasure pr(sr, {0.2, 0.5, 0.3});
  const auto joint = product(pl, pr);
  CHECK(joint.space()->is_product());
  CHECK_NEAR(joint.weight(1 * 3 + 2), 0.7 * 0.3, 1e-15);
  const auto [ml, mr] = marginals(joint);
  for (std::size_t k = 0; k < 2; ++k) CHECK_NEAR(ml.weight(k), pl.weight(k), 1e-15);
  for (std::size_t k = 0; k < 3; ++k) CHECK_NEAR(mr.weight(k), pr.weight(k), 1e-15);
  CHECK_THROWS_AS(marginals(pl), NotAProductSpace);
}

TEST_CASE("pushforwards merge outcome masses") {
  const auto s = OutcomeSpace::make({"a", "b", "c"});
  const auto t = OutcomeSpace::make({"x", "y"});
  const ProbMeasure p(s, {0.2, 0.5, 0.3});
  const std::vector<int> target_of{0, 0, 1};
  const auto img = push_forward(p, target_of, t);
  CHECK_NEAR(img.weight(0), 0.7, 1e-15);
  CHECK_NEAR(img.weight(1), 0.3, 1e-15);
}

TEST_CASE("mixtures are convex combinations") {
  const auto s = OutcomeSpace::make({"a", "b"});
  const ProbMeasure p(s, {0.9, 0.1});
  const ProbMeasure q(s, {0.1, 0.9});
  const double w[2] = {0.25, 0.75};
  const ProbMeasure comps[2] = {p, q};
  const auto m = mix(w, comps);
  CHECK_NEAR(m.weight(0), 0.25 * 0.9 + 0.75 * 0.1, 1e-15);
}

TEST_CASE("iid products assign multiplicative word probabilities") {
  const auto s = OutcomeSpace::make({"H", "T"});
  const ProbMeasure p(s, {0.25, 0.75});
  const std::vector<int> word{0, 1, 1};
  CHECK_NEAR(iid_log_prob(p, word), std::log(0.25) + 2.0 * std::log(0.75), 1e-14);
  const auto [wspace, wp] = materialize_iid(p, 3);
  CHECK(wspace->size() == 8);
  const ProductIndex pi(s, 3);
  CHECK_NEAR(wp.weight(pi.encode(word)), 0.25 * 0.75 * 0.75, 1e-15);
  CHECK_THROWS_AS(materialize_iid(p, 60), EnumerationCapExceeded);
}

TEST_CASE("stochastic maps act linearly and flag doubly stochastic matrices") {
  const auto s = OutcomeSpace::make({"a", "b"});
  const auto id = StochasticMap::identity(s);
  const ProbMeasure p(s, {0.3, 0.7});
  CHECK(id.apply(p).weight(0) == 0.3);
  CHECK(id.doubly_stochastic());

  const StochasticMap phi(s, s, {{0.5, 0.5}, {0.25, 0.75}});
  CHECK_FALSE(phi.doubly_stochastic());
  const auto img = phi.apply(p);
  CHECK_NEAR(img.weight(0), 0.3 * 0.5 + 0.7 * 0.25, 1e-15);

  const std::vector<double> tangent{1.0, -1.0};
  const auto mapped = phi.apply_tangent(tangent);
  CHECK_NEAR(mapped[0] + mapped[1], 0.0, 1e-15);
  CHECK_THROWS_AS(StochasticMap(s, s, {{0.5, 0.6}, {0.25, 0.75}}), InvalidInput);
}
