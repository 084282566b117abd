#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <variant>

#include "checks.hpp"
#include "doctest.h"
#include "entropics/errors.hpp"
#include "entropics/io.hpp"

using namespace entropics;
namespace fs = std::filesystem;

namespace {

// Writes content to a fresh file in the test scratch directory.
class Scratch {
 public:
  Scratch() {
    dir_ = fs::temp_directory_path() /
           ("entropics-io-test-" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string file(const std::string& name, const std::string& content) {
    const auto path = dir_ / name;
    std::ofstream out(path);
    out << content;
    return path.string();
  }

 private:
  fs::path dir_;
};

}  // namespace

TEST_CASE("measures load with explicit or default labels") {
  Scratch tmp;
  const auto p = io::load_prob_measure(
      tmp.file("m1.json", R"({"outcomes": ["H", "T"], "weights": [0.25, 0.75]})"));
  CHECK(p.space()->label(0) == "H");
  CHECK(p.weight(1) == 0.75);
  const auto q = io::load_prob_measure(tmp.file("m2.json", R"({"weights": [0.5, 0.5]})"));
  CHECK(q.space()->label(0) == "0");
  CHECK(q.space()->label(1) == "1");
}

TEST_CASE("measure loading rejects malformed input") {
  Scratch tmp;
  CHECK_THROWS_AS((void)io::load_prob_measure(tmp.file("bad1.json", "{ not json")),
                  InvalidInput);
  CHECK_THROWS_AS((void)io::load_prob_measure(tmp.file("bad2.json", R"({"w": [1.0]})")),
                  InvalidInput);
  CHECK_THROWS_AS(
      (void)io::load_prob_measure(tmp.file("bad3.json", R"({"weights": [0.9, 0.3]})")),
      InvalidInput);
  CHECK_THROWS_AS(
      (void)io::load_prob_measure(tmp.file("bad4.json", R"({"weights": [1.5, -0.5]})")),
      InvalidInput);
  CHECK_THROWS_AS((void)io::load_prob_measure(
                      tmp.file("bad5.json", R"({"outcomes": ["a"], "weights": [0.5, 0.5]})")),
                  InvalidInput);
  CHECK_THROWS_AS((void)io::load_prob_measure("/nonexistent/path.json"), InvalidInput);
}

TEST_CASE("random variables load in space order or by labels") {
  Scratch tmp;
  const auto p = io::load_prob_measure(
      tmp.file("m.json", R"({"outcomes": ["H", "T"], "weights": [0.5, 0.5]})"));
  const auto x =
      io::load_random_var(tmp.file("x1.json", R"({"values": [1.0, -1.0]})"), p.space());
  CHECK(x.value(0) == 1.0);
  // Labels reorder the values onto the space's indexing.
  const auto y = io::load_random_var(
      tmp.file("x2.json", R"({"outcomes": ["T", "H"], "values": [-1.0, 1.0]})"), p.space());
  CHECK(y.value(0) == 1.0);
  CHECK(y.value(1) == -1.0);
  CHECK_THROWS_AS(
      (void)io::load_random_var(tmp.file("x3.json", R"({"values": [1.0]})"), p.space()),
      InvalidInput);
}

TEST_CASE("involutions load and are validated") {
  Scratch tmp;
  const auto p = io::load_prob_measure(tmp.file("m.json", R"({"weights": [0.5, 0.5]})"));
  const auto theta =
      io::load_involution(tmp.file("i1.json", R"({"perm": [1, 0]})"), p.space());
  CHECK(theta.perm == std::vector<std::size_t>{1, 0});
  CHECK_THROWS_AS(
      (void)io::load_involution(tmp.file("i2.json", R"({"perm": [1, 1]})"), p.space()),
      InvalidInput);
  CHECK_THROWS_AS(
      (void)io::load_involution(tmp.file("i3.json", R"({"perm": [-1, 0]})"), p.space()),
      InvalidInput);
}

TEST_CASE("constraints load both shapes with closure defaults") {
  Scratch tmp;
  const auto p = io::load_prob_measure(tmp.file("m.json", R"({"weights": [0.5, 0.5]})"));
  const auto ball = io::load_constraint(
      tmp.file("c1.json", R"({"kind": "ball", "center": [0.8, 0.2], "radius": 0.05})"),
      p.space());
  REQUIRE(std::holds_alternative<BallConstraint>(ball));
  CHECK(std::get<BallConstraint>(ball).closed);
  CHECK(std::get<BallConstraint>(ball).radius == 0.05);
  const auto half = io::load_constraint(
      tmp.file("c2.json",
               R"({"kind": "halfspace", "rv": [1.0, 0.0], "threshold": 0.8,
                   "direction": "geq", "closed": false})"),
      p.space());
  REQUIRE(std::holds_alternative<HalfspaceConstraint>(half));
  CHECK(std::get<HalfspaceConstraint>(half).geq);
  CHECK_FALSE(std::get<HalfspaceConstraint>(half).closed);
  CHECK_THROWS_AS((void)io::load_constraint(
                      tmp.file("c3.json", R"({"kind": "polytope"})"), p.space()),
                  InvalidInput);
  CHECK_THROWS_AS(
      (void)io::load_constraint(
          tmp.file("c4.json",
                   R"({"kind": "halfspace", "rv": [1.0, 0.0], "threshold": 0.8,
                       "direction": "above"})"),
          p.space()),
      InvalidInput);
}

TEST_CASE("samples load by index or by label") {
  Scratch tmp;
  const auto p = io::load_prob_measure(
      tmp.file("m.json", R"({"outcomes": ["H", "T"], "weights": [0.5, 0.5]})"));
  const auto s1 =
      io::load_sample(tmp.file("s1.json", R"({"sample": [0, 1, 1, 0]})"), p.space());
  CHECK(s1 == std::vector<std::size_t>{0, 1, 1, 0});
  const auto s2 =
      io::load_sample(tmp.file("s2.json", R"({"sample": ["T", "H"]})"), p.space());
  CHECK(s2 == std::vector<std::size_t>{1, 0});
  CHECK_THROWS_AS(
      (void)io::load_sample(tmp.file("s3.json", R"({"sample": [0, 7]})"), p.space()),
      InvalidInput);
  CHECK_THROWS_AS(
      (void)io::load_sample(tmp.file("s4.json", R"({"sample": ["H", "X"]})"), p.space()),
      InvalidInput);
}

TEST_CASE("families load all three kinds") {
  Scratch tmp;
  const auto bern = io::load_family(
      tmp.file("f1.json", R"({"kind": "bernoulli", "interval": [0.2, 0.8]})"));
  CHECK(bern.kind() == "bernoulli");
  CHECK(bern.a() == 0.2);
  CHECK(bern.b() == 0.8);
  const auto tilt = io::load_family(
      tmp.file("f2.json", R"({"kind": "exponential", "rv": [-1.0, 1.0], "interval": [-2.0, 2.0]})"));
  CHECK(tilt.kind() == "exponential");
  CHECK_NEAR(tilt.at(0.0).weight(0), 0.5, 1e-15);  // chaotic base at zero tilt
  const auto table = io::load_family(tmp.file(
      "f3.json",
      R"({"kind": "table", "thetas": [0.0, 1.0], "measures": [[0.25, 0.75], [0.7, 0.3]]})"));
  CHECK(table.kind() == "table");
  CHECK_NEAR(table.at(0.5).weight(0), 0.475, 1e-15);
  CHECK_THROWS_AS(
      (void)io::load_family(tmp.file("f4.json", R"({"kind": "gaussian"})")), InvalidInput);
}

TEST_CASE("stochastic maps load with labeled endpoints") {
  Scratch tmp;
  const auto phi = io::load_stochastic_map(tmp.file(
      "phi.json",
      R"({"from": ["a", "b"], "to": ["x", "y", "z"],
          "rows": [[0.5, 0.5, 0.0], [0.0, 0.0, 1.0]]})"));
  CHECK(phi.from()->size() == 2);
  CHECK(phi.to()->size() == 3);
  CHECK(phi.entry(0, 1) == 0.5);
  CHECK_THROWS_AS((void)io::load_stochastic_map(tmp.file(
                      "bad.json",
                      R"({"from": ["a"], "to": ["x", "y"], "rows": [[0.7, 0.7]]})")),
                  InvalidInput);
}
