// entropics: command-line workbench over the core library.
//
// Twelve subcommands covering entropies, divergences, rate functions and
// Cramer tails, covering exponents, binary hypothesis testing, fluctuation
// relations, Sanov experiments, Fisher geometry, and maximum likelihood.
// Reports go to standard output as JSON (schema 1) or plot-ready CSV;
// diagnostics go to standard error. Identical invocations produce
// byte-identical reports: the master seed is the only stochastic input.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "entropics/cgf.hpp"
#include "entropics/coding.hpp"
#include "entropics/divergence.hpp"
#include "entropics/empirical.hpp"
#include "entropics/entropy.hpp"
#include "entropics/errors.hpp"
#include "entropics/estimation.hpp"
#include "entropics/family.hpp"
#include "entropics/fisher.hpp"
#include "entropics/fluctuation.hpp"
#include "entropics/io.hpp"
#include "entropics/measure.hpp"
#include "entropics/numeric.hpp"
#include "entropics/testing.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace entropics;
using namespace entropics::io;

// Shortest round-trip decimal form; "inf"/"-inf"/"nan" for non-finite.
std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// JSON has no non-finite numbers; extended reals degrade to strings.
json jreal(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw InvalidInput("not a number: '" + s + "'");
  return v;
}

std::int64_t parse_int(const std::string& s) {
  std::int64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw InvalidInput("not an integer: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string::npos ? pos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  if (s.empty()) return out;
  for (const auto& part : split(s, ',')) out.push_back(parse_double(part));
  return out;
}

// "a:b:step" with both endpoints included (1e-9 steps of slack on the top).
std::vector<double> parse_grid(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) throw InvalidInput("grid must be a:b:step, got '" + s + "'");
  const double a = parse_double(parts[0]);
  const double b = parse_double(parts[1]);
  const double step = parse_double(parts[2]);
  if (!(step > 0.0) || !std::isfinite(step))
    throw InvalidInput("grid step must be positive, got '" + s + "'");
  if (!(b >= a)) throw InvalidInput("grid needs b >= a, got '" + s + "'");
  const auto n = static_cast<std::int64_t>(std::floor((b - a) / step + 1e-9));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (std::int64_t i = 0; i <= n; ++i) out.push_back(a + static_cast<double>(i) * step);
  return out;
}

// Integer grid: "a:b:step" or a comma list like "100,200,400".
std::vector<std::int64_t> parse_int_grid(const std::string& s) {
  std::vector<std::int64_t> out;
  if (s.find(':') != std::string::npos) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw InvalidInput("grid must be a:b:step, got '" + s + "'");
    const auto a = parse_int(parts[0]);
    const auto b = parse_int(parts[1]);
    const auto step = parse_int(parts[2]);
    if (step <= 0) throw InvalidInput("grid step must be positive, got '" + s + "'");
    for (auto n = a; n <= b; n += step) out.push_back(n);
  } else {
    if (s.empty()) return out;
    for (const auto& part : split(s, ',')) out.push_back(parse_int(part));
  }
  return out;
}

void emit_csv_row(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) line += ',';
    line += cells[i];
  }
  line += '\n';
  std::cout << line;
}

void emit_json(const json& report) { std::cout << report.dump(2) << "\n"; }

// ---------------------------------------------------------------- entropy

struct EntropyOpts {
  std::string measure;
  std::string alphas;
  bool bits = false;
};

void run_entropy(const EntropyOpts& o) {
  const auto p = load_prob_measure(o.measure);
  const double scale = o.bits ? 1.0 / std::log(2.0) : 1.0;
  json out;
  out["schema"] = 1;
  out["command"] = "entropy";
  out["unit"] = o.bits ? "bits" : "nats";
  out["shannon"] = jreal(shannon_entropy(p) * scale);
  out["hartley"] = jreal(hartley_entropy(p) * scale);
  json renyi = json::array();
  for (const double a : parse_double_list(o.alphas)) {
    renyi.push_back(json{{"alpha", a}, {"value", jreal(renyi_entropy(p, a) * scale)}});
  }
  out["renyi"] = renyi;
  emit_json(out);
}

void setup_entropy(CLI::App& app) {
  auto o = std::make_shared<EntropyOpts>();
  auto* sc = app.add_subcommand("entropy", "Shannon, Hartley, and Renyi entropies of a measure");
  sc->add_option("--measure", o->measure, "probability measure JSON file")->required();
  sc->add_option("--alpha", o->alphas, "comma-separated Renyi orders");
  sc->add_flag("--bits", o->bits, "report in bits instead of nats");
  sc->callback([o] { run_entropy(*o); });
}

// -------------------------------------------------------------- divergence

struct DivergenceOpts {
  std::string p_path;
  std::string q_path;
  std::string alphas;
};

void run_divergence(const DivergenceOpts& o) {
  const auto p = load_prob_measure(o.p_path);
  const auto q = load_prob_measure(o.q_path);
  json out;
  out["schema"] = 1;
  out["command"] = "divergence";
  out["kl"] = jreal(kl_divergence(p, q));
  json renyi = json::array();
  json renyi_cgf = json::array();
  for (const double a : parse_double_list(o.alphas)) {
    renyi.push_back(json{{"alpha", a}, {"value", jreal(renyi_divergence(p, q, a))}});
    renyi_cgf.push_back(json{{"alpha", a}, {"value", jreal(renyi_divergence_cgf(p, q, a))}});
  }
  out["renyi"] = renyi;
  out["renyi_cgf"] = renyi_cgf;
  out["js_entropy"] = jreal(js_entropy(p, q));
  out["js_metric"] = jreal(js_metric(p, q));
  emit_json(out);
}

void setup_divergence(CLI::App& app) {
  auto o = std::make_shared<DivergenceOpts>();
  auto* sc = app.add_subcommand("divergence", "relative entropy, Renyi orders, and Jensen-Shannon");
  sc->add_option("--p", o->p_path, "first measure JSON file")->required();
  sc->add_option("--q", o->q_path, "second measure JSON file")->required();
  sc->add_option("--alpha", o->alphas, "comma-separated Renyi orders in (0,1)");
  sc->callback([o] { run_divergence(*o); });
}

// -------------------------------------------------------------------- rate

struct RateOpts {
  std::string measure;
  std::string rv;
  std::string theta_grid;
};

void run_rate(const RateOpts& o) {
  const auto p = load_prob_measure(o.measure);
  const auto x = load_random_var(o.rv, p.space());
  const RateFunction rf{CgfModel(p, x)};
  const auto& model = rf.model();
  emit_csv_row({"theta", "alpha", "I", "C"});
  for (const double theta : parse_grid(o.theta_grid)) {
    const double rate = rf.rate(theta);
    double alpha = std::nan("");
    double c = std::nan("");
    if (!model.degenerate() && theta > model.min_value() && theta < model.max_value()) {
      alpha = rf.alpha_of(theta);
      c = model.cgf(alpha);
    }
    emit_csv_row({fmt(theta), fmt(alpha), fmt(rate), fmt(c)});
  }
}

void setup_rate(CLI::App& app) {
  auto o = std::make_shared<RateOpts>();
  auto* sc = app.add_subcommand("rate", "Legendre rate function of a real variable, as CSV");
  sc->add_option("--measure", o->measure, "probability measure JSON file")->required();
  sc->add_option("--rv", o->rv, "random variable JSON file")->required();
  sc->add_option("--theta-grid", o->theta_grid, "a:b:step")->required();
  sc->callback([o] { run_rate(*o); });
}

// ------------------------------------------------------------------ cramer

struct CramerOpts {
  std::string measure;
  std::string rv;
  std::int64_t n = 0;
  double a = 0.0;
  double b = 0.0;
  std::int64_t mc_reps = 0;
  std::uint64_t seed = 0;
  double cap = 1e7;
};

void run_cramer(const CramerOpts& o) {
  const auto p = load_prob_measure(o.measure);
  const auto x = load_random_var(o.rv, p.space());
  const RateFunction rf{CgfModel(p, x)};
  const auto& model = rf.model();
  const double log_p = cramer_exact_log(model, o.n, o.a, o.b, o.cap);

  // Tightest Chernoff bound over the window: the rate minimum sits at the
  // projection of the mean onto [a,b] cut to the value range.
  const double lo = std::max(o.a, model.min_value());
  const double hi = std::min(o.b, model.max_value());
  double rate_min = std::numeric_limits<double>::infinity();
  if (lo <= hi) rate_min = rf.rate(std::clamp(model.mean(), lo, hi));

  json out;
  out["schema"] = 1;
  out["command"] = "cramer";
  out["N"] = o.n;
  out["a"] = jreal(o.a);
  out["b"] = jreal(o.b);
  out["log_probability"] = jreal(log_p);
  out["probability"] = jreal(std::exp(log_p));
  out["normalized"] = jreal(log_p / static_cast<double>(o.n));
  out["rate_window_min"] = jreal(rate_min);
  out["log_upper_bound"] = jreal(-static_cast<double>(o.n) * rate_min);
  if (o.mc_reps > 0) {
    const double est = cramer_mc(model, o.n, o.a, o.b, o.mc_reps, o.seed);
    out["mc"] = json{{"reps", o.mc_reps}, {"seed", o.seed}, {"estimate", jreal(est)}};
  } else {
    out["mc"] = nullptr;
  }
  emit_json(out);
}

void setup_cramer(CLI::App& app) {
  auto o = std::make_shared<CramerOpts>();
  auto* sc = app.add_subcommand("cramer", "exact iid tail probability P{a <= S_N/N <= b}");
  sc->add_option("--measure", o->measure, "probability measure JSON file")->required();
  sc->add_option("--rv", o->rv, "random variable JSON file")->required();
  sc->add_option("--N", o->n, "word length")->required();
  sc->add_option("--a", o->a, "window lower end")->required();
  sc->add_option("--b", o->b, "window upper end")->required();
  sc->add_option("--mc", o->mc_reps, "Monte Carlo replicas (0 = exact only)");
  sc->add_option("--seed", o->seed, "master seed");
  sc->add_option("--cap", o->cap, "enumeration cap");
  sc->callback([o] { run_cramer(*o); });
}

// ------------------------------------------------------------------ coding

struct CodingOpts {
  std::string measure;
  std::int64_t n = 0;
  double gamma = 0.0;
  double cap = 1e7;
};

void run_coding(const CodingOpts& o) {
  const auto p = load_prob_measure(o.measure);
  const auto r = covering_exponent(p, o.n, o.gamma, o.cap);
  json out;
  out["schema"] = 1;
  out["command"] = "coding";
  out["N"] = r.n;
  out["gamma"] = jreal(r.gamma);
  out["log_c_n"] = jreal(r.log_c_n);
  out["c_n"] = r.c_exact ? json(r.c_n) : json(nullptr);
  out["normalized"] = jreal(r.normalized);
  out["entropy_target"] = jreal(r.entropy_target);
  out["mass_achieved"] = jreal(r.mass_achieved);
  emit_json(out);
}

void setup_coding(CLI::App& app) {
  auto o = std::make_shared<CodingOpts>();
  auto* sc = app.add_subcommand("coding", "minimal covering count c_N(gamma) and its exponent");
  sc->add_option("--measure", o->measure, "probability measure JSON file")->required();
  sc->add_option("--N", o->n, "word length")->required();
  sc->add_option("--gamma", o->gamma, "mass to cover, in (0,1)")->required();
  sc->add_option("--cap", o->cap, "enumeration cap");
  sc->callback([o] { run_coding(*o); });
}

// ----------------------------------------------------------------- testing

struct TestingOpts {
  std::string p_path;
  std::string q_path;
  std::string mode;
  double prior = 0.5;
  double gamma = 0.5;
  std::string s_grid;
  std::string theta_grid;
  std::string n_list;
  bool swap = false;
  double cap = 1e7;
};

void run_testing(const TestingOpts& o) {
  auto p = load_prob_measure(o.p_path);
  auto q = load_prob_measure(o.q_path);
  if (o.swap) std::swap(p, q);
  const auto ns = parse_int_grid(o.n_list);

  if (o.mode == "bayes") {
    if (!ns.empty()) {
      emit_csv_row({"N", "log_error", "normalized"});
      for (const auto n : ns) {
        const double le = bayes_error_exact_log(p, q, o.prior, n, o.cap);
        emit_csv_row({std::to_string(n), fmt(le), fmt(le / static_cast<double>(n))});
      }
      return;
    }
    json out;
    out["schema"] = 1;
    out["command"] = "testing";
    out["mode"] = "bayes";
    out["prior"] = jreal(o.prior);
    out["bayes_error"] = jreal(bayes_error(p, q, o.prior));
    json labels = json::array();
    for (const auto idx : optimal_test(p, q, o.prior)) labels.push_back(p.space()->label(idx));
    out["test_set"] = labels;
    emit_json(out);
    return;
  }

  if (o.mode == "stein") {
    if (ns.empty()) throw InvalidInput("testing --mode stein needs --N");
    const double limit = -kl_divergence(p, q);
    emit_csv_row({"N", "s_N", "normalized", "limit"});
    for (const auto n : ns) {
      const auto r = stein_exponent(p, q, o.gamma, n, o.cap);
      emit_csv_row({std::to_string(n), fmt(r.s_n), fmt(r.normalized), fmt(limit)});
    }
    return;
  }

  if (o.mode == "chernoff") {
    const auto c = chernoff_exponent(p, q);
    if (!ns.empty()) {
      emit_csv_row({"N", "log_error", "normalized", "exponent"});
      for (const auto n : ns) {
        const double le = bayes_error_exact_log(p, q, o.prior, n, o.cap);
        emit_csv_row({std::to_string(n), fmt(le), fmt(le / static_cast<double>(n)),
                      fmt(c.value)});
      }
      return;
    }
    json out;
    out["schema"] = 1;
    out["command"] = "testing";
    out["mode"] = "chernoff";
    out["alpha_min"] = jreal(c.alpha_min);
    out["exponent"] = jreal(c.value);
    emit_json(out);
    return;
  }

  if (o.mode == "hoeffding") {
    const bool have_s = !o.s_grid.empty();
    const bool have_theta = !o.theta_grid.empty();
    if (have_s == have_theta)
      throw InvalidInput("testing --mode hoeffding needs exactly one of --s-grid / --theta-grid");
    if (have_s) {
      emit_csv_row({"s", "psi", "alpha_star", "phi_hat_inverse"});
      for (const double s : parse_grid(o.s_grid)) {
        const auto h = hoeffding_psi(p, q, s);
        emit_csv_row({fmt(s), fmt(h.psi), fmt(h.alpha_star),
                      fmt(hoeffding_phi_hat_inverse(p, q, s))});
      }
      return;
    }
    emit_csv_row({"theta", "phi", "phi_hat"});
    for (const double theta : parse_grid(o.theta_grid)) {
      emit_csv_row({fmt(theta), fmt(hoeffding_phi(p, q, theta)),
                    fmt(hoeffding_phi_hat(p, q, theta))});
    }
    return;
  }

  throw InvalidInput("unknown testing mode '" + o.mode + "'");
}

void setup_testing(CLI::App& app) {
  auto o = std::make_shared<TestingOpts>();
  auto* sc = app.add_subcommand("testing", "binary hypothesis testing exponents");
  sc->add_option("--p", o->p_path, "null hypothesis measure JSON file")->required();
  sc->add_option("--q", o->q_path, "alternative measure JSON file")->required();
  sc->add_option("--mode", o->mode, "bayes | stein | chernoff | hoeffding")
      ->required()
      ->check(CLI::IsMember({"bayes", "stein", "chernoff", "hoeffding"}));
  sc->add_option("--prior", o->prior, "prior weight of p (default 0.5)");
  sc->add_option("--gamma", o->gamma, "power constraint for stein (default 0.5)");
  sc->add_option("--s-grid", o->s_grid, "a:b:step over type-II rates (hoeffding)");
  sc->add_option("--theta-grid", o->theta_grid, "a:b:step over thresholds (hoeffding)");
  sc->add_option("--N", o->n_list, "word lengths: a:b:step or comma list");
  sc->add_flag("--swap", o->swap, "exchange the roles of p and q");
  sc->add_option("--cap", o->cap, "enumeration cap");
  sc->callback([o] { run_testing(*o); });
}

// ------------------------------------------------------------- fluctuation

struct FluctuationOpts {
  std::string measure;
  std::string involution;
};

void run_fluctuation(const FluctuationOpts& o) {
  const auto p = load_prob_measure(o.measure);
  const auto theta = load_involution(o.involution, p.space());
  const auto dist = ep_distribution(p, theta);
  json atoms = json::array();
  for (const auto& a : dist.atoms) {
    atoms.push_back(json{{"s", jreal(a.s)}, {"prob", jreal(a.prob)}});
  }
  std::vector<double> alpha_grid;
  for (int i = 1; i <= 19; ++i) alpha_grid.push_back(0.05 * i);
  json out;
  out["schema"] = 1;
  out["command"] = "fluctuation";
  out["atoms"] = atoms;
  out["max_violation"] = jreal(fluctuation_check(dist));
  out["renyi_symmetry_max"] = jreal(renyi_symmetry_check(p, theta, alpha_grid));
  emit_json(out);
}

void setup_fluctuation(CLI::App& app) {
  auto o = std::make_shared<FluctuationOpts>();
  auto* sc = app.add_subcommand("fluctuation", "entropy production law and its symmetry");
  sc->add_option("--measure", o->measure, "probability measure JSON file")->required();
  sc->add_option("--involution", o->involution, "involution JSON file (permutation)")->required();
  sc->callback([o] { run_fluctuation(*o); });
}

// ------------------------------------------------------------------- sanov

struct SanovOpts {
  std::string measure;
  std::string constraint;
  std::string n_grid;
  double resolution = 0.005;
  double cap = 1e7;
};

void run_sanov(const SanovOpts& o) {
  const auto p = load_prob_measure(o.measure);
  const auto gamma = load_constraint(o.constraint, p.space());
  const auto ns = parse_int_grid(o.n_grid);
  if (ns.empty()) throw InvalidInput("sanov needs a non-empty --N-grid");
  const auto report = sanov_experiment(p, gamma, ns, o.resolution, o.cap);
  emit_csv_row({"N", "probability", "exponent", "limit"});
  for (const auto& row : report.rows) {
    emit_csv_row({std::to_string(row.n), fmt(row.probability), fmt(row.exponent),
                  fmt(report.limit)});
  }
}

void setup_sanov(CLI::App& app) {
  auto o = std::make_shared<SanovOpts>();
  auto* sc = app.add_subcommand("sanov", "empirical-measure large deviations over types");
  sc->add_option("--measure", o->measure, "probability measure JSON file")->required();
  sc->add_option("--constraint", o->constraint, "constraint JSON file (ball or halfspace)")
      ->required();
  sc->add_option("--N-grid", o->n_grid, "a:b:step or comma list")->required();
  sc->add_option("--resolution", o->resolution, "simplex grid resolution for ball rates");
  sc->add_option("--cap", o->cap, "enumeration cap");
  sc->callback([o] { run_sanov(*o); });
}

// ------------------------------------------------------------------ fisher

struct FisherOpts {
  std::string family;
  std::string theta_grid;
};

void run_fisher(const FisherOpts& o) {
  const auto fam = load_family(o.family);
  const auto grid = parse_grid(o.theta_grid);
  emit_csv_row({"theta", "info", "energy"});
  double energy = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double theta = grid[i];
    if (i > 0) {
      energy += num::simpson_doubling([&fam](double t) { return fisher_info(fam, t); },
                                      grid[i - 1], theta);
    }
    emit_csv_row({fmt(theta), fmt(fisher_info(fam, theta)), fmt(energy)});
  }
}

void setup_fisher(CLI::App& app) {
  auto o = std::make_shared<FisherOpts>();
  auto* sc = app.add_subcommand("fisher", "Fisher information along a family, with path energy");
  sc->add_option("--family", o->family, "family JSON file")->required();
  sc->add_option("--theta-grid", o->theta_grid, "a:b:step inside the family interval")
      ->required();
  sc->callback([o] { run_fisher(*o); });
}

// ---------------------------------------------------------------- geodesic

struct GeodesicOpts {
  std::string p_path;
  std::string q_path;
};

void run_geodesic(const GeodesicOpts& o) {
  const auto p = load_prob_measure(o.p_path);
  const auto q = load_prob_measure(o.q_path);
  const double d = geodesic_distance(p, q);
  double affinity = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) affinity += std::sqrt(p.weight(i) * q.weight(i));
  json out;
  out["schema"] = 1;
  out["command"] = "geodesic";
  out["distance"] = jreal(d);
  out["affinity"] = jreal(affinity);
  out["variational_distance"] = jreal(variational_distance(p, q));
  emit_json(out);
}

void setup_geodesic(CLI::App& app) {
  auto o = std::make_shared<GeodesicOpts>();
  auto* sc = app.add_subcommand("geodesic", "sphere-geodesic (Bhattacharyya) distance");
  sc->add_option("--p", o->p_path, "first measure JSON file")->required();
  sc->add_option("--q", o->q_path, "second measure JSON file")->required();
  sc->callback([o] { run_geodesic(*o); });
}

// --------------------------------------------------------------------- mle

struct MleOpts {
  std::string family;
  std::string sample;
  int grid_points = 512;
};

void run_mle(const MleOpts& o) {
  const auto fam = load_family(o.family);
  const auto sample = load_sample(o.sample, fam.space());
  const auto r = mle(fam, sample, o.grid_points);
  json out;
  out["schema"] = 1;
  out["command"] = "mle";
  out["estimate"] = jreal(r.estimate);
  out["boundary_hit"] = r.boundary_hit;
  out["loglik"] = jreal(r.loglik);
  out["grid_points"] = o.grid_points;
  out["sample_size"] = sample.size();
  emit_json(out);
}

void setup_mle(CLI::App& app) {
  auto o = std::make_shared<MleOpts>();
  auto* sc = app.add_subcommand("mle", "maximum likelihood over a parametric family");
  sc->add_option("--family", o->family, "family JSON file")->required();
  sc->add_option("--sample", o->sample, "sample JSON file")->required();
  sc->add_option("--grid-points", o->grid_points, "coarse grid density (default 512)");
  sc->callback([o] { run_mle(*o); });
}

// -------------------------------------------------------------- efficiency

struct EfficiencyOpts {
  std::string family;
  double theta = 0.0;
  std::string n_grid;
  std::int64_t reps = 1000;
  std::uint64_t seed = 0;
};

void run_efficiency(const EfficiencyOpts& o) {
  const auto fam = load_family(o.family);
  const auto ns = parse_int_grid(o.n_grid);
  if (ns.empty()) throw InvalidInput("efficiency needs a non-empty --N-grid");
  const auto rows = efficiency_experiment(fam, {o.theta}, ns, o.reps, o.seed);
  emit_csv_row({"theta", "N", "n_risk", "std_error", "mean_abs_error", "inv_fisher"});
  for (const auto& r : rows) {
    emit_csv_row({fmt(r.theta), std::to_string(r.n), fmt(r.n_risk), fmt(r.std_error),
                  fmt(r.mean_abs_error), fmt(r.inv_fisher)});
  }
}

void setup_efficiency(CLI::App& app) {
  auto o = std::make_shared<EfficiencyOpts>();
  auto* sc = app.add_subcommand("efficiency", "Monte Carlo MLE risk against the Fisher bound");
  sc->add_option("--family", o->family, "family JSON file")->required();
  sc->add_option("--theta", o->theta, "interior parameter value")->required();
  sc->add_option("--N-grid", o->n_grid, "a:b:step or comma list")->required();
  sc->add_option("--reps", o->reps, "Monte Carlo replicas (default 1000)");
  sc->add_option("--seed", o->seed, "master seed");
  sc->callback([o] { run_efficiency(*o); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-alphabet information theory workbench"};
  app.require_subcommand(1);
  setup_entropy(app);
  setup_divergence(app);
  setup_rate(app);
  setup_cramer(app);
  setup_coding(app);
  setup_testing(app);
  setup_fluctuation(app);
  setup_sanov(app);
  setup_fisher(app);
  setup_geodesic(app);
  setup_mle(app);
  setup_efficiency(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(entropics::ExitCode::invalid_input);
  } catch (const entropics::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(entropics::ExitCode::invalid_input);
  }
  return 0;
}
