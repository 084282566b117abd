#include "entropics/io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "entropics/errors.hpp"

namespace entropics::io {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

const json& field(const json& j, const std::string& path, const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    throw InvalidInput(path + ": missing field \"" + name + "\"");
  return *it;
}

std::vector<double> as_doubles(const json& j, const std::string& path, const char* name) {
  if (!j.is_array()) throw InvalidInput(path + ": \"" + std::string(name) + "\" must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw InvalidInput(path + ": \"" + std::string(name) + "\" must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<std::string> as_labels(const json& j, const std::string& path) {
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (v.is_string())
      out.push_back(v.get<std::string>());
    else
      out.push_back(v.dump());
  }
  return out;
}

std::vector<std::string> default_labels(std::size_t l) {
  std::vector<std::string> out;
  out.reserve(l);
  for (std::size_t k = 0; k < l; ++k) out.push_back(std::to_string(k));
  return out;
}

SpacePtr space_of_size(std::size_t l) { return OutcomeSpace::make(default_labels(l)); }

}  // namespace

ProbMeasure load_prob_measure(const std::string& path) {
  json j = load_json(path);
  std::vector<double> w = as_doubles(field(j, path, "weights"), path, "weights");
  std::vector<std::string> labels;
  if (j.contains("outcomes"))
    labels = as_labels(j["outcomes"], path);
  else
    labels = default_labels(w.size());
  if (labels.size() != w.size())
    throw InvalidInput(path + ": outcomes and weights must have the same length");
  return ProbMeasure(OutcomeSpace::make(std::move(labels)), std::move(w));
}

RandomVar load_random_var(const std::string& path, const SpacePtr& space) {
  json j = load_json(path);
  std::vector<double> v = as_doubles(field(j, path, "values"), path, "values");
  if (v.size() != space->size())
    throw InvalidInput(path + ": values length does not match the measure's space");
  if (j.contains("outcomes")) {
    std::vector<std::string> labels = as_labels(j["outcomes"], path);
    if (labels.size() != v.size())
      throw InvalidInput(path + ": outcomes and values must have the same length");
    std::vector<double> reordered(v.size());
    for (std::size_t k = 0; k < labels.size(); ++k)
      reordered[space->index_of(labels[k])] = v[k];
    v = std::move(reordered);
  }
  return RandomVar(space, std::move(v));
}

Involution load_involution(const std::string& path, const SpacePtr& space) {
  json j = load_json(path);
  const json& arr = field(j, path, "perm");
  if (!arr.is_array()) throw InvalidInput(path + ": \"perm\" must be an array");
  std::vector<std::size_t> perm;
  perm.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number_unsigned())
      throw InvalidInput(path + ": \"perm\" must hold non-negative integers");
    perm.push_back(v.get<std::size_t>());
  }
  return make_involution(space, std::move(perm));
}

ConstraintSet load_constraint(const std::string& path, const SpacePtr& space) {
  json j = load_json(path);
  std::string kind = field(j, path, "kind").get<std::string>();
  bool closed = j.value("closed", true);
  if (kind == "ball") {
    std::vector<double> center = as_doubles(field(j, path, "center"), path, "center");
    if (center.size() != space->size())
      throw InvalidInput(path + ": center length does not match the space");
    double radius = field(j, path, "radius").get<double>();
    if (!(radius >= 0.0)) throw InvalidInput(path + ": radius must be non-negative");
    return BallConstraint{ProbMeasure(space, std::move(center)), radius, closed};
  }
  if (kind == "halfspace") {
    std::vector<double> values = as_doubles(field(j, path, "rv"), path, "rv");
    if (values.size() != space->size())
      throw InvalidInput(path + ": rv length does not match the space");
    double threshold = field(j, path, "threshold").get<double>();
    std::string dir = field(j, path, "direction").get<std::string>();
    if (dir != "geq" && dir != "leq")
      throw InvalidInput(path + ": direction must be \"geq\" or \"leq\"");
    return HalfspaceConstraint{RandomVar(space, std::move(values)), threshold,
                               dir == "geq", closed};
  }
  throw InvalidInput(path + ": unknown constraint kind \"" + kind + "\"");
}

std::vector<std::size_t> load_sample(const std::string& path, const SpacePtr& space) {
  json j = load_json(path);
  const json& arr = field(j, path, "sample");
  if (!arr.is_array()) throw InvalidInput(path + ": \"sample\" must be an array");
  std::vector<std::size_t> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (v.is_number_unsigned()) {
      std::size_t idx = v.get<std::size_t>();
      if (idx >= space->size()) throw InvalidInput(path + ": sample index out of range");
      out.push_back(idx);
    } else if (v.is_string()) {
      out.push_back(space->index_of(v.get<std::string>()));
    } else {
      throw InvalidInput(path + ": sample entries must be indices or labels");
    }
  }
  return out;
}

ParametricFamily load_family(const std::string& path) {
  json j = load_json(path);
  std::string kind = field(j, path, "kind").get<std::string>();
  if (kind == "bernoulli") {
    std::vector<double> iv = as_doubles(field(j, path, "interval"), path, "interval");
    if (iv.size() != 2) throw InvalidInput(path + ": interval must be [a, b]");
    return bernoulli_family(iv[0], iv[1]);
  }
  if (kind == "exponential") {
    std::vector<double> values = as_doubles(field(j, path, "rv"), path, "rv");
    std::vector<double> iv = as_doubles(field(j, path, "interval"), path, "interval");
    if (iv.size() != 2) throw InvalidInput(path + ": interval must be [a, b]");
    SpacePtr space = space_of_size(values.size());
    return exponential_tilt_family(ProbMeasure::chaotic(space),
                                   RandomVar(space, std::move(values)), iv[0], iv[1]);
  }
  if (kind == "table") {
    std::vector<double> thetas = as_doubles(field(j, path, "thetas"), path, "thetas");
    const json& rows = field(j, path, "measures");
    if (!rows.is_array() || rows.empty())
      throw InvalidInput(path + ": \"measures\" must be a non-empty array");
    std::vector<std::vector<double>> measures;
    for (const auto& r : rows) measures.push_back(as_doubles(r, path, "measures"));
    SpacePtr space = space_of_size(measures.front().size());
    return table_family(space, std::move(thetas), std::move(measures));
  }
  throw InvalidInput(path + ": unknown family kind \"" + kind + "\"");
}

StochasticMap load_stochastic_map(const std::string& path) {
  json j = load_json(path);
  std::vector<std::string> from = as_labels(field(j, path, "from"), path);
  std::vector<std::string> to = as_labels(field(j, path, "to"), path);
  const json& rows_json = field(j, path, "rows");
  if (!rows_json.is_array())
    throw InvalidInput(path + ": \"rows\" must be an array of arrays");
  std::vector<std::vector<double>> rows;
  for (const auto& r : rows_json) rows.push_back(as_doubles(r, path, "rows"));
  return StochasticMap(OutcomeSpace::make(std::move(from)),
                       OutcomeSpace::make(std::move(to)), std::move(rows));
}

}  // namespace entropics::io
