#pragma once

#include <string>
#include <vector>

#include "entropics/empirical.hpp"
#include "entropics/family.hpp"
#include "entropics/fluctuation.hpp"
#include "entropics/measure.hpp"

namespace entropics::io {

// Readers for the JSON input formats. All throw InvalidInput with a
// position-bearing message on malformed files.

// {"outcomes": ["H","T"], "weights": [0.5, 0.5]}; outcomes default to
// "0", "1", ... when absent.
ProbMeasure load_prob_measure(const std::string& path);

// {"values": [...]} with optional "outcomes" giving the label order.
RandomVar load_random_var(const std::string& path, const SpacePtr& space);

// {"perm": [1, 0, 2]}
Involution load_involution(const std::string& path, const SpacePtr& space);

// {"kind": "ball", "center": [...], "radius": r, "closed": true}
// {"kind": "halfspace", "rv": [...], "threshold": t, "direction": "geq", "closed": true}
ConstraintSet load_constraint(const std::string& path, const SpacePtr& space);

// {"sample": [0, 1, 1, 0]} by index, or labels as strings.
std::vector<std::size_t> load_sample(const std::string& path, const SpacePtr& space);

// {"kind":"bernoulli","interval":[a,b]}
// {"kind":"exponential","rv":[...],"interval":[a,b]} (chaotic base)
// {"kind":"table","thetas":[...],"measures":[[...],...]}
ParametricFamily load_family(const std::string& path);

// {"from": [...], "to": [...], "rows": [[...], ...]}
StochasticMap load_stochastic_map(const std::string& path);

}  // namespace entropics::io
