#pragma once

#include <json.hpp>

#include <string>

#include "lval/autgroup.hpp"
#include "lval/dynamics.hpp"
#include "lval/idempotents.hpp"
#include "lval/skew.hpp"

namespace lval {

using Json = nlohmann::json;

/// Antisymmetric matrix as {"n": 3, "upper": [[1, 2, "1/2"], ...]}: one
/// triple per nonzero strict-upper entry, 1-based indices, rational strings.
/// Parsing rejects out-of-range or diagonal positions and duplicates;
/// omitted positions are zero. Lower-triangle positions are accepted and
/// folded in as a_ji = -a_ij.
Json skew_to_json(const SkewMatrix& a);
SkewMatrix skew_from_json(const Json& j);

/// Element as an array of rational strings: ["3/2", "-1", "0"].
Json element_to_json(const Element& x);
Element element_from_json(const Json& j);

Json linear_map_to_json(const LinearMap& f);  // rows of rational strings

Json affine_family_to_json(const AffineFamily& fam);
Json support_solution_to_json(const SupportSolution& sol);

/// {"support": [...], "weight0": {...}, "weight1": {...}}.
Json support_pair_to_json(const SupportPair& pair);

Json enumeration_to_json(const EnumerationReport& report);

/// {"kind": ..., "order": int or "infinite", "iso_tag": ..., "generators":
///  [...], "families": [{"tag": ..., "arity": ...}]}.
Json aut_description_to_json(const AutDescription& d);

Json dim3_classification_to_json(const Dim3Classification& c);

Json weight_uniqueness_to_json(const WeightUniqueness& w);

Json question1_to_json(const Question1Report& report);

/// {"n": int, "entries": [[...floats...]]}; validated on parse.
Json interaction_to_json(const InteractionMatrix& m);
InteractionMatrix interaction_from_json(const Json& j);

/// {"terminal_state": [...], "terminal_derivative_norm": x,
///  "sum_drift_max": x, "left_unit_box": bool}.
Json trajectory_summary_to_json(const Trajectory& traj, const FloatAlgebra& alg);

/// Reads and parses a whole JSON file; errors carry the file name and a
/// one-line reason in std::runtime_error.
Json load_json_file(const std::string& path);
SkewMatrix load_skew_file(const std::string& path);
InteractionMatrix load_interaction_file(const std::string& path);

/// Serialization used by the command-line tool: object keys are emitted in
/// sorted order (the default object storage), so output is deterministic.
std::string dump_json(const Json& j);

}  // namespace lval
