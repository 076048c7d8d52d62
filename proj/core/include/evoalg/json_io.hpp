#pragma once

#include <string>

#include "evoalg/algebra.hpp"
#include "evoalg/hom_types.hpp"
#include "evoalg/iso_engine.hpp"
#include "evoalg/maps.hpp"
#include "evoalg/survey.hpp"

namespace evoalg {

// Stable lowercase names shared by the JSON schemas and the text reports.
std::string kind_string(IsoVerdict::Kind k);
std::string mechanism_string(IsoVerdict::Mechanism m);
std::string regularity_string(RegularityClass::Kind k);

// Compact single-line JSON with fixed key order, so fixed-seed runs are
// reproducible byte-for-byte. Schemas:
//   algebra:  {"n", "C": [["num/den", ...], ...]}
//   scalar:   {"coeff": "num/den", "radicals": [[p, "num/den"], ...]}
//   map:      {"n", "source", "target", "T": [[scalar, ...], ...]}
//   class:    {"kind", "d"? , "d1"?, "d2"?, "v1"?, "v2"?}   (1-based sides)
//   verdict:  {"graph_id"?, "n", "det", "class", "verdict", "mechanism"?,
//              "witness"?, "aut_size"?, "evidence"?}
//   evidence: {"graph_id", "direction", "restarts", "tol", "seed",
//              "candidates": [{"residual", "classification", "T"}], "conclusion"}
//   record:   {"graph_id", "n", "edge_count", "det", "class", "verdict",
//              "mechanism"?, "timing_ms", "flag"?}
std::string to_json(const EvolutionAlgebra& a);
std::string to_json(const RadicalScalar& s);
std::string to_json(const LinearMap& f);
std::string to_json(const RegularityClass& c);
std::string to_json(const HomCandidate& c);
std::string to_json(const HomEvidence& e);
std::string to_json(const IsoVerdict& v, const std::string& graph_id = "",
                    int aut_size = -1);
std::string to_json(const SurveyRecord& r);
std::string to_json(const SurveySummary& s);

}  // namespace evoalg
