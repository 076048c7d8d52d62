#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <tuple>

#include "evoalg/iso_engine.hpp"

namespace evoalg {

struct SurveyOptions {
    int jobs = 1;
    std::uint64_t seed = 1;
    int evidence_restarts = 200;
    double tol = 1e-9;
    int exact_bound = kDefaultExactSizeBound;
    int numeric_bound = kDefaultNumericSizeBound;
};

struct SurveyRecord {
    std::string graph_id;  // normalized graph6 re-encoding of the input graph
    int n = 0;
    int edge_count = 0;
    BigInt det;
    RegularityClass cls;
    IsoVerdict verdict;
    double timing_ms = 0.0;
    // Singular, neither regular nor biregular, and the numeric search still
    // produced a nonzero candidate: needs manual follow-up.
    bool counterexample_candidate = false;
};

struct SurveySummary {
    int total_lines = 0;
    int emitted = 0;
    int skipped = 0;  // parse failures and over-bound graphs
    int counterexample_candidates = 0;
    // (singular, class, verdict) -> count
    std::map<std::tuple<bool, std::string, std::string>, int> cells;
};

// Reads graph6 lines from `in`, writes one JSON record per graph to `out` in
// input order (worker pool + reorder buffer), a JSON summary line last, and
// per-line diagnostics to `log`. Per-graph RNG seeds derive from
// (options.seed, line index), so every field except timing_ms is reproducible
// byte-for-byte for a fixed seed. Every record is guarded by a consistency
// assertion before emission: regular/biregular graphs must come out
// Isomorphic, and non-singular Neither graphs must come out
// OnlyNullHomomorphism (Error on violation).
SurveySummary run_survey(std::istream& in, std::ostream& out, std::ostream& log,
                         const SurveyOptions& options);

}  // namespace evoalg
