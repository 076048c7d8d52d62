#include "evoalg/json_io.hpp"

#include <json.hpp>

namespace evoalg {

using ordered_json = nlohmann::ordered_json;

std::string kind_string(IsoVerdict::Kind k) {
    switch (k) {
        case IsoVerdict::Kind::Isomorphic: return "isomorphic";
        case IsoVerdict::Kind::OnlyNullHomomorphism: return "only-null-homomorphism";
        default: return "undecided";
    }
}

std::string mechanism_string(IsoVerdict::Mechanism m) {
    switch (m) {
        case IsoVerdict::Mechanism::Regular: return "regular";
        case IsoVerdict::Mechanism::Biregular: return "biregular";
        default: return "monomial";
    }
}

std::string regularity_string(RegularityClass::Kind k) {
    switch (k) {
        case RegularityClass::Kind::Regular: return "regular";
        case RegularityClass::Kind::Biregular: return "biregular";
        default: return "neither";
    }
}

namespace {

ordered_json algebra_json(const EvolutionAlgebra& a) {
    ordered_json j;
    j["n"] = a.n();
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < a.n(); ++i) {
        ordered_json row = ordered_json::array();
        for (int k = 0; k < a.n(); ++k) row.push_back(rational_string(a.structure()(i, k)));
        rows.push_back(std::move(row));
    }
    j["C"] = std::move(rows);
    return j;
}

ordered_json scalar_json(const RadicalScalar& s) {
    ordered_json j;
    j["coeff"] = rational_string(s.coeff());
    ordered_json rads = ordered_json::array();
    for (const auto& [p, e] : s.radicals())
        rads.push_back(ordered_json::array({int_string(p), rational_string(e)}));
    j["radicals"] = std::move(rads);
    return j;
}

ordered_json map_json(const LinearMap& f) {
    ordered_json j;
    j["n"] = f.n();
    j["source"] = f.source().name();
    j["target"] = f.target().name();
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < f.n(); ++i) {
        ordered_json row = ordered_json::array();
        for (int k = 0; k < f.n(); ++k) row.push_back(scalar_json(f.entry(i, k)));
        rows.push_back(std::move(row));
    }
    j["T"] = std::move(rows);
    return j;
}

ordered_json class_json(const RegularityClass& c) {
    ordered_json j;
    j["kind"] = regularity_string(c.kind);
    if (c.kind == RegularityClass::Kind::Regular) j["d"] = c.d1;
    if (c.kind == RegularityClass::Kind::Biregular) {
        j["d1"] = c.d1;
        j["d2"] = c.d2;
    }
    if (c.bipartition) {
        ordered_json v1 = ordered_json::array(), v2 = ordered_json::array();
        for (int v : c.bipartition->v1) v1.push_back(v + 1);
        for (int v : c.bipartition->v2) v2.push_back(v + 1);
        j["v1"] = std::move(v1);
        j["v2"] = std::move(v2);
    }
    return j;
}

ordered_json candidate_json(const HomCandidate& c) {
    ordered_json j;
    j["residual"] = c.residual;
    j["classification"] = to_string(c.classification);
    j["T"] = c.t;
    return j;
}

ordered_json evidence_json(const HomEvidence& e) {
    ordered_json j;
    j["graph_id"] = e.graph_id;
    j["direction"] = e.direction;
    j["restarts"] = e.restarts;
    j["tol"] = e.tol;
    j["seed"] = e.seed;
    ordered_json cands = ordered_json::array();
    for (const auto& c : e.candidates) cands.push_back(candidate_json(c));
    j["candidates"] = std::move(cands);
    j["conclusion"] = e.conclusion;
    return j;
}

// Short-form graph6 starts with chr(n + 63) for n <= 62, which covers every
// size the engine accepts.
int n_from_graph6(const std::string& id) {
    if (id.empty() || id[0] < 63 || id[0] > 63 + 62) return -1;
    return id[0] - 63;
}

ordered_json verdict_json(const IsoVerdict& v, const std::string& graph_id, int aut_size) {
    ordered_json j;
    if (!graph_id.empty()) j["graph_id"] = graph_id;
    int n = n_from_graph6(graph_id);
    if (n < 0 && v.witness) n = v.witness->n();
    if (n < 0 && v.evidence) n = n_from_graph6(v.evidence->graph_id);
    if (n >= 0) j["n"] = n;
    j["det"] = int_string(v.det);
    j["class"] = class_json(v.cls);
    j["verdict"] = kind_string(v.kind);
    if (v.mechanism) j["mechanism"] = mechanism_string(*v.mechanism);
    if (v.witness) j["witness"] = map_json(*v.witness);
    if (aut_size >= 0) j["aut_size"] = aut_size;
    if (v.evidence) j["evidence"] = evidence_json(*v.evidence);
    return j;
}

}  // namespace

std::string to_json(const EvolutionAlgebra& a) { return algebra_json(a).dump(); }
std::string to_json(const RadicalScalar& s) { return scalar_json(s).dump(); }
std::string to_json(const LinearMap& f) { return map_json(f).dump(); }
std::string to_json(const RegularityClass& c) { return class_json(c).dump(); }
std::string to_json(const HomCandidate& c) { return candidate_json(c).dump(); }
std::string to_json(const HomEvidence& e) { return evidence_json(e).dump(); }

std::string to_json(const IsoVerdict& v, const std::string& graph_id, int aut_size) {
    return verdict_json(v, graph_id, aut_size).dump();
}

std::string to_json(const SurveyRecord& r) {
    ordered_json j;
    j["graph_id"] = r.graph_id;
    j["n"] = r.n;
    j["edge_count"] = r.edge_count;
    j["det"] = int_string(r.det);
    j["class"] = class_json(r.cls);
    j["verdict"] = kind_string(r.verdict.kind);
    if (r.verdict.mechanism) j["mechanism"] = mechanism_string(*r.verdict.mechanism);
    j["timing_ms"] = r.timing_ms;
    if (r.counterexample_candidate) j["flag"] = "CONJECTURE-COUNTEREXAMPLE-CANDIDATE";
    return j.dump();
}

std::string to_json(const SurveySummary& s) {
    ordered_json j;
    j["total_lines"] = s.total_lines;
    j["emitted"] = s.emitted;
    j["skipped"] = s.skipped;
    j["counterexample_candidates"] = s.counterexample_candidates;
    ordered_json cells = ordered_json::array();
    for (const auto& [key, count] : s.cells) {
        ordered_json cell;
        cell["singular"] = std::get<0>(key);
        cell["class"] = std::get<1>(key);
        cell["verdict"] = std::get<2>(key);
        cell["count"] = count;
        cells.push_back(std::move(cell));
    }
    j["cells"] = std::move(cells);
    return j.dump();
}

}  // namespace evoalg
