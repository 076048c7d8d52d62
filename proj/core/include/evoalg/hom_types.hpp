#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace evoalg {

// A candidate linear map found by the numeric least-squares search.
struct HomCandidate {
    enum class Class { Null, Monomial, General };

    std::vector<std::vector<double>> t;  // row i = coordinates of f(e_i)
    // max over basis pairs (i <= j) of |f(e_i)f(e_j) - f(e_i e_j)|_inf.
    double residual = 0.0;
    Class classification = Class::Null;

    bool is_null() const { return classification == Class::Null; }
};

std::string to_string(HomCandidate::Class c);

// Everything needed to reproduce and report one numeric search run.
struct HomEvidence {
    std::string graph_id;   // graph6
    std::string direction;  // "A_RW(G)->A(G)" or "A(G)->A_RW(G)"
    int restarts = 0;
    double tol = 0.0;
    std::uint64_t seed = 0;
    std::vector<HomCandidate> candidates;
    std::string conclusion;  // "null-only" or "nonzero-candidate-found"

    bool found_nonzero() const;
};

}  // namespace evoalg
