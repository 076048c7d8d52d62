#pragma once

#include <cstdint>
#include <vector>

#include "evoalg/algebra.hpp"
#include "evoalg/graph.hpp"
#include "evoalg/hom_types.hpp"
#include "evoalg/iso_engine.hpp"

namespace evoalg {

enum class HomDirection { RwToAdj, AdjToRw };
std::string to_string(HomDirection d);

struct StructuralClassification {
    bool null_only = false;
    // Nonempty iff !null_only: the complete monomial family.
    std::vector<CondPiSolution> family;
};

// The non-singular dichotomy, decided exactly: every nonzero homomorphism
// A_RW(G) -> A(G) has pairwise disjoint row supports (the i != j conditions
// force t_ik t_jk into null(A^T) = 0), is therefore monomial, and is then an
// isomorphism pinned by the scalar condition. So the classification is the
// monomial family, or null-only when that family is empty.
// Throws SingularGraph when det(A) = 0, SizeBound.
StructuralClassification structural_hom_classify(const Graph& g,
                                                 int size_bound = kDefaultExactSizeBound);

// The quadratic residual system whose zeros are the homomorphisms
// f: source -> target, in doubles; one residual per basis pair (i <= j) and
// target coordinate. Exposed so the analytic Jacobian can be cross-checked
// against finite differences.
class HomSystem {
  public:
    HomSystem(const EvolutionAlgebra& source, const EvolutionAlgebra& target);

    int n() const { return n_; }
    int num_vars() const { return n_ * n_; }
    int num_residuals() const { return n_ * (n_ + 1) / 2 * n_; }

    // x is the flattened map matrix, row-major: x[i*n+k] = t_ik.
    std::vector<double> residual(const std::vector<double>& x) const;
    // Row-major num_residuals x num_vars; entries are exact polynomials in x.
    std::vector<double> jacobian(const std::vector<double>& x) const;

    double max_abs_residual(const std::vector<double>& x) const;

  private:
    int n_;
    std::vector<double> cs_, ct_;  // source/target structure, row-major
};

// Seeded multi-start damped Gauss-Newton minimization of the squared residual
// over all n^2 map entries. Returns deduplicated candidates sorted by
// (residual, entries), always including the null map (an exact zero). Only
// minima with residual <= tol are reported. Deterministic for a fixed seed.
// Throws SizeBound.
std::vector<HomCandidate> numeric_hom_search(const Graph& g, int restarts, double tol,
                                             std::uint64_t seed,
                                             HomDirection dir = HomDirection::RwToAdj,
                                             int size_bound = kDefaultNumericSizeBound);

// numeric_hom_search packaged with its parameters and conclusion.
HomEvidence gather_hom_evidence(const Graph& g, int restarts, double tol, std::uint64_t seed,
                                HomDirection dir = HomDirection::RwToAdj,
                                int size_bound = kDefaultNumericSizeBound);

}  // namespace evoalg
