#pragma once

#include <optional>
#include <vector>

#include "evoalg/algebra.hpp"
#include "evoalg/graph.hpp"
#include "evoalg/hom_types.hpp"
#include "evoalg/maps.hpp"

namespace evoalg {

inline constexpr int kDefaultExactSizeBound = 12;
inline constexpr int kDefaultNumericSizeBound = 10;

// A permutation pi together with nonzero scalars solving the monomial
// homomorphism condition  a(i, pi^-1(k)) alpha_{pi^-1(k)} = deg(i) alpha_i^2
// a(pi(i), k); the induced f_pi: A_RW(G) -> A(G), e_i -> alpha_i e_{pi(i)}
// is then an isomorphism.
struct CondPiSolution {
    std::vector<int> pi;
    std::vector<RadicalScalar> alphas;
};

struct IsoVerdict {
    enum class Kind { Isomorphic, OnlyNullHomomorphism, Undecided };
    enum class Mechanism { Regular, Biregular, MonomialFound };

    Kind kind = Kind::Undecided;
    BigInt det;             // det of the adjacency matrix
    RegularityClass cls;
    bool singular = false;  // det == 0

    std::optional<Mechanism> mechanism;  // Isomorphic only
    std::optional<LinearMap> witness;    // Isomorphic only; passes is_isomorphism
    std::optional<HomEvidence> evidence; // Undecided only (when gathered)
};

struct DecideOptions {
    int exact_bound = kDefaultExactSizeBound;
    int numeric_bound = kDefaultNumericSizeBound;
    bool gather_evidence = true;
    int evidence_restarts = 200;
    double evidence_tol = 1e-9;
    std::uint64_t seed = 1;
};

// The complete decision for non-singular graphs, and the honest outcome
// otherwise:
//   det != 0: Regular/Biregular -> Isomorphic with verified witness;
//             Neither           -> OnlyNullHomomorphism.
//   det == 0: Regular/Biregular -> Isomorphic (the witnesses need no
//             non-singularity); Neither -> Undecided, with numeric
//             evidence attached when gathering is enabled and n fits
//             the numeric bound.
// Throws SizeBound.
IsoVerdict decide_iso(const Graph& g, const DecideOptions& opts = {});

// Solves the scalar condition for a fixed permutation. Returns nullopt when
// pi is not a graph automorphism (the support condition fails) or when the
// propagated scalar system has no all-nonzero real solution. When several
// real solutions exist the all-positive one is returned (the system forces
// positivity here, so it is unique).
std::optional<CondPiSolution> condpi_solve(const Graph& g, const std::vector<int>& pi);

// All monomial isomorphisms A_RW(G) -> A(G): enumerates graph automorphisms
// (the only permutations passing the support condition) and keeps those with
// scalars. Empty result = no monomial isomorphism exists. Throws SizeBound.
std::vector<CondPiSolution> monomial_iso_search(const Graph& g,
                                                int size_bound = kDefaultExactSizeBound);

// Packages a solution as the map f_pi: A_RW(G) -> A(G).
LinearMap condpi_to_map(const Graph& g, const CondPiSolution& sol);

// The automorphism group of an evolution algebra with non-singular structure
// matrix: all monomial maps g_pi(e_i) = alpha_i e_{pi(i)} satisfying
// c(i, pi^-1(k)) alpha_{pi^-1(k)} = alpha_i^2 c(pi(i), k). Every permutation
// preserving the support pattern of C is tried; each may admit several scalar
// vectors, all of which are returned. Requires the support digraph of C to be
// reachable from the least vertex of each weak component (true for all
// graph-derived algebras; UnsupportedStructure otherwise).
// Throws SingularStructureMatrix, SizeBound.
std::vector<CondPiSolution> aut_group(const EvolutionAlgebra& e,
                                      int size_bound = kDefaultExactSizeBound);

LinearMap aut_to_map(const EvolutionAlgebra& e, const CondPiSolution& sol);

// The d-regular correspondence between isomorphisms f: A_RW(G) -> A(G) and
// automorphisms g of A(G):  g = d f  and  f = (1/d) g. Verifies that the
// map's algebras come from a d-regular graph; throws NotRegular.
LinearMap rw_iso_to_aut(const LinearMap& f, int d);
LinearMap aut_to_rw_iso(const LinearMap& g, int d);

}  // namespace evoalg
