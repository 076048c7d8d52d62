#pragma once

#include <utility>
#include <vector>

#include "evoalg/algebra.hpp"
#include "evoalg/graph.hpp"
#include "evoalg/radical.hpp"

namespace evoalg {

// Linear map between evolution algebras with identified bases: row i of T
// holds the coordinates of f(e_i) in the target basis. Source and target are
// recorded explicitly because the two algebras of a graph are related by maps
// in both directions and silent direction mix-ups are the likeliest bug.
class LinearMap {
  public:
    LinearMap(EvolutionAlgebra source, EvolutionAlgebra target,
              std::vector<std::vector<RadicalScalar>> t);

    static LinearMap null_map(EvolutionAlgebra source, EvolutionAlgebra target);
    static LinearMap identity(EvolutionAlgebra source, EvolutionAlgebra target);
    static LinearMap diagonal(EvolutionAlgebra source, EvolutionAlgebra target,
                              std::vector<RadicalScalar> diag);
    // f(e_i) = alphas[i] * e_{pi[i]}.
    static LinearMap monomial(EvolutionAlgebra source, EvolutionAlgebra target,
                              const std::vector<int>& pi,
                              const std::vector<RadicalScalar>& alphas);

    int n() const { return static_cast<int>(t_.size()); }
    const EvolutionAlgebra& source() const { return source_; }
    const EvolutionAlgebra& target() const { return target_; }
    const RadicalScalar& entry(int i, int k) const { return t_[i][k]; }
    const std::vector<std::vector<RadicalScalar>>& matrix() const { return t_; }

    // Exactly one nonzero entry in every row and every column, i.e.
    // f(e_i) = alpha_i e_{pi(i)} with pi a permutation and all alpha_i != 0.
    bool is_monomial() const;

    // Entrywise scaling (used by the regular-graph correspondence).
    LinearMap scaled(const RadicalScalar& c, EvolutionAlgebra new_source,
                     EvolutionAlgebra new_target) const;

    bool same_matrix(const LinearMap& o) const { return t_ == o.t_; }

  private:
    EvolutionAlgebra source_, target_;
    std::vector<std::vector<RadicalScalar>> t_;
};

// Coordinates of f(u): (u^T T). Throws DimensionMismatch.
AlgebraElement apply(const LinearMap& f, const AlgebraElement& u);

// f(e_i * e_j) = f(e_i) * f(e_j) checked on all basis pairs i <= j, which
// suffices: both sides are bilinear in (u,v), so agreement on basis pairs
// extends to all elements (the randomized cross-check lives in the tests).
bool is_homomorphism(const LinearMap& f);

// Exact invertibility of T. Monomial maps short-circuit to "all scalars
// nonzero"; the general case takes a division-free determinant over
// radical sums (exponential in n, fine at decision sizes).
bool is_invertible(const LinearMap& f);

// is_homomorphism and invertible.
bool is_isomorphism(const LinearMap& f);

struct IsotopyResult {
    bool holds = false;
    bool strong = false;  // f and g coincide entrywise
};

// f(e_i) * g(e_j) = h(e_i * e_j) on all basis pairs including i = j; all
// three maps must share source and target and be invertible (SingularMap).
IsotopyResult is_isotopism(const LinearMap& f, const LinearMap& g, const LinearMap& h);

// The universal strong isotopy A(G) -> A_RW(G): f diagonal with entries
// sqrt(deg(i)), h the identity. is_isotopism(f, f, h) holds for every graph.
std::pair<LinearMap, LinearMap> strong_isotopy_witness(const Graph& g);

// Regular(d): f = (1/d) id as a map A_RW(G) -> A(G).
// Biregular(d1,d2): f diagonal A(G) -> A_RW(G) with (d1^2 d2)^(1/3) on the
// side of vertex 0 and (d1 d2^2)^(1/3) on the other side.
// Throws NotRegularOrBiregular when cls is Neither.
LinearMap biregular_iso_witness(const Graph& g, const RegularityClass& cls);

// g after f (apply f first). Supported when either factor is monomial, which
// keeps every entry a single radical term. Throws DimensionMismatch on
// source/target mismatch, UnsupportedStructure otherwise.
LinearMap compose(const LinearMap& g, const LinearMap& f);

}  // namespace evoalg
