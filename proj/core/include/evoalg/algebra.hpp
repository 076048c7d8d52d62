#pragma once

#include <string>
#include <vector>

#include "evoalg/graph.hpp"
#include "evoalg/matrix.hpp"
#include "evoalg/radical.hpp"

namespace evoalg {

// Evolution algebra over the rationals with a fixed natural basis e_1..e_n:
// e_i * e_i = sum_k C(i,k) e_k and e_i * e_j = 0 for i != j. The product is
// fully determined by the structure matrix C. Immutable.
class EvolutionAlgebra {
  public:
    explicit EvolutionAlgebra(RationalMatrix c, std::string name = "");

    int n() const { return c_.rows(); }
    const RationalMatrix& structure() const { return c_; }
    // Reporting label, e.g. "A(G)" or "A_RW(G)"; not part of equality.
    const std::string& name() const { return name_; }

    bool operator==(const EvolutionAlgebra& o) const { return c_ == o.c_; }

  private:
    RationalMatrix c_;
    std::string name_;
};

// Element coordinates in the natural basis. Radical sums rather than plain
// rationals so that images under witness maps (sqrt/cube-root scalars) stay
// exactly representable.
struct AlgebraElement {
    std::vector<RadicalSum> coords;

    static AlgebraElement zero(int n) { return {std::vector<RadicalSum>(static_cast<size_t>(n))}; }
    static AlgebraElement basis(int n, int i);

    int n() const { return static_cast<int>(coords.size()); }
    bool is_zero() const;
    bool operator==(const AlgebraElement&) const = default;
};

// Structure constants are the adjacency entries.
EvolutionAlgebra from_graph(const Graph& g);
// Structure constants a_ik / deg(i): the symmetric random walk on g.
EvolutionAlgebra from_random_walk(const Graph& g);

// (u*v)_k = sum_i u_i v_i C(i,k), the bilinear extension of the basis rules.
// Throws DimensionMismatch.
AlgebraElement multiply(const EvolutionAlgebra& alg, const AlgebraElement& u,
                        const AlgebraElement& v);

// True iff every structure constant lies in [0,1] and every row sums to 1.
bool is_markov(const EvolutionAlgebra& alg);

}  // namespace evoalg
