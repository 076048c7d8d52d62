#include "evoalg/algebra.hpp"

#include <utility>

namespace evoalg {

EvolutionAlgebra::EvolutionAlgebra(RationalMatrix c, std::string name)
    : c_(std::move(c)), name_(std::move(name)) {
    if (!c_.square()) throw NonSquare("structure matrix must be square");
}

AlgebraElement AlgebraElement::basis(int n, int i) {
    if (i < 0 || i >= n) throw VertexOutOfRange("basis index out of range");
    AlgebraElement e = zero(n);
    e.coords[i] = RadicalSum(BigRational(1));
    return e;
}

bool AlgebraElement::is_zero() const {
    for (const auto& c : coords)
        if (!c.is_zero()) return false;
    return true;
}

EvolutionAlgebra from_graph(const Graph& g) {
    RationalMatrix c(g.n(), g.n());
    for (auto [u, v] : g.edges()) c(u, v) = c(v, u) = 1;
    return EvolutionAlgebra(std::move(c), "A(G)");
}

EvolutionAlgebra from_random_walk(const Graph& g) {
    RationalMatrix c(g.n(), g.n());
    for (int i = 0; i < g.n(); ++i)
        for (int k : g.neighbors(i)) c(i, k) = make_rational(1, g.degree(i));
    return EvolutionAlgebra(std::move(c), "A_RW(G)");
}

AlgebraElement multiply(const EvolutionAlgebra& alg, const AlgebraElement& u,
                        const AlgebraElement& v) {
    const int n = alg.n();
    if (u.n() != n || v.n() != n)
        throw DimensionMismatch("multiply: element length does not match algebra");
    AlgebraElement out = AlgebraElement::zero(n);
    for (int i = 0; i < n; ++i) {
        if (u.coords[i].is_zero() || v.coords[i].is_zero()) continue;
        RadicalSum uv = u.coords[i] * v.coords[i];
        for (int k = 0; k < n; ++k) {
            const BigRational& c = alg.structure()(i, k);
            if (c == 0) continue;
            out.coords[k] += uv * RadicalSum(BigRational(c));
        }
    }
    return out;
}

bool is_markov(const EvolutionAlgebra& alg) {
    for (int i = 0; i < alg.n(); ++i) {
        BigRational row_sum(0);
        for (int k = 0; k < alg.n(); ++k) {
            const BigRational& c = alg.structure()(i, k);
            if (c < 0 || c > 1) return false;
            row_sum += c;
        }
        if (row_sum != 1) return false;
    }
    return true;
}

}  // namespace evoalg
