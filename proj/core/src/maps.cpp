#include "evoalg/maps.hpp"

#include <cstdint>
#include <unordered_map>

#include "evoalg/errors.hpp"

namespace evoalg {

LinearMap::LinearMap(EvolutionAlgebra source, EvolutionAlgebra target,
                     std::vector<std::vector<RadicalScalar>> t)
    : source_(std::move(source)), target_(std::move(target)), t_(std::move(t)) {
    if (source_.n() != target_.n())
        throw DimensionMismatch("linear map: source and target sizes differ");
    if (static_cast<int>(t_.size()) != source_.n())
        throw DimensionMismatch("linear map: matrix has wrong row count");
    for (const auto& row : t_)
        if (static_cast<int>(row.size()) != source_.n())
            throw DimensionMismatch("linear map: matrix has wrong column count");
}

LinearMap LinearMap::null_map(EvolutionAlgebra source, EvolutionAlgebra target) {
    const int n = source.n();
    std::vector<std::vector<RadicalScalar>> t(n, std::vector<RadicalScalar>(n));
    return LinearMap(std::move(source), std::move(target), std::move(t));
}

LinearMap LinearMap::identity(EvolutionAlgebra source, EvolutionAlgebra target) {
    const int n = source.n();
    std::vector<std::vector<RadicalScalar>> t(n, std::vector<RadicalScalar>(n));
    for (int i = 0; i < n; ++i) t[i][i] = RadicalScalar(BigRational(1));
    return LinearMap(std::move(source), std::move(target), std::move(t));
}

LinearMap LinearMap::diagonal(EvolutionAlgebra source, EvolutionAlgebra target,
                              std::vector<RadicalScalar> diag) {
    const int n = source.n();
    if (static_cast<int>(diag.size()) != n)
        throw DimensionMismatch("diagonal map: wrong number of entries");
    std::vector<std::vector<RadicalScalar>> t(n, std::vector<RadicalScalar>(n));
    for (int i = 0; i < n; ++i) t[i][i] = std::move(diag[i]);
    return LinearMap(std::move(source), std::move(target), std::move(t));
}

LinearMap LinearMap::monomial(EvolutionAlgebra source, EvolutionAlgebra target,
                              const std::vector<int>& pi,
                              const std::vector<RadicalScalar>& alphas) {
    const int n = source.n();
    if (static_cast<int>(pi.size()) != n || static_cast<int>(alphas.size()) != n)
        throw DimensionMismatch("monomial map: wrong number of entries");
    std::vector<bool> hit(n, false);
    for (int i = 0; i < n; ++i) {
        if (pi[i] < 0 || pi[i] >= n) throw VertexOutOfRange("monomial map: pi out of range");
        if (hit[pi[i]]) throw Error("monomial map: pi is not a permutation");
        hit[pi[i]] = true;
    }
    std::vector<std::vector<RadicalScalar>> t(n, std::vector<RadicalScalar>(n));
    for (int i = 0; i < n; ++i) t[i][pi[i]] = alphas[i];
    return LinearMap(std::move(source), std::move(target), std::move(t));
}

bool LinearMap::is_monomial() const {
    const int n = this->n();
    std::vector<bool> col_used(n, false);
    for (int i = 0; i < n; ++i) {
        int nonzero = -1;
        for (int k = 0; k < n; ++k) {
            if (t_[i][k].is_zero()) continue;
            if (nonzero >= 0) return false;
            nonzero = k;
        }
        if (nonzero < 0 || col_used[nonzero]) return false;
        col_used[nonzero] = true;
    }
    return true;
}

LinearMap LinearMap::scaled(const RadicalScalar& c, EvolutionAlgebra new_source,
                            EvolutionAlgebra new_target) const {
    auto t = t_;
    for (auto& row : t)
        for (auto& e : row) e = e * c;
    return LinearMap(std::move(new_source), std::move(new_target), std::move(t));
}

AlgebraElement apply(const LinearMap& f, const AlgebraElement& u) {
    const int n = f.n();
    if (u.n() != n) throw DimensionMismatch("apply: element length does not match map");
    AlgebraElement out = AlgebraElement::zero(n);
    for (int i = 0; i < n; ++i) {
        if (u.coords[i].is_zero()) continue;
        for (int k = 0; k < n; ++k) {
            if (f.entry(i, k).is_zero()) continue;
            out.coords[k] += u.coords[i] * RadicalSum(f.entry(i, k));
        }
    }
    return out;
}

namespace {

AlgebraElement map_row(const LinearMap& f, int i) {
    AlgebraElement row = AlgebraElement::zero(f.n());
    for (int k = 0; k < f.n(); ++k) row.coords[k] = RadicalSum(f.entry(i, k));
    return row;
}

}  // namespace

bool is_homomorphism(const LinearMap& f) {
    const int n = f.n();
    std::vector<AlgebraElement> rows;
    rows.reserve(n);
    for (int i = 0; i < n; ++i) rows.push_back(map_row(f, i));

    for (int i = 0; i < n; ++i) {
        // Diagonal pair: f(e_i)^2 must equal f of the structure row of e_i.
        AlgebraElement lhs = multiply(f.target(), rows[i], rows[i]);
        AlgebraElement image = AlgebraElement::zero(n);
        for (int k = 0; k < n; ++k) {
            const BigRational& c = f.source().structure()(i, k);
            if (c == 0) continue;
            for (int l = 0; l < n; ++l)
                image.coords[l] += RadicalSum(RadicalScalar(c) * f.entry(k, l));
        }
        if (!(lhs == image)) return false;
        // Off-diagonal pairs: e_i e_j = 0 in the source, so images must
        // annihilate each other in the target.
        for (int j = i + 1; j < n; ++j)
            if (!multiply(f.target(), rows[i], rows[j]).is_zero()) return false;
    }
    return true;
}

namespace {

// Division-free determinant over radical sums: Laplace expansion down the
// rows, memoized on the set of still-available columns. O(2^n * n) sum
// products, fine at decision sizes.
RadicalSum subset_det(const std::vector<std::vector<RadicalScalar>>& t, uint32_t cols,
                      std::unordered_map<uint32_t, RadicalSum>& memo) {
    if (cols == 0) return RadicalSum(BigRational(1));
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;

    const int n = static_cast<int>(t.size());
    const int row = n - __builtin_popcount(cols);
    RadicalSum acc;
    int position = 0;  // index of column k within the surviving set
    for (int k = 0; k < n; ++k) {
        if (!(cols & (1u << k))) continue;
        if (!t[row][k].is_zero()) {
            RadicalSum term = RadicalSum(t[row][k]) * subset_det(t, cols & ~(1u << k), memo);
            if (position % 2 == 1) term = term * RadicalSum(BigRational(-1));
            acc += term;
        }
        ++position;
    }
    memo.emplace(cols, acc);
    return acc;
}

}  // namespace

bool is_invertible(const LinearMap& f) {
    if (f.is_monomial()) return true;
    const int n = f.n();
    if (n > 30) throw SizeBound("is_invertible: exact determinant limited to n <= 30");
    std::unordered_map<uint32_t, RadicalSum> memo;
    return !subset_det(f.matrix(), (1u << n) - 1, memo).is_zero();
}

bool is_isomorphism(const LinearMap& f) { return is_homomorphism(f) && is_invertible(f); }

IsotopyResult is_isotopism(const LinearMap& f, const LinearMap& g, const LinearMap& h) {
    const int n = f.n();
    if (g.n() != n || h.n() != n)
        throw DimensionMismatch("isotopism: maps have different sizes");
    if (!(f.source().structure() == g.source().structure() &&
          f.source().structure() == h.source().structure() &&
          f.target().structure() == g.target().structure() &&
          f.target().structure() == h.target().structure()))
        throw DimensionMismatch("isotopism: maps do not share source and target");
    if (!is_invertible(f) || !is_invertible(g) || !is_invertible(h))
        throw SingularMap("isotopism requires all three maps invertible");

    std::vector<AlgebraElement> f_rows, g_rows;
    for (int i = 0; i < n; ++i) {
        f_rows.push_back(map_row(f, i));
        g_rows.push_back(map_row(g, i));
    }

    IsotopyResult res;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            AlgebraElement lhs = multiply(f.target(), f_rows[i], g_rows[j]);
            if (i != j) {
                // e_i e_j = 0 in the source, so h maps it to zero.
                if (!lhs.is_zero()) return res;
                continue;
            }
            AlgebraElement rhs = AlgebraElement::zero(n);
            for (int k = 0; k < n; ++k) {
                const BigRational& c = f.source().structure()(i, k);
                if (c == 0) continue;
                for (int l = 0; l < n; ++l)
                    rhs.coords[l] += RadicalSum(RadicalScalar(c) * h.entry(k, l));
            }
            if (!(lhs == rhs)) return res;
        }
    }
    res.holds = true;
    res.strong = f.same_matrix(g);
    return res;
}

std::pair<LinearMap, LinearMap> strong_isotopy_witness(const Graph& g) {
    EvolutionAlgebra source = from_graph(g);
    EvolutionAlgebra target = from_random_walk(g);
    std::vector<RadicalScalar> diag;
    diag.reserve(g.n());
    for (int i = 0; i < g.n(); ++i) diag.push_back(RadicalScalar::sqrt_of(BigRational(g.degree(i))));
    LinearMap f = LinearMap::diagonal(source, target, std::move(diag));
    LinearMap h = LinearMap::identity(source, target);
    return {std::move(f), std::move(h)};
}

LinearMap biregular_iso_witness(const Graph& g, const RegularityClass& cls) {
    const int n = g.n();
    if (cls.kind == RegularityClass::Kind::Regular) {
        std::vector<RadicalScalar> diag(n, RadicalScalar(make_rational(1, cls.d1)));
        return LinearMap::diagonal(from_random_walk(g), from_graph(g), std::move(diag));
    }
    if (cls.kind == RegularityClass::Kind::Biregular && cls.bipartition) {
        const BigRational d1(cls.d1), d2(cls.d2);
        RadicalScalar side1 = RadicalScalar::root_of(d1 * d1 * d2, make_rational(1, 3));
        RadicalScalar side2 = RadicalScalar::root_of(d1 * d2 * d2, make_rational(1, 3));
        std::vector<RadicalScalar> diag(n);
        for (int v : cls.bipartition->v1) diag[v] = side1;
        for (int v : cls.bipartition->v2) diag[v] = side2;
        return LinearMap::diagonal(from_graph(g), from_random_walk(g), std::move(diag));
    }
    throw NotRegularOrBiregular("no scalar isomorphism witness for this degree pattern");
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
    const int n = f.n();
    if (g.n() != n || !(f.target().structure() == g.source().structure()))
        throw DimensionMismatch("compose: inner target does not match outer source");

    std::vector<std::vector<RadicalScalar>> t(n, std::vector<RadicalScalar>(n));
    if (f.is_monomial()) {
        for (int i = 0; i < n; ++i) {
            int j = 0;
            while (f.entry(i, j).is_zero()) ++j;
            for (int k = 0; k < n; ++k)
                if (!g.entry(j, k).is_zero()) t[i][k] = f.entry(i, j) * g.entry(j, k);
        }
    } else if (g.is_monomial()) {
        std::vector<int> image(n);  // column of the single nonzero in row j of g
        for (int j = 0; j < n; ++j) {
            int k = 0;
            while (g.entry(j, k).is_zero()) ++k;
            image[j] = k;
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!f.entry(i, j).is_zero()) t[i][image[j]] = f.entry(i, j) * g.entry(j, image[j]);
    } else {
        throw UnsupportedStructure("compose: supported only when one factor is monomial");
    }
    return LinearMap(f.source(), g.target(), std::move(t));
}

}  // namespace evoalg
