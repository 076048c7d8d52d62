#include "evoalg/hom_search.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

#include "evoalg/errors.hpp"
#include "evoalg/matrix.hpp"

namespace evoalg {

std::string to_string(HomDirection d) {
    return d == HomDirection::RwToAdj ? "A_RW(G)->A(G)" : "A(G)->A_RW(G)";
}

std::string to_string(HomCandidate::Class c) {
    switch (c) {
        case HomCandidate::Class::Null: return "null";
        case HomCandidate::Class::Monomial: return "monomial";
        default: return "general";
    }
}

bool HomEvidence::found_nonzero() const {
    return std::any_of(candidates.begin(), candidates.end(),
                       [](const HomCandidate& c) { return !c.is_null(); });
}

StructuralClassification structural_hom_classify(const Graph& g, int size_bound) {
    if (g.n() > size_bound)
        throw SizeBound("structural_hom_classify: graph exceeds the size bound");
    if (det(g.adjacency_matrix()) == 0)
        throw SingularGraph("structural_hom_classify requires a non-singular adjacency matrix");
    StructuralClassification out;
    out.family = monomial_iso_search(g, size_bound);
    out.null_only = out.family.empty();
    return out;
}

HomSystem::HomSystem(const EvolutionAlgebra& source, const EvolutionAlgebra& target)
    : n_(source.n()) {
    if (target.n() != n_) throw DimensionMismatch("hom system: algebra sizes differ");
    cs_.resize(n_ * n_);
    ct_.resize(n_ * n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            cs_[i * n_ + k] = source.structure()(i, k).get_d();
            ct_[i * n_ + k] = target.structure()(i, k).get_d();
        }
}

std::vector<double> HomSystem::residual(const std::vector<double>& x) const {
    const int n = n_;
    std::vector<double> r(num_residuals(), 0.0);
    int idx = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            for (int l = 0; l < n; ++l, ++idx) {
                double acc = 0.0;
                for (int k = 0; k < n; ++k) acc += x[i * n + k] * x[j * n + k] * ct_[k * n + l];
                if (i == j)
                    for (int k = 0; k < n; ++k) acc -= cs_[i * n + k] * x[k * n + l];
                r[idx] = acc;
            }
        }
    }
    return r;
}

std::vector<double> HomSystem::jacobian(const std::vector<double>& x) const {
    const int n = n_;
    const int vars = num_vars();
    std::vector<double> jac(static_cast<std::size_t>(num_residuals()) * vars, 0.0);
    int idx = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            for (int l = 0; l < n; ++l, ++idx) {
                double* row = &jac[static_cast<std::size_t>(idx) * vars];
                for (int q = 0; q < n; ++q) {
                    if (i == j) {
                        row[i * n + q] += 2.0 * x[i * n + q] * ct_[q * n + l];
                    } else {
                        row[i * n + q] += x[j * n + q] * ct_[q * n + l];
                        row[j * n + q] += x[i * n + q] * ct_[q * n + l];
                    }
                }
                if (i == j)
                    for (int k = 0; k < n; ++k) row[k * n + l] -= cs_[i * n + k];
            }
        }
    }
    return jac;
}

double HomSystem::max_abs_residual(const std::vector<double>& x) const {
    double m = 0.0;
    for (double v : residual(x)) m = std::max(m, std::abs(v));
    return m;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Levenberg-Marquardt on the squared residual; large lambda degrades to a
// scaled gradient step, so no separate fallback is needed.
std::vector<double> lm_minimize(const HomSystem& sys, std::vector<double> x) {
    using Eigen::MatrixXd;
    using Eigen::VectorXd;
    const int vars = sys.num_vars();
    const int res = sys.num_residuals();

    auto cost_of = [&](const std::vector<double>& p) {
        double c = 0.0;
        for (double v : sys.residual(p)) c += v * v;
        return c;
    };

    double lambda = 1e-3;
    double cost = cost_of(x);
    for (int iter = 0; iter < 400 && cost > 1e-28; ++iter) {
        std::vector<double> rv = sys.residual(x);
        std::vector<double> jv = sys.jacobian(x);
        Eigen::Map<VectorXd> r(rv.data(), res);
        Eigen::Map<MatrixXd> jt(jv.data(), vars, res);  // row-major J = column-major J^T
        VectorXd g = jt * r;
        if (g.lpNorm<Eigen::Infinity>() < 1e-15) break;
        MatrixXd h = jt * jt.transpose();

        bool accepted = false;
        while (lambda < 1e12) {
            MatrixXd damped = h;
            damped.diagonal().array() += lambda;
            VectorXd delta = damped.ldlt().solve(-g);
            std::vector<double> trial = x;
            for (int v = 0; v < vars; ++v) trial[v] += delta[v];
            double trial_cost = cost_of(trial);
            if (std::isfinite(trial_cost) && trial_cost < cost) {
                const bool stalled = cost - trial_cost < 1e-16 * (1.0 + cost);
                x = std::move(trial);
                cost = trial_cost;
                lambda = std::max(lambda / 3.0, 1e-12);
                accepted = true;
                if (stalled) return x;
                break;
            }
            lambda *= 10.0;
        }
        if (!accepted) break;
    }
    return x;
}

constexpr double kEntryZeroTol = 1e-6;

HomCandidate::Class classify_entries(const std::vector<std::vector<double>>& t) {
    bool any = false;
    bool monomial = true;
    for (const auto& row : t) {
        int nonzero = 0;
        for (double v : row)
            if (std::abs(v) > kEntryZeroTol) ++nonzero;
        if (nonzero > 1) monomial = false;
        if (nonzero > 0) any = true;
    }
    if (!any) return HomCandidate::Class::Null;
    return monomial ? HomCandidate::Class::Monomial : HomCandidate::Class::General;
}

double map_distance(const std::vector<std::vector<double>>& a,
                    const std::vector<std::vector<double>>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < a[i].size(); ++k)
            m = std::max(m, std::abs(a[i][k] - b[i][k]));
    return m;
}

}  // namespace

std::vector<HomCandidate> numeric_hom_search(const Graph& g, int restarts, double tol,
                                             std::uint64_t seed, HomDirection dir,
                                             int size_bound) {
    const int n = g.n();
    if (n > size_bound) throw SizeBound("numeric_hom_search: graph exceeds the size bound");

    EvolutionAlgebra adj = from_graph(g);
    EvolutionAlgebra rw = from_random_walk(g);
    HomSystem sys = dir == HomDirection::RwToAdj ? HomSystem(rw, adj) : HomSystem(adj, rw);

    std::vector<HomCandidate> found;
    {
        HomCandidate null_map;
        null_map.t.assign(n, std::vector<double>(n, 0.0));
        null_map.residual = 0.0;
        null_map.classification = HomCandidate::Class::Null;
        found.push_back(std::move(null_map));
    }

    for (int restart = 0; restart < restarts; ++restart) {
        std::mt19937_64 rng(splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * (restart + 1))));
        std::uniform_real_distribution<double> init(-2.0, 2.0);
        std::vector<double> x(sys.num_vars());
        for (double& v : x) v = init(rng);
        x = lm_minimize(sys, x);
        const double residual = sys.max_abs_residual(x);
        if (!(residual <= tol)) continue;

        HomCandidate cand;
        cand.t.assign(n, std::vector<double>(n));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) cand.t[i][k] = x[i * n + k];
        cand.residual = residual;
        cand.classification = classify_entries(cand.t);
        found.push_back(std::move(cand));
    }

    std::sort(found.begin(), found.end(), [](const HomCandidate& a, const HomCandidate& b) {
        if (a.residual != b.residual) return a.residual < b.residual;
        return a.t < b.t;
    });
    std::vector<HomCandidate> unique;
    for (auto& cand : found) {
        bool dup = false;
        for (const auto& kept : unique)
            if (map_distance(cand.t, kept.t) <= 1e-4) {
                dup = true;
                break;
            }
        if (!dup) unique.push_back(std::move(cand));
    }
    return unique;
}

HomEvidence gather_hom_evidence(const Graph& g, int restarts, double tol, std::uint64_t seed,
                                HomDirection dir, int size_bound) {
    HomEvidence ev;
    ev.graph_id = encode_graph6(g);
    ev.direction = to_string(dir);
    ev.restarts = restarts;
    ev.tol = tol;
    ev.seed = seed;
    ev.candidates = numeric_hom_search(g, restarts, tol, seed, dir, size_bound);
    ev.conclusion = ev.found_nonzero() ? "nonzero-candidate-found" : "null-only";
    return ev;
}

}  // namespace evoalg
