#include "evoalg/iso_engine.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "evoalg/errors.hpp"
#include "evoalg/hom_search.hpp"
#include "evoalg/matrix.hpp"

namespace evoalg {

namespace {

// One directed constraint alpha_to = q * alpha_from^2 with q != 0.
struct Arc {
    int from = 0, to = 0;
    BigRational q;
};

// Solves a system of Arc constraints for all-nonzero real vectors alpha.
//
// Within each weak component, write alpha_v = t_v * x^(2^d_v) where x is the
// value at the least vertex (t rational, d the BFS depth along forward arcs).
// Every arc then reduces to x^m = c with m = 2^(d_to) - 2^(d_from + 1) and
// rational c; tree arcs give m = 0, c = 1 and drop out. The reverse of the
// root's first tree arc, when present, has odd m = -3 and pins x uniquely;
// even-m arcs keep at most a sign pair. Candidate roots are intersected
// exactly, so any returned vector satisfies every constraint.
//
// Returns every solution (cartesian product over components, deterministic
// order). Empty result = system infeasible. Throws UnsupportedStructure when
// a component is not forward-reachable from its least vertex or no arc pins
// its free parameter.
std::vector<std::vector<RadicalScalar>> solve_scalar_system(int n, std::vector<Arc> arcs) {
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
        return std::tie(a.from, a.to) < std::tie(b.from, b.to);
    });

    std::vector<std::vector<int>> forward(n), undirected(n);
    for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
        forward[arcs[a].from].push_back(a);
        undirected[arcs[a].from].push_back(arcs[a].to);
        undirected[arcs[a].to].push_back(arcs[a].from);
    }

    std::vector<int> component(n, -1);
    std::vector<long> depth(n, -1);
    std::vector<BigRational> t(n);

    // Per component: the vertices it contains and the distinct values x may
    // take; alpha follows from (t, depth, x).
    std::vector<std::vector<int>> comp_vertices;
    std::vector<std::vector<RadicalScalar>> comp_roots;

    for (int r = 0; r < n; ++r) {
        if (component[r] >= 0) continue;
        const int comp = static_cast<int>(comp_vertices.size());
        std::vector<int> members;
        std::queue<int> bfs;
        component[r] = comp;
        bfs.push(r);
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            members.push_back(v);
            for (int w : undirected[v])
                if (component[w] < 0) {
                    component[w] = comp;
                    bfs.push(w);
                }
        }
        std::sort(members.begin(), members.end());

        depth[r] = 0;
        t[r] = 1;
        std::queue<int> prop;
        prop.push(r);
        while (!prop.empty()) {
            int v = prop.front();
            prop.pop();
            for (int a : forward[v]) {
                int w = arcs[a].to;
                if (depth[w] >= 0) continue;
                depth[w] = depth[v] + 1;
                if (depth[w] > 60) throw SizeBound("scalar system: propagation depth too large");
                t[w] = arcs[a].q * t[v] * t[v];
                prop.push(w);
            }
        }
        for (int v : members)
            if (depth[v] < 0)
                throw UnsupportedStructure(
                    "scalar system: component not reachable from its least vertex");

        bool pinned = false;
        bool feasible = true;
        std::vector<RadicalScalar> roots;
        for (const Arc& arc : arcs) {
            if (component[arc.from] != comp) continue;
            const long m = (1L << depth[arc.to]) - (1L << (depth[arc.from] + 1));
            const BigRational c = arc.q * t[arc.from] * t[arc.from] / t[arc.to];
            if (m == 0) {
                if (c != 1) {
                    feasible = false;
                    break;
                }
                continue;
            }
            if (!pinned) {
                roots = solve_power(RadicalScalar(c), m);
                pinned = true;
            } else {
                std::erase_if(roots, [&](const RadicalScalar& x) {
                    return !(x.pow(BigRational(m)) == RadicalScalar(c));
                });
            }
            if (roots.empty()) {
                feasible = false;
                break;
            }
        }
        if (!feasible) return {};
        if (!pinned)
            throw UnsupportedStructure("scalar system: component leaves a free parameter");
        comp_vertices.push_back(std::move(members));
        comp_roots.push_back(std::move(roots));
    }

    // Cartesian product over components, lexicographic in component order.
    std::vector<std::vector<RadicalScalar>> out;
    std::vector<std::size_t> pick(comp_roots.size(), 0);
    while (true) {
        std::vector<RadicalScalar> alphas(n);
        for (std::size_t comp = 0; comp < comp_roots.size(); ++comp) {
            const RadicalScalar& x = comp_roots[comp][pick[comp]];
            for (int v : comp_vertices[comp])
                alphas[v] = RadicalScalar(t[v]) * x.pow(BigRational(1L << depth[v]));
        }
        out.push_back(std::move(alphas));
        std::size_t comp = 0;
        while (comp < pick.size() && ++pick[comp] == comp_roots[comp].size()) {
            pick[comp] = 0;
            ++comp;
        }
        if (comp == pick.size()) break;
    }
    return out;
}

bool is_graph_automorphism(const Graph& g, const std::vector<int>& pi) {
    for (auto [u, v] : g.edges())
        if (!g.adjacent(pi[u], pi[v])) return false;
    return true;
}

// Permutations preserving the support pattern of a rational matrix, found by
// color-refined backtracking on the support digraph (with the diagonal as a
// vertex invariant). Worst case exponential; decision sizes keep it small.
std::vector<std::vector<int>> support_automorphisms(const RationalMatrix& c) {
    const int n = c.rows();
    std::vector<std::vector<bool>> s(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) s[i][k] = c(i, k) != 0;

    std::vector<long> color(n);
    for (int i = 0; i < n; ++i) {
        long out_deg = 0, in_deg = 0;
        for (int k = 0; k < n; ++k) {
            out_deg += s[i][k];
            in_deg += s[k][i];
        }
        color[i] = ((out_deg * (n + 1) + in_deg) << 1) | (s[i][i] ? 1 : 0);
    }
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<long>> sig(n);
        for (int i = 0; i < n; ++i) {
            sig[i].push_back(color[i]);
            std::vector<long> nb;
            for (int k = 0; k < n; ++k)
                if (s[i][k] || s[k][i])
                    nb.push_back(color[k] * 4 + (s[i][k] ? 2 : 0) + (s[k][i] ? 1 : 0));
            std::sort(nb.begin(), nb.end());
            sig[i].insert(sig[i].end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<long>> palette(sig.begin(), sig.end());
        std::sort(palette.begin(), palette.end());
        palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
        std::vector<long> next(n);
        for (int i = 0; i < n; ++i)
            next[i] = std::lower_bound(palette.begin(), palette.end(), sig[i]) - palette.begin();
        if (next == color) break;
        color = next;
    }

    // Assign rare colors first so mismatches surface early.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::vector<int> freq(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (color[j] == color[i]) ++freq[i];
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::tie(freq[a], a) < std::tie(freq[b], b);
    });

    std::vector<std::vector<int>> result;
    std::vector<int> pi(n, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            result.push_back(pi);
            return;
        }
        const int i = order[pos];
        for (int k = 0; k < n; ++k) {
            if (used[k] || color[k] != color[i] || s[i][i] != s[k][k]) continue;
            bool ok = true;
            for (int q = 0; q < pos && ok; ++q) {
                const int j = order[q];
                ok = s[i][j] == s[k][pi[j]] && s[j][i] == s[pi[j]][k];
            }
            if (!ok) continue;
            pi[i] = k;
            used[k] = true;
            self(self, pos + 1);
            pi[i] = -1;
            used[k] = false;
        }
    };
    rec(rec, 0);
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace

std::optional<CondPiSolution> condpi_solve(const Graph& g, const std::vector<int>& pi) {
    const int n = g.n();
    if (static_cast<int>(pi.size()) != n)
        throw DimensionMismatch("condpi_solve: permutation has wrong length");
    std::vector<bool> hit(n, false);
    for (int v : pi) {
        if (v < 0 || v >= n) throw VertexOutOfRange("condpi_solve: pi out of range");
        if (hit[v]) throw Error("condpi_solve: pi is not a permutation");
        hit[v] = true;
    }
    if (!is_graph_automorphism(g, pi)) return std::nullopt;

    // The support condition holds; the scalar condition alpha_l = deg(i)
    // alpha_i^2 per edge does not mention pi at all.
    std::vector<Arc> arcs;
    for (auto [u, v] : g.edges()) {
        arcs.push_back({u, v, BigRational(g.degree(u))});
        arcs.push_back({v, u, BigRational(g.degree(v))});
    }
    auto sols = solve_scalar_system(n, std::move(arcs));
    if (sols.empty()) return std::nullopt;
    // Connected graph, symmetric arcs: one component, odd pin, one solution.
    return CondPiSolution{pi, std::move(sols.front())};
}

std::vector<CondPiSolution> monomial_iso_search(const Graph& g, int size_bound) {
    std::vector<CondPiSolution> out;
    for (const auto& pi : graph_automorphisms(g, size_bound))
        if (auto sol = condpi_solve(g, pi)) out.push_back(std::move(*sol));
    return out;
}

LinearMap condpi_to_map(const Graph& g, const CondPiSolution& sol) {
    return LinearMap::monomial(from_random_walk(g), from_graph(g), sol.pi, sol.alphas);
}

std::vector<CondPiSolution> aut_group(const EvolutionAlgebra& e, int size_bound) {
    const int n = e.n();
    if (n > size_bound) throw SizeBound("aut_group: algebra exceeds the size bound");
    if (det(e.structure()) == 0)
        throw SingularStructureMatrix("aut_group requires a non-singular structure matrix");

    std::vector<CondPiSolution> out;
    for (const auto& pi : support_automorphisms(e.structure())) {
        std::vector<Arc> arcs;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                if (e.structure()(i, l) != 0)
                    arcs.push_back({i, l, e.structure()(pi[i], pi[l]) / e.structure()(i, l)});
        for (auto& alphas : solve_scalar_system(n, std::move(arcs)))
            out.push_back(CondPiSolution{pi, std::move(alphas)});
    }
    return out;
}

LinearMap aut_to_map(const EvolutionAlgebra& e, const CondPiSolution& sol) {
    return LinearMap::monomial(e, e, sol.pi, sol.alphas);
}

namespace {

// Checks that adj is the adjacency structure of a d-regular graph and rw its
// random-walk counterpart (entrywise adj / d).
void check_regular_pair(const EvolutionAlgebra& rw, const EvolutionAlgebra& adj, int d) {
    if (d <= 0) throw NotRegular("regular correspondence: degree must be positive");
    const int n = adj.n();
    if (rw.n() != n) throw DimensionMismatch("regular correspondence: size mismatch");
    const BigRational inv_d = make_rational(1, d);
    for (int i = 0; i < n; ++i) {
        int row = 0;
        for (int k = 0; k < n; ++k) {
            const BigRational& a = adj.structure()(i, k);
            if (a != 0 && a != 1)
                throw NotRegular("regular correspondence: target is not an adjacency algebra");
            if (a != adj.structure()(k, i) || (i == k && a != 0))
                throw NotRegular("regular correspondence: target is not an adjacency algebra");
            if (!(rw.structure()(i, k) == a * inv_d))
                throw NotRegular("regular correspondence: source is not adjacency / d");
            row += a == 1;
        }
        if (row != d) throw NotRegular("regular correspondence: graph is not d-regular");
    }
}

}  // namespace

LinearMap rw_iso_to_aut(const LinearMap& f, int d) {
    check_regular_pair(f.source(), f.target(), d);
    return f.scaled(RadicalScalar(BigRational(d)), f.target(), f.target());
}

LinearMap aut_to_rw_iso(const LinearMap& g, int d) {
    if (!(g.source().structure() == g.target().structure()))
        throw NotRegular("regular correspondence: map is not an algebra endomorphism");
    const int n = g.n();
    RationalMatrix rw_structure(n, n);
    if (d <= 0) throw NotRegular("regular correspondence: degree must be positive");
    const BigRational inv_d = make_rational(1, d);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) rw_structure(i, k) = g.target().structure()(i, k) * inv_d;
    EvolutionAlgebra rw(std::move(rw_structure), "A_RW(G)");
    check_regular_pair(rw, g.target(), d);
    return g.scaled(RadicalScalar(inv_d), rw, g.target());
}

IsoVerdict decide_iso(const Graph& g, const DecideOptions& opts) {
    if (g.n() > opts.exact_bound) throw SizeBound("decide_iso: graph exceeds the size bound");

    IsoVerdict v;
    v.det = det(g.adjacency_matrix());
    v.cls = classify(g);
    v.singular = v.det == 0;

    if (v.cls.regular_or_biregular()) {
        LinearMap witness = biregular_iso_witness(g, v.cls);
        if (!is_isomorphism(witness))
            throw Error("decide_iso: scalar witness failed verification");
        v.kind = IsoVerdict::Kind::Isomorphic;
        v.mechanism = v.cls.regular() ? IsoVerdict::Mechanism::Regular
                                      : IsoVerdict::Mechanism::Biregular;
        v.witness = std::move(witness);
        return v;
    }

    if (!v.singular) {
        // Non-singular dichotomy: no scalar-type isomorphism means the only
        // homomorphism at all is null.
        v.kind = IsoVerdict::Kind::OnlyNullHomomorphism;
        return v;
    }

    v.kind = IsoVerdict::Kind::Undecided;
    if (opts.gather_evidence && g.n() <= opts.numeric_bound)
        v.evidence = gather_hom_evidence(g, opts.evidence_restarts, opts.evidence_tol, opts.seed,
                                         HomDirection::RwToAdj, opts.numeric_bound);
    return v;
}

}  // namespace evoalg
