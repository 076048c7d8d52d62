#include "evoalg/worked_examples.hpp"

#include <sstream>

#include "evoalg/algebra.hpp"
#include "evoalg/families.hpp"
#include "evoalg/hom_search.hpp"
#include "evoalg/iso_engine.hpp"
#include "evoalg/maps.hpp"
#include "evoalg/tree_example.hpp"

namespace evoalg {

namespace {

void check(std::vector<ExampleResult>& out, const std::string& name, const std::string& expected,
           const std::string& actual) {
    out.push_back({name, expected == actual, expected, actual});
}

// For multi-part checks: pass/fail plus a diagnostic that only matters on
// failure.
void check_flag(std::vector<ExampleResult>& out, const std::string& name,
                const std::string& expected, bool ok, const std::string& diagnostic) {
    out.push_back({name, ok, expected, ok ? expected : diagnostic});
}

std::string kind_str(IsoVerdict::Kind k) {
    switch (k) {
        case IsoVerdict::Kind::Isomorphic: return "isomorphic";
        case IsoVerdict::Kind::OnlyNullHomomorphism: return "only-null";
        default: return "undecided";
    }
}

std::string mech_str(const IsoVerdict& v) {
    if (!v.mechanism) return "";
    switch (*v.mechanism) {
        case IsoVerdict::Mechanism::Regular: return " via regular witness";
        case IsoVerdict::Mechanism::Biregular: return " via biregular witness";
        default: return " via monomial search";
    }
}

std::string verdict_str(const IsoVerdict& v) { return kind_str(v.kind) + mech_str(v); }

RadicalScalar cbrt_of(long num, long den) {
    return RadicalScalar::root_of(make_rational(num, den), make_rational(1, 3));
}

void run_biregular_example(std::vector<ExampleResult>& out) {
    const Graph g = biregular_example_graph();
    const EvolutionAlgebra adj = from_graph(g);

    // 1-based: e_1^2 = e_5 + e_8 + e_10.
    AlgebraElement sq = multiply(adj, AlgebraElement::basis(10, 0), AlgebraElement::basis(10, 0));
    AlgebraElement want = AlgebraElement::zero(10);
    want.coords[4] = 1;
    want.coords[7] = 1;
    want.coords[9] = 1;
    check_flag(out, "biregular-10v squares", "e1*e1 = e5 + e8 + e10", sq == want,
               "e1*e1 has unexpected coordinates");

    check_flag(out, "biregular-10v random walk is Markov", "row-stochastic structure matrix",
               is_markov(from_random_walk(g)), "rows do not sum to 1");

    const IsoVerdict v = decide_iso(g);
    check(out, "biregular-10v decide", "isomorphic via biregular witness", verdict_str(v));
}

void run_cycle_examples(std::vector<ExampleResult>& out) {
    const Graph c5 = cycle_graph(5);
    check(out, "c5 adjacency determinant", "2", int_string(det(c5.adjacency_matrix())));
    check(out, "c5 decide", "isomorphic via regular witness", verdict_str(decide_iso(c5)));

    // The cyclic shift admits the constant scalar family alpha = 1/2.
    const std::vector<int> shift = {1, 2, 3, 4, 0};
    const RadicalScalar half(make_rational(1, 2));
    auto sol = condpi_solve(c5, shift);
    bool ok = sol.has_value();
    if (ok)
        for (const auto& a : sol->alphas) ok = ok && a == half;
    ok = ok && is_isomorphism(condpi_to_map(c5, *sol));
    check_flag(out, "c5 shift scalar condition", "alpha = 1/2 everywhere, f an isomorphism", ok,
               sol ? "solved with unexpected scalars" : "no solution found");

    // A transposition of two non-adjacent vertices breaks the support
    // condition, so no scalar assignment exists.
    check_flag(out, "c5 non-automorphism rejected", "no solution for the (1 3) transposition",
               !condpi_solve(c5, {2, 1, 0, 3, 4}).has_value(), "unexpected solution");

    const auto aut = aut_group(from_graph(c5));
    check_flag(out, "c5 algebra automorphisms", "order 10, strictly below 120 = |S_5|",
               aut.size() == 10, "order " + std::to_string(aut.size()));

    // d-regular correspondence: g = d f is an automorphism of A(G) and
    // (1/d) g restores f.
    if (sol) {
        const LinearMap f = condpi_to_map(c5, *sol);
        const LinearMap g = rw_iso_to_aut(f, 2);
        const bool round = is_isomorphism(g) && aut_to_rw_iso(g, 2).same_matrix(f);
        check_flag(out, "c5 regular correspondence", "g = 2f automorphism, (1/2)g = f", round,
                   "round trip failed");
    }
}

void run_friendship_examples(std::vector<ExampleResult>& out) {
    for (int k = 2; k <= 4; ++k) {
        const Graph g = friendship_graph(k);
        const std::string tag = "friendship k=" + std::to_string(k);
        const int n = 2 * k + 1;

        const IsoVerdict v = decide_iso(g);
        const bool decision = v.det != 0 && !v.cls.regular_or_biregular() &&
                              v.kind == IsoVerdict::Kind::OnlyNullHomomorphism;
        check_flag(out, tag + " verdict",
                   "nonzero determinant, class neither, only the null homomorphism", decision,
                   "det " + int_string(v.det) + ", " + kind_str(v.kind));

        // The adjacency matrix is non-singular, so its rank is full (2k+1);
        // the commonly quoted value k for this family contradicts that, and
        // the discrepancy is recorded here on purpose.
        const int r = rank(g.adjacency_matrix());
        std::ostringstream actual;
        actual << "rank " << r << " of " << n << "; quoted value " << k
               << (r != k ? " differs" : " matches");
        std::ostringstream expected;
        expected << "rank " << n << " of " << n << "; quoted value " << k << " differs";
        check(out, tag + " rank discrepancy", expected.str(), actual.str());
    }
}

void run_cubic_singular_example(std::vector<ExampleResult>& out) {
    const Graph g = cubic_singular_example_graph();
    check(out, "cubic-10v determinant", "0", int_string(det(g.adjacency_matrix())));

    // f(e_i) = (1/3) e_i from A_RW(G) to A(G) on a 3-regular graph.
    const EvolutionAlgebra rw = from_random_walk(g), adj = from_graph(g);
    const LinearMap third = LinearMap::diagonal(
        rw, adj, std::vector<RadicalScalar>(10, RadicalScalar(make_rational(1, 3))));
    check_flag(out, "cubic-10v scalar map", "(1/3) identity is an isomorphism",
               is_isomorphism(third), "map failed verification");

    check(out, "cubic-10v decide", "isomorphic via regular witness", verdict_str(decide_iso(g)));
}

void run_bipartite_examples(std::vector<ExampleResult>& out) {
    const std::pair<int, int> sizes[] = {{2, 2}, {6, 3}, {3, 4}};
    for (const auto& [m, n] : sizes) {
        const Graph g = complete_bipartite_graph(m, n);
        const std::string tag = "K_{" + std::to_string(m) + "," + std::to_string(n) + "}";

        check(out, tag + " determinant", "0", int_string(det(g.adjacency_matrix())));

        const RegularityClass cls = classify(g);
        const IsoVerdict v = decide_iso(g);
        check_flag(out, tag + " verdict", "biregular split found, isomorphic",
                   cls.bipartition.has_value() && v.kind == IsoVerdict::Kind::Isomorphic,
                   verdict_str(v));

        // The two-scalar diagonal witness, A_RW -> A: 1/cbrt(m n^2) on the
        // degree-n side, 1/cbrt(m^2 n) on the other.
        std::vector<RadicalScalar> diag;
        for (int i = 0; i < m; ++i) diag.push_back(cbrt_of(1, m * n * n));
        for (int i = 0; i < n; ++i) diag.push_back(cbrt_of(1, m * m * n));
        const LinearMap f = LinearMap::diagonal(from_random_walk(g), from_graph(g), diag);
        check_flag(out, tag + " scalar witness",
                   "cube-root diagonal map is an isomorphism (exact)", is_isomorphism(f),
                   "map failed verification");
    }
}

void run_tree_examples(std::vector<ExampleResult>& out) {
    const TreeExampleReport rep = verify_tree_example();
    const bool constants = rep.case2_reference.pinned == cbrt_of(2, 9) &&
                           rep.case2_reference.first == cbrt_of(4, 3) &&
                           rep.case2_reference.second ==
                               RadicalScalar::root_of(make_rational(2, 243), make_rational(1, 6)) &&
                           rep.case2_reference.contradiction;
    check_flag(out, "tree transcript",
               "t56 = (2/9)^(1/3), t65 = (4/3)^(1/3) vs (2/243)^(1/6), null map only",
               rep.passed && constants,
               std::string(rep.passed ? "replay ok" : "replay failed") +
                   "; pinned = " + rep.case2_reference.pinned.str());

    const Graph tree = tree_example_graph();
    const HomEvidence ev = gather_hom_evidence(tree, 200, 1e-9, 1);
    check_flag(out, "tree numeric search",
               "no nonzero candidate at tol 1e-9 after 200 restarts", !ev.found_nonzero(),
               "conclusion: " + ev.conclusion);

    const auto [fm, h] = strong_isotopy_witness(tree);
    const IsotopyResult iso = is_isotopism(fm, fm, h);
    check_flag(out, "tree strong isotopy", "sqrt-degree diagonal pair is a strong isotopism",
               iso.holds && iso.strong, "isotopism check failed");
}

void run_k2_example(std::vector<ExampleResult>& out) {
    const auto aut = aut_group(from_graph(complete_graph(2)));
    bool ok = aut.size() == 2;
    for (const auto& s : aut)
        for (const auto& a : s.alphas) ok = ok && a == RadicalScalar(1);
    check_flag(out, "K_2 algebra automorphisms", "identity and swap, alpha = 1", ok,
               "order " + std::to_string(aut.size()));
}

}  // namespace

std::vector<ExampleResult> run_worked_examples() {
    std::vector<ExampleResult> out;
    run_biregular_example(out);
    run_cycle_examples(out);
    run_friendship_examples(out);
    run_cubic_singular_example(out);
    run_bipartite_examples(out);
    run_tree_examples(out);
    run_k2_example(out);
    return out;
}

}  // namespace evoalg
