#include <doctest.h>

#include <cmath>
#include <random>

#include "evoalg/families.hpp"
#include "evoalg/hom_search.hpp"
#include "support/random_graphs.hpp"

using namespace evoalg;

namespace {

// Central finite differences of the residual vector.
std::vector<double> fd_jacobian(const HomSystem& sys, const std::vector<double>& x) {
    const int rows = sys.num_residuals(), cols = sys.num_vars();
    std::vector<double> j(static_cast<size_t>(rows) * cols);
    const double h = 1e-6;
    for (int c = 0; c < cols; ++c) {
        std::vector<double> hi = x, lo = x;
        hi[static_cast<size_t>(c)] += h;
        lo[static_cast<size_t>(c)] -= h;
        const std::vector<double> rh = sys.residual(hi), rl = sys.residual(lo);
        for (int r = 0; r < rows; ++r)
            j[static_cast<size_t>(r) * cols + c] =
                (rh[static_cast<size_t>(r)] - rl[static_cast<size_t>(r)]) / (2 * h);
    }
    return j;
}

}  // namespace

TEST_CASE("structural classification matches the three mechanisms") {
    // Regular: family nonempty, contains the (1/d) identity solution.
    const StructuralClassification c5 = structural_hom_classify(cycle_graph(5));
    CHECK(!c5.null_only);
    REQUIRE(!c5.family.empty());
    CHECK(c5.family.size() == 10);  // one scalar vector per graph automorphism
    for (const auto& sol : c5.family)
        CHECK(is_isomorphism(condpi_to_map(cycle_graph(5), sol)));

    // Neither: null-only, empty family.
    const StructuralClassification fr = structural_hom_classify(friendship_graph(2));
    CHECK(fr.null_only);
    CHECK(fr.family.empty());

    // Singular input is out of scope for the dichotomy.
    CHECK_THROWS_AS(structural_hom_classify(cycle_graph(4)), SingularGraph);
}

TEST_CASE("residuals vanish exactly at known homomorphisms") {
    const Graph c5 = cycle_graph(5);
    const HomSystem sys(from_random_walk(c5), from_graph(c5));
    CHECK(sys.n() == 5);
    CHECK(sys.num_vars() == 25);
    CHECK(sys.num_residuals() == 75);

    // Null map.
    CHECK(sys.max_abs_residual(std::vector<double>(25, 0.0)) == 0.0);

    // (1/2) identity.
    std::vector<double> half(25, 0.0);
    for (int i = 0; i < 5; ++i) half[static_cast<size_t>(i) * 5 + i] = 0.5;
    CHECK(sys.max_abs_residual(half) <= 1e-15);

    // Perturbation shows up in the residual.
    half[1] = 0.01;
    CHECK(sys.max_abs_residual(half) > 1e-4);
}

TEST_CASE("analytic jacobian matches finite differences") {
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> val(-2.0, 2.0);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const Graph g = testsupport::random_connected_graph(n, 0.5, rng);
        const HomSystem sys(from_random_walk(g), from_graph(g));
        std::vector<double> x(static_cast<size_t>(sys.num_vars()));
        for (auto& v : x) v = val(rng);

        const std::vector<double> ja = sys.jacobian(x);
        const std::vector<double> jf = fd_jacobian(sys, x);
        REQUIRE(ja.size() == jf.size());
        double scale = 1.0;
        for (double v : ja) scale = std::max(scale, std::abs(v));
        for (size_t k = 0; k < ja.size(); ++k)
            CHECK(std::abs(ja[k] - jf[k]) <= 1e-6 * scale);
    }
}

TEST_CASE("numeric search finds the scalar witness on the 5-cycle") {
    const auto candidates = numeric_hom_search(cycle_graph(5), 60, 1e-9, 7);
    REQUIRE(!candidates.empty());
    // Null map is always reported.
    bool has_null = false, has_half_identity = false;
    for (const auto& c : candidates) {
        CHECK(c.residual <= 1e-9);
        if (c.is_null()) has_null = true;
        bool half_id = true;
        for (int i = 0; i < 5 && half_id; ++i)
            for (int k = 0; k < 5 && half_id; ++k)
                half_id = std::abs(c.t[static_cast<size_t>(i)][static_cast<size_t>(k)] -
                                   (i == k ? 0.5 : 0.0)) <= 1e-6;
        if (half_id) {
            has_half_identity = true;
            CHECK(c.classification == HomCandidate::Class::Monomial);
        }
    }
    CHECK(has_null);
    CHECK(has_half_identity);
}

TEST_CASE("numeric search is deterministic for a fixed seed") {
    const Graph g = friendship_graph(2);
    const auto a = numeric_hom_search(g, 30, 1e-9, 42);
    const auto b = numeric_hom_search(g, 30, 1e-9, 42);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].t == b[i].t);
        CHECK(a[i].residual == b[i].residual);
    }
}

TEST_CASE("evidence on a null-only graph concludes null-only") {
    const HomEvidence e = gather_hom_evidence(friendship_graph(2), 50, 1e-9, 9);
    CHECK(e.restarts == 50);
    CHECK(e.seed == 9);
    CHECK(e.direction == to_string(HomDirection::RwToAdj));
    CHECK(!e.found_nonzero());
    CHECK(e.conclusion == "null-only");
    // The null map itself is still reported as a candidate.
    REQUIRE(!e.candidates.empty());
    CHECK(e.candidates.front().is_null());
}

TEST_CASE("evidence in the opposite direction finds witnesses on regular graphs") {
    // A(G) -> A_RW(G) with f = d * identity... inverse direction of the usual
    // witness; on C_5 the scalar is 2 and the search should see it.
    const HomEvidence e =
        gather_hom_evidence(cycle_graph(5), 60, 1e-9, 11, HomDirection::AdjToRw);
    CHECK(e.found_nonzero());
    CHECK(e.conclusion == "nonzero-candidate-found");
}

TEST_CASE("numeric search respects its size bound") {
    std::mt19937_64 rng(1);
    const Graph big = testsupport::random_connected_graph(11, 0.3, rng);
    CHECK_THROWS_AS(numeric_hom_search(big, 5, 1e-9, 1), SizeBound);
}
