#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <set>

#include "evoalg/families.hpp"
#include "evoalg/graph.hpp"
#include "support/random_graphs.hpp"

using namespace evoalg;

namespace {

std::vector<std::string> corpus_lines(const std::string& name) {
    std::ifstream in(std::string(EVOALG_TEST_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

// Oracle: filter all n! permutations by direct adjacency preservation.
std::vector<std::vector<int>> brute_force_automorphisms(const Graph& g) {
    std::vector<int> pi(static_cast<size_t>(g.n()));
    for (int i = 0; i < g.n(); ++i) pi[static_cast<size_t>(i)] = i;
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int u = 0; u < g.n() && ok; ++u)
            for (int v = u + 1; v < g.n() && ok; ++v)
                ok = g.adjacent(u, v) ==
                     g.adjacent(pi[static_cast<size_t>(u)], pi[static_cast<size_t>(v)]);
        if (ok) out.push_back(pi);
    } while (std::next_permutation(pi.begin(), pi.end()));
    return out;
}

}  // namespace

TEST_CASE("graph constructor validates its input") {
    CHECK_THROWS_AS(Graph(1, {}), UnsupportedGraph);
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), SelfLoop);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), DuplicateEdge);
    CHECK_THROWS_AS(Graph(3, {{0, 1}}), Disconnected);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), VertexOutOfRange);
    const Graph g(3, {{1, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK_THROWS_AS(g.degree(3), VertexOutOfRange);
}

TEST_CASE("edge list parsing, 1-based labels") {
    const Graph g = parse_edge_list("1 2\n2 3\n3 1\n");
    CHECK(g.n() == 3);
    CHECK(g.edge_count() == 3);

    // Header line pins isolated-free vertex count explicitly.
    CHECK_THROWS_AS(parse_edge_list("n 4\n1 2\n2 3\n"), Disconnected);
    const Graph pinned = parse_edge_list("n 4\n1 2\n2 3\n3 4\n");
    CHECK(pinned.n() == 4);

    CHECK_THROWS_AS(parse_edge_list("0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("1 1\n"), SelfLoop);
    CHECK_THROWS_AS(parse_edge_list("1 2\n2 1\n"), DuplicateEdge);
    CHECK_THROWS_AS(parse_edge_list("1 two\n"), MalformedLine);
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);

    // Line numbers point at the offender.
    try {
        parse_edge_list("1 2\n2 x\n");
        FAIL("expected MalformedLine");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("graph6 round-trips the whole small corpus") {
    for (const auto& file : {"connected_n2.g6", "connected_n3.g6", "connected_n4.g6",
                             "connected_n5.g6", "connected_n6.g6"}) {
        for (const auto& line : corpus_lines(file)) {
            const Graph g = parse_graph6(line);
            CHECK(encode_graph6(g) == line);
        }
    }
}

TEST_CASE("graph6 round-trips random graphs up to the short-form ceiling") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 30);
        const Graph g = testsupport::random_connected_graph(n, 0.3, rng);
        const Graph back = parse_graph6(encode_graph6(g));
        CHECK(back == g);
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), MalformedGraph6);
    CHECK_THROWS_AS(parse_graph6("D"), MalformedGraph6);    // truncated bit vector
    CHECK_THROWS_AS(parse_graph6("D~{~"), MalformedGraph6);  // trailing junk
    CHECK_THROWS_AS(parse_graph6("Dhc\x01"), MalformedGraph6);
    CHECK_THROWS_AS(parse_graph6("B_"), Disconnected);  // K_2 plus isolated vertex
}

TEST_CASE("known regularity classes") {
    const RegularityClass c5 = classify(cycle_graph(5));
    CHECK(c5.kind == RegularityClass::Kind::Regular);
    CHECK(c5.d1 == 2);
    CHECK(!c5.bipartition.has_value());  // odd cycle: no two-coloring

    // Even cycle: regular wins the kind, bipartition still reported.
    const RegularityClass c6 = classify(cycle_graph(6));
    CHECK(c6.kind == RegularityClass::Kind::Regular);
    REQUIRE(c6.bipartition.has_value());
    CHECK(c6.bipartition->v1 == std::vector<int>{0, 2, 4});

    const RegularityClass k23 = classify(complete_bipartite_graph(2, 3));
    CHECK(k23.kind == RegularityClass::Kind::Biregular);
    CHECK(k23.d1 == 3);  // side of vertex 0 has degree n = 3
    CHECK(k23.d2 == 2);
    REQUIRE(k23.bipartition.has_value());
    CHECK(k23.bipartition->v1 == std::vector<int>{0, 1});
    CHECK(k23.bipartition->v2 == std::vector<int>{2, 3, 4});

    const RegularityClass fr = classify(friendship_graph(2));
    CHECK(fr.kind == RegularityClass::Kind::Neither);
    CHECK(!fr.bipartition.has_value());  // triangles are odd

    const RegularityClass path = classify(path_graph(4));
    CHECK(path.kind == RegularityClass::Kind::Neither);
    CHECK(!path.bipartition.has_value());  // bipartite, but side degrees are mixed

    const RegularityClass star = classify(complete_bipartite_graph(1, 3));
    CHECK(star.kind == RegularityClass::Kind::Biregular);
    CHECK(star.d1 == 3);
    CHECK(star.d2 == 1);
}

TEST_CASE("automorphisms match the permutation-filter oracle") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);  // up to 6: oracle is n!
        const Graph g = testsupport::random_connected_graph(n, 0.45, rng);
        CHECK(graph_automorphisms(g) == brute_force_automorphisms(g));
    }
}

TEST_CASE("automorphism groups of named graphs have the known orders") {
    CHECK(graph_automorphisms(cycle_graph(5)).size() == 10);   // dihedral
    CHECK(graph_automorphisms(complete_graph(4)).size() == 24);  // S_4
    CHECK(graph_automorphisms(path_graph(3)).size() == 2);
    CHECK(graph_automorphisms(complete_bipartite_graph(3, 3)).size() == 72);  // (3!)^2 * 2
    CHECK(graph_automorphisms(complete_bipartite_graph(2, 3)).size() == 12);  // 2! * 3!
    CHECK(graph_automorphisms(friendship_graph(3)).size() == 48);  // hyperoctahedral B_3
}

TEST_CASE("automorphism enumeration respects the size bound") {
    CHECK_THROWS_AS(graph_automorphisms(cycle_graph(8), 7), SizeBound);
    CHECK(graph_automorphisms(cycle_graph(8), 8).size() == 16);
}

TEST_CASE("adjacency matrix is symmetric with zero diagonal") {
    std::mt19937_64 rng(5150);
    const Graph g = testsupport::random_connected_graph(7, 0.4, rng);
    const IntMatrix a = g.adjacency_matrix();
    for (int i = 0; i < 7; ++i) {
        CHECK(a(i, i) == 0);
        BigInt row_sum(0);
        for (int j = 0; j < 7; ++j) {
            CHECK(a(i, j) == a(j, i));
            row_sum += a(i, j);
        }
        CHECK(row_sum == g.degree(i));
    }
}

TEST_CASE("named family shapes") {
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(complete_graph(5).edge_count() == 10);
    const Graph fr = friendship_graph(3);
    CHECK(fr.n() == 7);
    CHECK(fr.edge_count() == 9);
    CHECK(fr.degree(0) == 6);  // shared hub
    for (int v = 1; v < 7; ++v) CHECK(fr.degree(v) == 2);
    const Graph b = biregular_example_graph();
    CHECK(b.n() == 10);
    CHECK(b.edge_count() == 12);
    const Graph cs = cubic_singular_example_graph();
    CHECK(cs.n() == 10);
    for (int v = 0; v < 10; ++v) CHECK(cs.degree(v) == 3);
}
