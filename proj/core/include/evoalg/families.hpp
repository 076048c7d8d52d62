#pragma once

#include <utility>
#include <vector>

#include "evoalg/errors.hpp"
#include "evoalg/graph.hpp"

namespace evoalg {

// The named instances the regression suite and the docs keep coming back to.
// All are connected simple graphs; vertex numbering is 0-based like Graph.

inline Graph cycle_graph(int n) {
    if (n < 3) throw Error("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

// k triangles sharing vertex 0; 2k+1 vertices. The center has degree 2k,
// every other vertex degree 2, so the graph is neither regular nor biregular
// for k >= 2.
inline Graph friendship_graph(int k) {
    if (k < 1) throw Error("friendship graph needs at least one triangle");
    std::vector<std::pair<int, int>> edges;
    for (int t = 0; t < k; ++t) {
        const int a = 1 + 2 * t, b = 2 + 2 * t;
        edges.emplace_back(0, a);
        edges.emplace_back(0, b);
        edges.emplace_back(a, b);
    }
    return Graph(2 * k + 1, edges);
}

// Sides {0..m-1} and {m..m+n-1}.
inline Graph complete_bipartite_graph(int m, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
    return Graph(m + n, edges);
}

// The 10-vertex (2,3)-biregular instance: squares in A(G) read off the
// neighborhoods, e.g. e_1^2 = e_5 + e_8 + e_10 (1-based labels).
inline Graph biregular_example_graph() {
    return Graph(10, {{0, 4}, {0, 7}, {0, 9}, {1, 4}, {1, 5}, {1, 8}, {2, 5}, {2, 6}, {2, 8},
                      {3, 6}, {3, 7}, {3, 9}});
}

// The 10-vertex 3-regular instance with two pairs of twin vertices
// (N(2) = N(5) and N(7) = N(10), 1-based), so its adjacency matrix has two
// equal row pairs and determinant zero.
inline Graph cubic_singular_example_graph() {
    return Graph(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4},
                      {5, 6}, {5, 9}, {6, 7}, {6, 8}, {7, 8}, {7, 9}, {8, 9}});
}

}  // namespace evoalg
