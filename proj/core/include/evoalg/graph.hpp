#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evoalg/matrix.hpp"

namespace evoalg {

// Finite simple connected undirected graph. Vertices are 0..n-1 throughout
// the API; the text formats (edge lists, printed permutations) use 1-based
// labels. Immutable after construction; safe to share across threads.
class Graph {
  public:
    // Validates: n >= 2, no self-loops, no duplicate edges, connected.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool adjacent(int u, int v) const { return mat_[u][v]; }
    // Sorted; degree(v) = neighbors(v).size(). Throws VertexOutOfRange.
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    // Sorted pairs with u < v.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    IntMatrix adjacency_matrix() const;

    bool operator==(const Graph&) const = default;

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<bool>> mat_;
};

// Lines of "u v" with 1-based labels; an optional first line "n <count>"
// pins the vertex count (otherwise it is the largest label seen).
// Throws MalformedLine, SelfLoop, DuplicateEdge, Disconnected (line numbers
// included where they apply).
Graph parse_edge_list(const std::string& text);

// Standard graph6, short form (n <= 62), one graph per line.
// Throws MalformedGraph6, Disconnected.
Graph parse_graph6(const std::string& line);
std::string encode_graph6(const Graph& g);

struct Bipartition {
    std::vector<int> v1, v2;  // sorted; v1 contains vertex 0
    bool operator==(const Bipartition&) const = default;
};

// A graph can be regular and biregular at once (even cycles, K_{n,n}):
// kind reports Regular whenever a single degree exists, and bipartition is
// filled independently whenever a valid biregular split exists.
struct RegularityClass {
    enum class Kind { Regular, Biregular, Neither };
    Kind kind = Kind::Neither;
    // Regular: d1 == d2 == d. Biregular: d1 on the side of vertex 0.
    int d1 = 0, d2 = 0;
    std::optional<Bipartition> bipartition;

    bool regular() const { return kind == Kind::Regular; }
    bool regular_or_biregular() const { return kind != Kind::Neither; }
};

// Regular iff all degrees are equal; otherwise tries the BFS-parity split
// from vertex 0 (even distance vs odd distance), which is the only candidate
// bipartition of a connected graph. Total on valid graphs.
RegularityClass classify(const Graph& g);

// Complete list of adjacency-preserving permutations (as images, pi[v] = image
// of v), found by backtracking over a stable degree-refined vertex partition.
// Sorted lexicographically; contains the identity. Throws SizeBound when
// n exceeds the bound.
std::vector<std::vector<int>> graph_automorphisms(const Graph& g, int size_bound = 12);

}  // namespace evoalg
