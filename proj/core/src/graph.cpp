#include "evoalg/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace evoalg {

namespace {

void check_connected(int n, const std::vector<std::vector<int>>& adj) {
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                q.push(w);
            }
    }
    if (reached != n) throw Disconnected("graph is not connected");
}

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n <= 0) throw UnsupportedGraph("graph needs at least one vertex");
    if (n == 1)
        throw UnsupportedGraph(
            "single-vertex graphs are not supported (vertex of degree 0)");
    mat_.assign(n, std::vector<bool>(n, false));
    adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw VertexOutOfRange("edge endpoint out of range");
        if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u + 1), 0);
        if (mat_[u][v])
            throw DuplicateEdge("duplicate edge " + std::to_string(u + 1) + " " +
                                    std::to_string(v + 1),
                                0);
        mat_[u][v] = mat_[v][u] = true;
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    std::sort(edges_.begin(), edges_.end());
    check_connected(n_, adj_);
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_)
        throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range [0," +
                               std::to_string(n_ - 1) + "]");
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

IntMatrix Graph::adjacency_matrix() const {
    IntMatrix a(n_, n_);
    for (auto [u, v] : edges_) a(u, v) = a(v, u) = 1;
    return a;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int declared_n = -1;
    int max_label = 0;
    std::vector<std::pair<int, int>> edges;  // 1-based until assembly
    std::vector<int> edge_line;              // line number per edge, for reports
    bool first_content_line = true;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;  // blank line
        if (a == "#") continue;    // comment

        if (first_content_line && a == "n") {
            if (!(ls >> b) || (ls >> extra))
                throw MalformedLine("expected \"n <count>\"", line_no);
            try {
                declared_n = std::stoi(b);
            } catch (...) {
                throw MalformedLine("bad vertex count \"" + b + "\"", line_no);
            }
            if (declared_n < 1) throw MalformedLine("vertex count must be positive", line_no);
            first_content_line = false;
            continue;
        }
        first_content_line = false;

        if (!(ls >> b) || (ls >> extra))
            throw MalformedLine("expected \"u v\"", line_no);
        int u, v;
        try {
            u = std::stoi(a);
            v = std::stoi(b);
        } catch (...) {
            throw MalformedLine("bad vertex label", line_no);
        }
        if (u < 1 || v < 1) throw MalformedLine("vertex labels are 1-based", line_no);
        if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u), line_no);
        if (declared_n > 0 && (u > declared_n || v > declared_n))
            throw MalformedLine("vertex label exceeds declared count", line_no);
        edges.emplace_back(u, v);
        edge_line.push_back(line_no);
        max_label = std::max({max_label, u, v});
    }

    const int n = declared_n > 0 ? declared_n : max_label;
    if (n == 0) throw MalformedLine("no edges in input", line_no);

    // Re-run the duplicate check here to report the offending line.
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    std::vector<std::pair<int, int>> zero_based;
    for (size_t e = 0; e < edges.size(); ++e) {
        int u = edges[e].first - 1, v = edges[e].second - 1;
        if (seen[u][v])
            throw DuplicateEdge("duplicate edge " + std::to_string(u + 1) + " " +
                                    std::to_string(v + 1),
                                edge_line[e]);
        seen[u][v] = seen[v][u] = true;
        zero_based.emplace_back(u, v);
    }
    return Graph(n, zero_based);
}

Graph parse_graph6(const std::string& line) {
    if (line.empty()) throw MalformedGraph6("empty graph6 line");
    if (line[0] == '>')
        throw MalformedGraph6("graph6 header prefix not supported; strip \">>graph6<<\"");
    if (static_cast<unsigned char>(line[0]) == 126)
        throw MalformedGraph6("long-form graph6 (n > 62) not supported");

    const int n = line[0] - 63;
    if (n < 0 || n > 62) throw MalformedGraph6("bad vertex count byte");
    if (n == 0) throw MalformedGraph6("empty graph");
    if (n == 1) throw UnsupportedGraph("single-vertex graphs are not supported");

    const int bits = n * (n - 1) / 2;
    const int expect = (bits + 5) / 6;
    if (static_cast<int>(line.size()) != 1 + expect)
        throw MalformedGraph6("wrong payload length for n=" + std::to_string(n));

    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int c = line[1 + bit / 6] - 63;
            if (c < 0 || c > 63) throw MalformedGraph6("byte out of printable range");
            if ((c >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // Padding bits of the last byte must be zero (canonical encoding).
    for (int p = bits; p < expect * 6; ++p) {
        const int c = line[1 + p / 6] - 63;
        if ((c >> (5 - p % 6)) & 1) throw MalformedGraph6("nonzero padding bits");
    }
    return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
    const int n = g.n();
    const int bits = n * (n - 1) / 2;
    std::string out(1 + (bits + 5) / 6, static_cast<char>(63));
    out[0] = static_cast<char>(63 + n);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.adjacent(i, j)) out[1 + bit / 6] += 1 << (5 - bit % 6);
    return out;
}

RegularityClass classify(const Graph& g) {
    const int n = g.n();
    RegularityClass rc;

    bool all_equal = true;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != g.degree(0)) {
            all_equal = false;
            break;
        }

    // BFS parity from vertex 0: the only possible bipartition of a connected
    // graph up to swapping sides.
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    q.push(0);
    dist[0] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    bool crossing = true;  // every edge joins even to odd
    for (auto [u, v] : g.edges())
        if (dist[u] % 2 == dist[v] % 2) {
            crossing = false;
            break;
        }

    std::optional<Bipartition> split;
    int d1 = 0, d2 = 0;
    if (crossing) {
        Bipartition bp;
        for (int v = 0; v < n; ++v) (dist[v] % 2 == 0 ? bp.v1 : bp.v2).push_back(v);
        d1 = g.degree(bp.v1[0]);
        d2 = g.degree(bp.v2[0]);
        bool constant = true;
        for (int v : bp.v1)
            if (g.degree(v) != d1) constant = false;
        for (int v : bp.v2)
            if (g.degree(v) != d2) constant = false;
        if (constant) split = std::move(bp);
    }

    if (all_equal) {
        rc.kind = RegularityClass::Kind::Regular;
        rc.d1 = rc.d2 = g.degree(0);
        rc.bipartition = split;  // regular graphs may be biregular too
    } else if (split) {
        rc.kind = RegularityClass::Kind::Biregular;
        rc.d1 = d1;
        rc.d2 = d2;
        rc.bipartition = split;
    } else {
        rc.kind = RegularityClass::Kind::Neither;
    }
    return rc;
}

namespace {

// Stable refinement of vertex colors by neighbor-color multisets, starting
// from degrees. Any automorphism preserves the final coloring, so candidate
// images are restricted to same-color vertices.
std::vector<int> refined_colors(const Graph& g) {
    const int n = g.n();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            nb.reserve(g.neighbors(v).size());
            for (int w : g.neighbors(v)) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {color[v], std::move(nb)};
        }
        std::vector<std::pair<int, std::vector<int>>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

void search_automorphisms(const Graph& g, const std::vector<int>& color,
                          const std::vector<int>& order, size_t depth, std::vector<int>& pi,
                          std::vector<bool>& used, std::vector<std::vector<int>>& out) {
    const int n = g.n();
    if (depth == order.size()) {
        out.push_back(pi);
        return;
    }
    const int v = order[depth];
    for (int w = 0; w < n; ++w) {
        if (used[w] || color[w] != color[v]) continue;
        bool ok = true;
        for (size_t d = 0; d < depth && ok; ++d) {
            const int u = order[d];
            if (g.adjacent(u, v) != g.adjacent(pi[u], w)) ok = false;
        }
        if (!ok) continue;
        pi[v] = w;
        used[w] = true;
        search_automorphisms(g, color, order, depth + 1, pi, used, out);
        used[w] = false;
    }
}

}  // namespace

std::vector<std::vector<int>> graph_automorphisms(const Graph& g, int size_bound) {
    const int n = g.n();
    if (n > size_bound)
        throw SizeBound("graph_automorphisms: n=" + std::to_string(n) + " exceeds bound " +
                        std::to_string(size_bound));
    std::vector<int> color = refined_colors(g);

    // Assign rarest colors first to fail early.
    std::vector<int> class_size(n, 0);
    for (int v = 0; v < n; ++v) ++class_size[color[v]];
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (class_size[color[a]] != class_size[color[b]])
            return class_size[color[a]] < class_size[color[b]];
        return a < b;
    });

    std::vector<int> pi(n, -1);
    std::vector<bool> used(n, false);
    std::vector<std::vector<int>> out;
    search_automorphisms(g, color, order, 0, pi, used, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace evoalg
