#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace flipforge {

// Undirected edge with endpoints u < v and a 1-based colour.
struct Edge {
    int u = 0;
    int v = 0;
    int colour = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple graph on vertices 0..n-1 with every edge carrying one
// colour from {1..k}. Adjacency is kept both as CSR neighbour lists and,
// for n <= 2^16, as per-vertex bitset rows for O(1) membership tests.
// Safe to read from many threads after construction.
class ColouredGraph {
public:
    // Empty graph: no vertices, palette of one colour.
    ColouredGraph() : ColouredGraph(0, 1, {}) {}

    // Validates, normalizes endpoints to u < v, sorts into canonical order.
    // Rejects self-loops, duplicate edges and out-of-range colours/vertices.
    ColouredGraph(int n, int k, std::vector<Edge> edges);

    static ColouredGraph complete(int n, int colour, int palette);
    static ColouredGraph complete_bipartite(int n, int colour, int palette);
    static ColouredGraph path(int n, int colour, int palette);
    static ColouredGraph cycle(int n, int colour, int palette);

    // Same graph with every edge recoloured and/or a new palette size.
    ColouredGraph recoloured(int colour, int palette) const;
    // Edge-induced subgraph on a colour subset; kept colours are renumbered
    // 1..|kept| in the order given. Vertex set is unchanged.
    ColouredGraph colour_subgraph(const std::vector<int>& kept_colours) const;

    int vertex_count() const { return n_; }
    int colour_count() const { return k_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    // (neighbour, colour) pairs sorted by neighbour id.
    std::span<const std::pair<int, int>> neighbours(int v) const;
    int degree(int v) const;
    bool adjacent(int u, int v) const;
    // colour of edge {u,v}, 0 if not adjacent
    int edge_colour(int u, int v) const;

    // total number of colour-j edges, index j-1
    std::vector<long long> colour_totals() const;

    bool operator==(const ColouredGraph& other) const;

private:
    void check_vertex(int v, const char* what) const;

    int n_ = 0;
    int k_ = 0;
    std::vector<Edge> edges_;
    std::vector<long long> adj_offsets_;
    std::vector<std::pair<int, int>> adj_;
    std::size_t row_words_ = 0;
    std::vector<std::uint64_t> adj_bits_;
};

// Per-vertex colour statistics: deg_j(v), e_j[v] (closed) and e_j(v) (open),
// all indexed by colour-1.
struct VertexStats {
    int vertex = 0;
    std::vector<long long> deg_by_colour;
    std::vector<long long> closed_count_by_colour;
    std::vector<long long> open_count_by_colour;
};

// Vertices at distance <= t from v (including v), sorted ascending.
std::vector<int> closed_neighbourhood(const ColouredGraph& g, int v, int t);

// Per-colour edge counts of the subgraph induced by s (each edge once).
std::vector<long long> colour_counts(const ColouredGraph& g, std::span<const int> s);

VertexStats vertex_stats(const ColouredGraph& g, int v);

}  // namespace flipforge
