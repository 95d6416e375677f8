#include "flipforge/coloured_graph.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "flipforge/util.hpp"

namespace flipforge {

namespace {
constexpr int kBitsetMaxVertices = 1 << 16;
}

ColouredGraph::ColouredGraph(int n, int k, std::vector<Edge> edges)
    : n_(n), k_(k), edges_(std::move(edges)) {
    if (n_ < 0) throw InputError("vertex count must be non-negative");
    if (k_ < 1) throw InputError("colour count must be at least 1");

    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v)
            throw InputError("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n_)
            throw InputError("edge endpoint out of range: {" + std::to_string(e.u) +
                             "," + std::to_string(e.v) + "}");
        if (e.colour < 1 || e.colour > k_)
            throw InputError("colour out of range on edge {" + std::to_string(e.u) +
                             "," + std::to_string(e.v) + "}: " +
                             std::to_string(e.colour));
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
            throw InputError("duplicate edge {" + std::to_string(edges_[i].u) + "," +
                             std::to_string(edges_[i].v) + "}");
    }

    std::vector<long long> deg(n_, 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    adj_offsets_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) adj_offsets_[v + 1] = adj_offsets_[v] + deg[v];
    adj_.resize(adj_offsets_[n_]);
    std::vector<long long> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (const auto& e : edges_) {
        adj_[cursor[e.u]++] = {e.v, e.colour};
        adj_[cursor[e.v]++] = {e.u, e.colour};
    }
    for (int v = 0; v < n_; ++v)
        std::sort(adj_.begin() + adj_offsets_[v], adj_.begin() + adj_offsets_[v + 1]);

    if (n_ > 0 && n_ <= kBitsetMaxVertices) {
        row_words_ = static_cast<std::size_t>((n_ + 63) / 64);
        adj_bits_.assign(row_words_ * static_cast<std::size_t>(n_), 0);
        for (const auto& e : edges_) {
            adj_bits_[e.u * row_words_ + e.v / 64] |= 1ull << (e.v % 64);
            adj_bits_[e.v * row_words_ + e.u / 64] |= 1ull << (e.u % 64);
        }
    }
}

ColouredGraph ColouredGraph::complete(int n, int colour, int palette) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(binom2(n)));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, colour});
    return ColouredGraph(n, palette, std::move(edges));
}

ColouredGraph ColouredGraph::complete_bipartite(int n, int colour, int palette) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) edges.push_back({u, n + v, colour});
    return ColouredGraph(2 * n, palette, std::move(edges));
}

ColouredGraph ColouredGraph::path(int n, int colour, int palette) {
    std::vector<Edge> edges;
    for (int u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1, colour});
    return ColouredGraph(n, palette, std::move(edges));
}

ColouredGraph ColouredGraph::cycle(int n, int colour, int palette) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1, colour});
    edges.push_back({0, n - 1, colour});
    return ColouredGraph(n, palette, std::move(edges));
}

ColouredGraph ColouredGraph::recoloured(int colour, int palette) const {
    std::vector<Edge> edges = edges_;
    for (auto& e : edges) e.colour = colour;
    return ColouredGraph(n_, palette, std::move(edges));
}

ColouredGraph ColouredGraph::colour_subgraph(const std::vector<int>& kept_colours) const {
    std::vector<int> remap(k_ + 1, 0);
    int next = 1;
    for (int c : kept_colours) {
        if (c < 1 || c > k_)
            throw InputError("kept colour out of range: " + std::to_string(c));
        if (remap[c] != 0) throw InputError("kept colour repeated: " + std::to_string(c));
        remap[c] = next++;
    }
    std::vector<Edge> edges;
    for (const auto& e : edges_)
        if (remap[e.colour] != 0) edges.push_back({e.u, e.v, remap[e.colour]});
    return ColouredGraph(n_, static_cast<int>(kept_colours.size()), std::move(edges));
}

void ColouredGraph::check_vertex(int v, const char* what) const {
    if (v < 0 || v >= n_)
        throw InputError(std::string(what) + ": vertex out of range: " + std::to_string(v));
}

std::span<const std::pair<int, int>> ColouredGraph::neighbours(int v) const {
    check_vertex(v, "neighbours");
    return {adj_.data() + adj_offsets_[v],
            static_cast<std::size_t>(adj_offsets_[v + 1] - adj_offsets_[v])};
}

int ColouredGraph::degree(int v) const {
    check_vertex(v, "degree");
    return static_cast<int>(adj_offsets_[v + 1] - adj_offsets_[v]);
}

bool ColouredGraph::adjacent(int u, int v) const {
    check_vertex(u, "adjacent");
    check_vertex(v, "adjacent");
    if (u == v) return false;
    if (!adj_bits_.empty())
        return (adj_bits_[u * row_words_ + v / 64] >> (v % 64)) & 1u;
    auto row = neighbours(u);
    auto it = std::lower_bound(row.begin(), row.end(), std::pair<int, int>{v, 0});
    return it != row.end() && it->first == v;
}

int ColouredGraph::edge_colour(int u, int v) const {
    check_vertex(u, "edge_colour");
    check_vertex(v, "edge_colour");
    auto row = neighbours(u);
    auto it = std::lower_bound(row.begin(), row.end(), std::pair<int, int>{v, 0});
    if (it == row.end() || it->first != v) return 0;
    return it->second;
}

std::vector<long long> ColouredGraph::colour_totals() const {
    std::vector<long long> totals(k_, 0);
    for (const auto& e : edges_) ++totals[e.colour - 1];
    return totals;
}

bool ColouredGraph::operator==(const ColouredGraph& other) const {
    return n_ == other.n_ && k_ == other.k_ && edges_ == other.edges_;
}

std::vector<int> closed_neighbourhood(const ColouredGraph& g, int v, int t) {
    if (v < 0 || v >= g.vertex_count())
        throw InputError("closed_neighbourhood: vertex out of range: " + std::to_string(v));
    if (t < 1) throw InputError("closed_neighbourhood: radius must be >= 1");
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<int> frontier{v}, result{v};
    dist[v] = 0;
    for (int level = 1; level <= t && !frontier.empty(); ++level) {
        std::vector<int> next;
        for (int a : frontier) {
            for (auto [b, c] : g.neighbours(a)) {
                (void)c;
                if (dist[b] < 0) {
                    dist[b] = level;
                    next.push_back(b);
                    result.push_back(b);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<long long> colour_counts(const ColouredGraph& g, std::span<const int> s) {
    std::vector<std::uint64_t> in_set((g.vertex_count() + 63) / 64, 0);
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count())
            throw InputError("colour_counts: vertex out of range: " + std::to_string(v));
        in_set[v / 64] |= 1ull << (v % 64);
    }
    std::vector<long long> counts(g.colour_count(), 0);
    for (int a : s) {
        for (auto [b, c] : g.neighbours(a)) {
            if (b > a && ((in_set[b / 64] >> (b % 64)) & 1u)) ++counts[c - 1];
        }
    }
    return counts;
}

VertexStats vertex_stats(const ColouredGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw InputError("vertex_stats: vertex out of range: " + std::to_string(v));
    VertexStats stats;
    stats.vertex = v;
    stats.deg_by_colour.assign(g.colour_count(), 0);
    for (auto [b, c] : g.neighbours(v)) {
        (void)b;
        ++stats.deg_by_colour[c - 1];
    }
    std::vector<int> closed = closed_neighbourhood(g, v, 1);
    stats.closed_count_by_colour = colour_counts(g, closed);
    std::vector<int> open;
    open.reserve(closed.size() - 1);
    for (int u : closed)
        if (u != v) open.push_back(u);
    stats.open_count_by_colour = colour_counts(g, open);
    // e_j[v] = e_j(v) + deg_j(v) holds for every graph; recounted independently
    for (int j = 0; j < g.colour_count(); ++j) {
        assert(stats.closed_count_by_colour[j] ==
               stats.open_count_by_colour[j] + stats.deg_by_colour[j]);
    }
    return stats;
}

}  // namespace flipforge
