#include "flipforge/packing.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "flipforge/util.hpp"

namespace flipforge {

long long girth(const ColouredGraph& g) {
    const int n = g.vertex_count();
    long long best = -1;
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> queue;
        dist[root] = 0;
        parent[root] = -1;
        queue.push(root);
        while (!queue.empty()) {
            int a = queue.front();
            queue.pop();
            if (best != -1 && 2ll * dist[a] >= best) break;
            for (auto [b, c] : g.neighbours(a)) {
                (void)c;
                if (dist[b] < 0) {
                    dist[b] = dist[a] + 1;
                    parent[b] = a;
                    queue.push(b);
                } else if (b != parent[a]) {
                    long long cycle = dist[a] + dist[b] + 1;
                    if (best == -1 || cycle < best) best = cycle;
                }
            }
        }
        if (best == 3) return best;
    }
    return best;
}

std::optional<ColouredGraph> random_regular_with_girth(int n, int r, int g,
                                                       std::uint64_t seed,
                                                       int max_attempts) {
    if (n < 1 || r < 0) throw InputError("random_regular_with_girth: bad parameters");
    if ((static_cast<long long>(n) * r) % 2 != 0)
        throw InputError("random_regular_with_girth: n*r must be even");
    if (g < 3) throw InputError("random_regular_with_girth: girth target must be >= 3");
    if (r >= n) return std::nullopt;

    Rng rng(seed);
    std::vector<int> stubs(static_cast<std::size_t>(n) * r);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < r; ++i) stubs[static_cast<std::size_t>(v) * r + i] = v;

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        rng.shuffle(stubs);
        std::set<std::pair<int, int>> seen;
        std::vector<Edge> edges;
        edges.reserve(stubs.size() / 2);
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
            int a = stubs[i], b = stubs[i + 1];
            if (a == b) {
                simple = false;
                break;
            }
            if (a > b) std::swap(a, b);
            if (!seen.emplace(a, b).second) {
                simple = false;
                break;
            }
            edges.push_back({a, b, 1});
        }
        if (!simple) continue;
        ColouredGraph candidate(n, 1, std::move(edges));
        long long actual = girth(candidate);
        if (actual == -1 || actual >= g) return candidate;
    }
    return std::nullopt;
}

namespace {

long long count_conflicts(const ColouredGraph& g, const ColouredGraph& h,
                          const std::vector<int>& sigma) {
    long long conflicts = 0;
    for (const auto& e : h.edges())
        if (g.adjacent(sigma[e.u], sigma[e.v])) ++conflicts;
    return conflicts;
}

}  // namespace

PackingResult sauer_spencer_pack(const ColouredGraph& g, const ColouredGraph& h,
                                 std::uint64_t seed) {
    const int n = g.vertex_count();
    if (h.vertex_count() != n)
        throw InputError("sauer_spencer_pack: graphs must share the vertex count");
    int dg = 0, dh = 0;
    for (int v = 0; v < n; ++v) {
        dg = std::max(dg, g.degree(v));
        dh = std::max(dh, h.degree(v));
    }
    if (2ll * dg * dh >= n)
        throw InputError("sauer_spencer_pack: 2*" + std::to_string(dg) + "*" +
                         std::to_string(dh) + " >= " + std::to_string(n) +
                         "; the packing bound gives no guarantee");

    Rng rng(seed);
    PackingResult result;
    result.seed = seed;
    constexpr int kMaxRestarts = 64;
    std::vector<int> sigma(n), inverse(n);

    for (result.restarts = 0; result.restarts <= kMaxRestarts; ++result.restarts) {
        std::iota(sigma.begin(), sigma.end(), 0);
        rng.shuffle(sigma);
        for (int x = 0; x < n; ++x) inverse[sigma[x]] = x;
        long long conflicts = count_conflicts(g, h, sigma);
        long long stall_guard = static_cast<long long>(n) * n + h.edge_count() + 16;
        bool stuck = false;

        while (conflicts > 0 && !stuck) {
            if (--stall_guard < 0) {
                stuck = true;
                break;
            }
            int cx = -1, cy = -1;
            for (const auto& e : h.edges()) {
                if (g.adjacent(sigma[e.u], sigma[e.v])) {
                    cx = e.u;
                    cy = e.v;
                    break;
                }
            }
            (void)cy;
            int u = sigma[cx];
            bool improved = false;
            for (int w = 0; w < n && !improved; ++w) {
                if (w == u) continue;
                int x = inverse[u], y = inverse[w];
                // conflicts on H-edges at x or y, before and after the swap
                long long before = 0, after = 0;
                auto tally = [&](const std::vector<int>& placement, long long& acc) {
                    for (auto [z, c] : h.neighbours(x)) {
                        (void)c;
                        if (g.adjacent(placement[x], placement[z])) ++acc;
                    }
                    for (auto [z, c] : h.neighbours(y)) {
                        (void)c;
                        if (z == x) continue;  // shared edge already counted
                        if (g.adjacent(placement[y], placement[z])) ++acc;
                    }
                };
                tally(sigma, before);
                std::swap(sigma[x], sigma[y]);
                tally(sigma, after);
                if (after < before) {
                    improved = true;
                    conflicts += after - before;
                    inverse[sigma[x]] = x;
                    inverse[sigma[y]] = y;
                    ++result.switches;
                } else {
                    std::swap(sigma[x], sigma[y]);
                }
            }
            if (!improved) stuck = true;
        }
        if (conflicts == 0 && !stuck) {
            std::vector<Edge> edges;
            edges.reserve(static_cast<std::size_t>(g.edge_count() + h.edge_count()));
            for (const auto& e : g.edges()) edges.push_back({e.u, e.v, 2});
            for (const auto& e : h.edges()) edges.push_back({sigma[e.u], sigma[e.v], 1});
            result.sigma = sigma;
            result.combined = ColouredGraph(n, 2, std::move(edges));
            return result;
        }
    }
    throw PackingExhausted("sauer_spencer_pack: no packing found after " +
                           std::to_string(kMaxRestarts) + " restarts (seed " +
                           std::to_string(seed) + ")");
}

ColouredGraph line_graph(const ColouredGraph& g) {
    const auto& edges = g.edges();
    std::vector<std::vector<int>> incident(g.vertex_count());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        incident[edges[i].u].push_back(static_cast<int>(i));
        incident[edges[i].v].push_back(static_cast<int>(i));
    }
    std::vector<Edge> line_edges;
    for (const auto& around : incident)
        for (std::size_t i = 0; i < around.size(); ++i)
            for (std::size_t j = i + 1; j < around.size(); ++j)
                line_edges.push_back({std::min(around[i], around[j]),
                                      std::max(around[i], around[j]), 1});
    return ColouredGraph(static_cast<int>(edges.size()), 1, std::move(line_edges));
}

long long perfect_tree_line_count(long long b, long long j) {
    if (b < 2) throw InputError("perfect_tree_line_count: b must be >= 2");
    if (j < 1) throw InputError("perfect_tree_line_count: j must be >= 1");
    long long geometric = 0, power = 1;  // (b^j - 1)/(b - 1)
    for (long long i = 0; i < j; ++i) {
        geometric += power;
        power *= b;
    }
    return 2 * geometric * binom2(b + 1);
}

long long perfect_tree_line_count_explicit(int b, int j) {
    // two (j+1,b)-perfect trees joined at their roots by an edge
    std::vector<Edge> tree_edges;
    int next = 2;
    tree_edges.push_back({0, 1, 1});
    for (int root : {0, 1}) {
        std::vector<int> frontier{root};
        for (int depth = 0; depth < j + 1; ++depth) {
            std::vector<int> level;
            for (int parent : frontier)
                for (int child = 0; child < b; ++child) {
                    tree_edges.push_back({parent, next, 1});
                    level.push_back(next++);
                }
            frontier = std::move(level);
        }
    }
    ColouredGraph tree(next, 1, std::move(tree_edges));
    // the joining edge is line-graph vertex 0 since {0,1} sorts first
    ColouredGraph lg = line_graph(tree);
    std::vector<int> ball = closed_neighbourhood(lg, 0, j);
    return colour_counts(lg, ball)[0];
}

PipelineDemoReport packing_pipeline_demo(int b, int q, int t, std::uint64_t seed) {
    if (b < 2 || q < 2 || t < 1)
        throw InputError("packing_pipeline_demo: need b >= 2, q >= 2, t >= 1");
    PipelineDemoReport report;
    report.b = b;
    report.q = q;
    report.t = t;
    report.seed = seed;

    const int r = 2 * b + 1;
    // (b+1)-regular base for the line graph; girth 5 is affordable only for b=2
    const int n_h = b == 2 ? 10 : 4 * (b + 1);
    const int girth_h = b == 2 ? 5 : 3;
    Rng seeder(seed);
    auto h_star = random_regular_with_girth(n_h, b + 1, girth_h, seeder.next(), 100000);
    if (!h_star)
        throw PackingExhausted("packing_pipeline_demo: no base graph for these parameters");
    ColouredGraph lg = line_graph(*h_star);

    const int n_l = lg.vertex_count();
    long long n = n_l;
    while (n <= 2ll * r * 2 * b || (n * r) % 2 != 0) n += n_l;
    report.n = static_cast<int>(n);

    std::optional<ColouredGraph> g_star;
    for (int tries = 0; tries < 64 && !g_star; ++tries)
        g_star = random_regular_with_girth(static_cast<int>(n), r, 3, seeder.next(), 100000);
    if (!g_star)
        throw PackingExhausted("packing_pipeline_demo: no red regular graph found");

    // H = enough disjoint copies of the line graph to fill n vertices
    std::vector<Edge> h_edges;
    for (long long copy = 0; copy < n / n_l; ++copy)
        for (const auto& e : lg.edges())
            h_edges.push_back({static_cast<int>(copy * n_l + e.u),
                               static_cast<int>(copy * n_l + e.v), 1});
    ColouredGraph h(static_cast<int>(n), 1, std::move(h_edges));

    PackingResult packed = sauer_spencer_pack(*g_star, h, seeder.next());

    long long factor = 1;
    for (int i = 0; i < t; ++i) factor *= (q + 3) * b;
    report.girth_required = 2 * factor;
    report.girth_actual = girth(*g_star);
    long long degree_factor = 1;
    for (int i = 0; i < t; ++i) degree_factor *= q + 3;
    report.degree_condition = b >= 2 * degree_factor;
    report.girth_condition = report.girth_actual > report.girth_required;
    report.packing_condition = 2ll * r * 2 * b < n;
    report.edge_disjoint =
        packed.combined.edge_count() == g_star->edge_count() + h.edge_count();

    FlipReport flip = verify_t_flip(packed.combined, t);
    report.flip_verdict = flip.pass;
    report.blue_count_bound = 1;
    for (int i = 0; i < t + 1; ++i) report.blue_count_bound *= b;
    report.blue_min_count = flip.stats.count(0, t, 1);
    report.red_max_count = flip.stats.count(0, t, 2);
    for (int v = 0; v < flip.vertices; ++v) {
        report.blue_min_count = std::min(report.blue_min_count, flip.stats.count(v, t, 1));
        report.red_max_count = std::max(report.red_max_count, flip.stats.count(v, t, 2));
    }
    return report;
}

}  // namespace flipforge
