#include "flipforge/verification.hpp"

#include <algorithm>
#include <cassert>

#include "flipforge/util.hpp"

namespace flipforge {

std::string to_string(VerifyMode m) {
    return m == VerifyMode::strict ? "strict" : "weak";
}

std::string FlipReport::summary() const {
    return std::string(pass ? "PASS" : "FAIL") + " mode=" + flipforge::to_string(mode) +
           " t=" + std::to_string(t) + " colours=" + std::to_string(colours) +
           " vertices=" + std::to_string(vertices);
}

StatsMatrix measure_counts(const ColouredGraph& g, int t) {
    if (t < 1) throw InputError("measure_counts: radius must be >= 1");
    const int n = g.vertex_count();
    const int k = g.colour_count();
    StatsMatrix m;
    m.vertices = n;
    m.colours = k;
    m.t = t;
    m.deg.assign(static_cast<std::size_t>(n) * k, 0);
    m.counts.assign(static_cast<std::size_t>(n) * t * k, 0);

    parallel_for_blocks(n, [&](long long begin, long long end, int) {
        // reusable per-worker scratch
        std::vector<int> dist(n, -1);
        std::vector<int> ball;
        std::vector<long long> level_counts(static_cast<std::size_t>(t + 1) * k);
        for (long long v = begin; v < end; ++v) {
            for (auto [b, c] : g.neighbours(static_cast<int>(v)))
                (void)b, ++m.deg[v * k + c - 1];

            ball.clear();
            std::fill(level_counts.begin(), level_counts.end(), 0);
            ball.push_back(static_cast<int>(v));
            dist[v] = 0;
            std::size_t frontier_begin = 0;
            for (int level = 1; level <= t; ++level) {
                std::size_t frontier_end = ball.size();
                for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
                    for (auto [b, c] : g.neighbours(ball[i])) {
                        (void)c;
                        if (dist[b] < 0) {
                            dist[b] = level;
                            ball.push_back(b);
                        }
                    }
                }
                frontier_begin = frontier_end;
            }
            // each edge inside the ball counted once at level max(dist of ends)
            for (int a : ball) {
                for (auto [b, c] : g.neighbours(a)) {
                    if (b > a && dist[b] >= 0) {
                        int level = std::max(dist[a], dist[b]);
                        ++level_counts[static_cast<std::size_t>(level) * k + c - 1];
                    }
                }
            }
            for (int s = 1; s <= t; ++s) {
                for (int j = 0; j < k; ++j) {
                    long long cum = 0;
                    for (int level = 0; level <= s; ++level)
                        cum += level_counts[static_cast<std::size_t>(level) * k + j];
                    m.counts[(v * t + s - 1) * static_cast<long long>(k) + j] = cum;
                }
            }
            for (int a : ball) dist[a] = -1;
        }
    });
    return m;
}

namespace {

FlipReport run_verify(const ColouredGraph& g, VerifyMode mode, int t,
                      bool require_colour_regular) {
    if (g.colour_count() < 2) throw InputError("verify: graph must use at least 2 colours");
    if (g.vertex_count() == 0) throw InputError("verify: empty graph");
    if (t < 1) throw InputError("verify: radius must be >= 1");
    if (mode == VerifyMode::weak && t != 1)
        throw InputError("verify: weak mode is defined for t = 1 only");

    const int n = g.vertex_count();
    const int k = g.colour_count();
    FlipReport report;
    report.mode = mode;
    report.t = t;
    report.colours = k;
    report.vertices = n;
    report.require_colour_regular = require_colour_regular;
    report.stats = measure_counts(g, t);
    report.global_edge_counts = g.colour_totals();
    const StatsMatrix& m = report.stats;

    report.colour_regular = true;
    for (int v = 1; v < n && report.colour_regular; ++v)
        for (int j = 1; j <= k; ++j)
            if (m.degree(v, j) != m.degree(0, j)) {
                report.colour_regular = false;
                break;
            }
    if (report.colour_regular)
        for (int j = 1; j <= k; ++j) report.degrees.push_back(m.degree(0, j));

    report.pass = true;
    for (int v = 0; v < n && report.pass; ++v) {
        for (int i = 1; i <= k && report.pass; ++i) {
            for (int j = i + 1; j <= k && report.pass; ++j) {
                if (m.degree(v, j) <= m.degree(v, i)) {
                    report.pass = false;
                    report.first_counterexample = Counterexample{
                        v, 0, i, j, "degree", m.degree(v, i), m.degree(v, j)};
                    break;
                }
                for (int s = 1; s <= t; ++s) {
                    long long lo = m.count(v, s, i), hi = m.count(v, s, j);
                    bool ok = mode == VerifyMode::strict ? hi < lo : hi <= lo;
                    if (!ok) {
                        report.pass = false;
                        report.first_counterexample =
                            Counterexample{v, s, i, j, "count", lo, hi};
                        break;
                    }
                }
            }
        }
    }
    if (report.pass && require_colour_regular && !report.colour_regular) {
        report.pass = false;
        for (int v = 1; v < n && !report.first_counterexample; ++v)
            for (int j = 1; j <= k; ++j)
                if (m.degree(v, j) != m.degree(0, j)) {
                    report.first_counterexample = Counterexample{
                        v, 0, j, j, "degree-irregular", m.degree(0, j), m.degree(v, j)};
                    break;
                }
    }
    // per-vertex degree majority forces the global edge-count majority
    if (report.pass) {
        for (int i = 0; i + 1 < k; ++i)
            assert(report.global_edge_counts[i + 1] > report.global_edge_counts[i]);
    }
    return report;
}

}  // namespace

FlipReport verify_flip(const ColouredGraph& g, VerifyMode mode,
                       bool require_colour_regular) {
    return run_verify(g, mode, 1, require_colour_regular);
}

FlipReport verify_t_flip(const ColouredGraph& g, int t, bool require_colour_regular) {
    return run_verify(g, VerifyMode::strict, t, require_colour_regular);
}

TriangleCensus triangle_census(const ColouredGraph& g) {
    if (g.colour_count() != 2)
        throw InputError("triangle_census: graph must use exactly 2 colours");
    const int n = g.vertex_count();
    TriangleCensus census;
    census.per_vertex.assign(n, {});
    for (int v = 0; v < n; ++v) {
        auto row = g.neighbours(v);
        for (std::size_t i = 0; i < row.size(); ++i) {
            for (std::size_t j = i + 1; j < row.size(); ++j) {
                int a = row[i].first, b = row[j].first;
                int z = g.edge_colour(a, b);
                if (z == 0) continue;
                int x = row[i].second, y = row[j].second;
                TriangleType type;
                if (x == 1 && y == 1)
                    type = z == 1 ? BBB : BBR;
                else if (x == 2 && y == 2)
                    type = z == 1 ? RRB : RRR;
                else
                    type = z == 1 ? BRB : BRR;
                ++census.per_vertex[v][type];
            }
        }
    }
    for (const auto& row : census.per_vertex)
        for (int type = 0; type < 6; ++type) census.totals[type] += row[type];
    return census;
}

NecessityWitness classify_necessity_witness(const ColouredGraph& g) {
    FlipReport report = verify_flip(g, VerifyMode::strict, true);
    if (g.colour_count() != 2 || !report.pass)
        throw InputError(
            "classify_necessity_witness: input must be a verified two-colour flip graph (" +
            report.summary() + ")");
    const StatsMatrix& m = report.stats;
    NecessityWitness best;
    best.bound = binom2(report.degrees[0]);
    for (int v = 0; v < g.vertex_count(); ++v) {
        long long open_blue = m.count(v, 1, 1) - m.degree(v, 1);
        long long open_red = m.count(v, 1, 2) - m.degree(v, 2);
        long long diff = open_blue - open_red;
        if (v == 0 || diff < best.difference) {
            best.vertex = v;
            best.open_blue = open_blue;
            best.open_red = open_red;
            best.difference = diff;
        }
    }
    assert(best.difference <= best.bound);
    return best;
}

}  // namespace flipforge
