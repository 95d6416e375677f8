#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "flipforge/coloured_graph.hpp"

namespace flipforge {

enum class VerifyMode { strict, weak };

// Measured per-vertex statistics: degrees by colour and cumulative counts
// e_{j,s}[v] for 1 <= s <= t, laid out flat for cache friendliness.
struct StatsMatrix {
    int vertices = 0;
    int colours = 0;
    int t = 1;
    std::vector<long long> deg;     // deg[v*k + (j-1)]
    std::vector<long long> counts;  // counts[(v*t + (s-1))*k + (j-1)]

    long long degree(int v, int colour) const { return deg[(long long)v * colours + colour - 1]; }
    long long count(int v, int s, int colour) const {
        return counts[((long long)v * t + s - 1) * colours + colour - 1];
    }
};

// Construction-independent full sweep: BFS ball of radius t around every
// vertex, edges counted by the largest distance level of their endpoints.
// Parallel over vertex blocks; results are positionally deterministic.
StatsMatrix measure_counts(const ColouredGraph& g, int t);

struct Counterexample {
    int vertex = 0;
    int distance = 1;
    int colour_low = 0;   // i
    int colour_high = 0;  // j > i
    std::string kind;     // "degree" or "count"
    long long value_low = 0;
    long long value_high = 0;
};

struct FlipReport {
    VerifyMode mode = VerifyMode::strict;
    int t = 1;
    int colours = 0;
    int vertices = 0;
    bool pass = false;
    bool colour_regular = false;
    bool require_colour_regular = false;
    std::vector<long long> degrees;  // per colour, when colour_regular
    StatsMatrix stats;
    std::optional<Counterexample> first_counterexample;
    std::vector<long long> global_edge_counts;  // e_j(G)

    std::string summary() const;
};

// Flip / weak-flip verdict at distance 1. Strict mode demands, for every
// vertex and i < j, deg_j(v) > deg_i(v) and e_j[v] < e_i[v]; weak mode
// relaxes the count inequality to <=. With require_colour_regular set,
// colour degrees must also be constant over the vertices.
FlipReport verify_flip(const ColouredGraph& g, VerifyMode mode,
                       bool require_colour_regular = false);

// Flip verdict in every closed s-neighbourhood for 1 <= s <= t.
FlipReport verify_t_flip(const ColouredGraph& g, int t,
                         bool require_colour_regular = false);

// Triangle types rooted at a vertex of a two-coloured graph: the first two
// letters are the colours of the edges at the root (B=1, R=2, unordered),
// the third the colour of the opposite edge.
enum TriangleType { BBB = 0, BBR = 1, BRB = 2, BRR = 3, RRB = 4, RRR = 5 };

struct TriangleCensus {
    std::vector<std::array<long long, 6>> per_vertex;
    std::array<long long, 6> totals{};
};

TriangleCensus triangle_census(const ColouredGraph& g);

struct NecessityWitness {
    int vertex = 0;
    long long open_blue = 0;   // e_B(v)
    long long open_red = 0;    // e_R(v)
    long long difference = 0;  // e_B(v) - e_R(v)
    long long bound = 0;       // C(b,2)
};

// For a verified (b,r)-flip graph, returns a vertex with
// e_B(v) - e_R(v) <= C(b,2) (the averaging step of the degree bound);
// the vertex with the smallest difference is reported.
NecessityWitness classify_necessity_witness(const ColouredGraph& g);

std::string to_string(VerifyMode m);

}  // namespace flipforge
