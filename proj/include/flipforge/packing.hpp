#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flipforge/coloured_graph.hpp"
#include "flipforge/verification.hpp"

namespace flipforge {

// Switching procedure ran out of restarts. Distinct from InputError so the
// CLI can report failure (exit 3) separately from bad input (exit 1).
struct PackingExhausted : std::runtime_error {
    explicit PackingExhausted(const std::string& msg) : std::runtime_error(msg) {}
};

// Length of a shortest cycle, or -1 for acyclic graphs.
long long girth(const ColouredGraph& g);

// Pairing-model sampling with rejection: r-regular simple graph on n
// vertices with girth >= g, deterministic for a given seed. Returns nothing
// after max_attempts rejections (an outcome, not an error).
std::optional<ColouredGraph> random_regular_with_girth(int n, int r, int g,
                                                       std::uint64_t seed,
                                                       int max_attempts = 20000);

struct PackingResult {
    std::vector<int> sigma;  // placement of H-vertex x at sigma[x]
    ColouredGraph combined;  // G coloured 2, sigma(H) coloured 1
    long long switches = 0;
    int restarts = 0;
    std::uint64_t seed = 0;
};

// Edge-disjoint placement of H onto G's vertex set under 2*D(G)*D(H) < n,
// by conflict-eliminating transpositions from a seeded random bijection.
// Conflicts are processed in canonical edge order and the first strictly
// improving swap in vertex order is taken, so runs replay exactly.
PackingResult sauer_spencer_pack(const ColouredGraph& g, const ColouredGraph& h,
                                 std::uint64_t seed);

// Line graph, single colour 1.
ColouredGraph line_graph(const ColouredGraph& g);

// Predicted count 2*((b^j-1)/(b-1))*C(b+1,2) of clique edges within the
// distance-j ball of a joining edge in the line graph of two joined
// (j+1,b)-perfect trees.
long long perfect_tree_line_count(long long b, long long j);

// The same count measured on the explicit joined-tree line graph.
long long perfect_tree_line_count_explicit(int b, int j);

// Wires girth-constrained generation, line graphs and packing together at
// toy scale and reports which inequalities of the large-girth argument hold
// there. No flip property is claimed; the verdict is whatever the verifier
// measures.
struct PipelineDemoReport {
    int b = 0, q = 0, t = 0;
    std::uint64_t seed = 0;
    int n = 0;                      // packed order
    long long girth_required = 0;   // 2*((q+3)*b)^t
    long long girth_actual = 0;     // girth of the red graph
    bool degree_condition = false;  // b >= 2*(q+3)^t
    bool girth_condition = false;   // girth_actual > girth_required
    bool packing_condition = false; // 2*D(G)*D(H) < n
    bool edge_disjoint = false;     // recounted
    bool flip_verdict = false;      // measured t-flip verdict of the union
    long long blue_count_bound = 0; // b^(t+1)
    long long blue_min_count = 0;   // min over v of e_{1,t}[v]
    long long red_max_count = 0;    // max over v of e_{2,t}[v]
};

PipelineDemoReport packing_pipeline_demo(int b, int q, int t, std::uint64_t seed);

}  // namespace flipforge
