#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "flipforge/coloured_graph.hpp"

namespace flipforge {

// Predicted statistics of a construction, cross-checked against measured
// values by the verifier in tests; the verifier itself never reads these.
struct Certificate {
    std::string recipe;
    nlohmann::json params = nlohmann::json::object();
    int colours = 0;
    long long vertices = 0;
    int t = 1;
    std::vector<long long> degrees;              // per colour
    std::vector<std::vector<long long>> counts;  // counts[s-1][colour-1]

    nlohmann::json to_json() const;
};

struct Construction {
    ColouredGraph graph;
    Certificate certificate;
};

inline constexpr long long kDefaultOrderCap = 1'000'000;

// Two-colour flip graph K_{r,r} (red) x K_{b+1} (blue) on 2r(b+1) vertices;
// valid exactly for 3 <= b < r <= C(b+1,2)-1.
Construction construct_rb(int b, int r);

// Smaller two-colour witness K_{r+x,r+x} (x-factor blue, r-factor red)
// x K_{b+1-x} (blue) on 2(r+x)(b+1-x) vertices. Requires
// 0 <= x <= b and x + C(b+1-x,2) > r; when x is omitted the largest
// admissible value is derived in closed form.
Construction construct_rb_optimized(int b, int r, std::optional<int> x = std::nullopt);

// K_{3,3} (red) x K_3 (blue): 18 vertices, e_1[v] = e_2[v] = 3 everywhere,
// so the strict verdict fails and the weak one passes.
Construction construct_weak_23();

// Three-colour flip graph H x K_{a1+1} where H realizes (a2,a3) with
// e_2[v] = x + C(a2+1-x,2) strictly between a3 and C(a1+1,2); the largest
// admissible x is chosen (smallest order).
Construction construct_3flip(int a1, int a2, int a3);

// k >= 4 colours with bounded smallest degree and t-scalable largest degree:
// K_{2n} carrying k-i one-factors of colour i packed under colour 1, strongly
// multiplied by K_{rho,rho} carrying t+i matchings of colour 2+i.
Construction construct_gap(int k, std::optional<long long> t = std::nullopt);

// Single-colour r-regular graph with e(v) = c at every vertex, as a Cartesian
// product of cliques K_{a_j+1} over a partition realizing (r, c).
Construction construct_rc_constant(long long r, long long c);

// (b, b+1, ..., 2b-2)-flip graph: K_{n,n} with 2j-factors coloured j+1,
// multiplied by cliques K_{b+1-j} coloured j+1 for 0 <= j <= b-2.
// Orders grow fast; b > 5 requires force.
Construction construct_interval(int b, bool force = false);

// Restriction of the interval recipe to an arbitrary strictly increasing
// degree subset of [b, 2b-2]; the bipartite factor keeps only the matchings
// of the kept colours, so the graph stays as small as possible.
Construction construct_interval_subsequence(int b, const std::vector<long long>& degrees,
                                            bool force = false);

// Chain of (b+j-1, M-2(j-1))-constant graphs combined into a flip graph of
// consecutive degrees; rejected when the estimated order exceeds the cap.
Construction construct_interval_large(int b, std::optional<int> length = std::nullopt,
                                      std::optional<long long> m = std::nullopt,
                                      long long order_cap = kDefaultOrderCap);

// Chain of (degrees[i], M-2*(degrees[i]-degrees[0]))-constant graphs; used by
// the classifier for wide-interval subsequences.
Construction construct_constant_chain(const std::vector<long long>& degrees,
                                      long long m, long long order_cap = kDefaultOrderCap);

// Cayley graph over Z_2^n, n = 2^s + s, connecting set B u R where B is the
// punctured span of the first s unit vectors (colour 1) and R the remaining
// unit vectors (colour 2). The certificate carries the cumulative
// distance-s counts at radius t (default s-1) from the recurrences.
Construction construct_cayley_tflip(int s, std::optional<int> t = std::nullopt);

}  // namespace flipforge
