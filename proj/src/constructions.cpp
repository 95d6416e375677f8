#include "flipforge/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "flipforge/factors.hpp"
#include "flipforge/products.hpp"
#include "flipforge/util.hpp"

namespace flipforge {

nlohmann::json Certificate::to_json() const {
    return nlohmann::json{{"recipe", recipe}, {"params", params},
                          {"colours", colours}, {"vertices", vertices},
                          {"t", t},           {"degrees", degrees},
                          {"counts", counts}};
}

namespace {

void check_rb_range(const char* who, long long b, long long r) {
    if (!(3 <= b && b < r && r <= binom2(b + 1) - 1))
        throw InputError(std::string(who) + ": (" + std::to_string(b) + "," +
                         std::to_string(r) +
                         ") rejected: classifier requires 3 <= b < r <= C(b+1,2)-1" +
                         " (here C(b+1,2)-1 = " + std::to_string(binom2(b + 1) - 1) + ")");
}

// K_{side,side} whose cyclic-shift matchings are grouped into colours:
// groups[i].first shifts coloured groups[i].second, consumed in order.
ColouredGraph coloured_bipartite(int side,
                                 const std::vector<std::pair<long long, int>>& groups,
                                 int palette) {
    FactorDecomposition shifts = bipartite_d_factor(side, side);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(side) * side);
    std::size_t cursor = 0;
    for (auto [count, colour] : groups) {
        for (long long i = 0; i < count; ++i, ++cursor) {
            for (auto [u, v] : shifts.factors[cursor]) edges.push_back({u, v, colour});
        }
    }
    if (cursor != shifts.factors.size())
        throw InputError("coloured_bipartite: shift groups must cover all matchings");
    return ColouredGraph(2 * side, palette, std::move(edges));
}

long long largest_admissible_x(long long b, long long r) {
    return b - 1 - (1 + isqrt_floor(1 + 8 * (r - b))) / 2;
}

}  // namespace

Construction construct_rb(int b, int r) {
    check_rb_range("construct_rb", b, r);
    ColouredGraph red = ColouredGraph::complete_bipartite(r, 2, 2);
    ColouredGraph blue = ColouredGraph::complete(b + 1, 1, 2);
    ColouredGraph g = cartesian_product({red, blue});
    Certificate cert;
    cert.recipe = "rb";
    cert.params = {{"b", b}, {"r", r}};
    cert.colours = 2;
    cert.vertices = g.vertex_count();
    cert.degrees = {b, r};
    cert.counts = {{binom2(b + 1), r}};
    return {std::move(g), std::move(cert)};
}

Construction construct_rb_optimized(int b, int r, std::optional<int> x_opt) {
    check_rb_range("construct_rb_optimized", b, r);
    long long x = x_opt ? *x_opt : largest_admissible_x(b, r);
    if (x < 0 || x > b || x + binom2(b + 1 - x) <= r)
        throw InputError("construct_rb_optimized: x=" + std::to_string(x) +
                         " rejected: need 0 <= x <= b and x + C(b+1-x,2) > r");
    int side = r + static_cast<int>(x);
    ColouredGraph bip = coloured_bipartite(side, {{x, 1}, {r, 2}}, 2);
    ColouredGraph blue = ColouredGraph::complete(b + 1 - static_cast<int>(x), 1, 2);
    ColouredGraph g = cartesian_product({bip, blue});
    Certificate cert;
    cert.recipe = "rb-opt";
    cert.params = {{"b", b}, {"r", r}, {"x", x}};
    cert.colours = 2;
    cert.vertices = g.vertex_count();
    cert.degrees = {b, r};
    cert.counts = {{x + binom2(b + 1 - x), r}};
    return {std::move(g), std::move(cert)};
}

Construction construct_weak_23() {
    ColouredGraph red = ColouredGraph::complete_bipartite(3, 2, 2);
    ColouredGraph blue = ColouredGraph::complete(3, 1, 2);
    ColouredGraph g = cartesian_product({red, blue});
    Certificate cert;
    cert.recipe = "weak23";
    cert.colours = 2;
    cert.vertices = g.vertex_count();
    cert.degrees = {2, 3};
    cert.counts = {{3, 3}};
    return {std::move(g), std::move(cert)};
}

Construction construct_3flip(int a1, int a2, int a3) {
    if (!(0 < a1 && a1 < a2 && a2 < a3))
        throw InputError("construct_3flip: degrees must be strictly increasing");
    check_rb_range("construct_3flip (inner pair)", a2, a3);
    long long chosen = -1;
    for (long long x = a2; x >= 0; --x) {
        long long e2 = x + binom2(a2 + 1 - x);
        if (e2 > a3 && e2 < binom2(a1 + 1)) {
            chosen = x;
            break;
        }
    }
    if (chosen < 0) {
        std::string hint = a3 <= 2 * a1 - 2
                               ? "; the interval recipe applies (a3 <= 2*a1-2)"
                               : "";
        throw InputError("construct_3flip: no x with a3 < x + C(a2+1-x,2) < C(a1+1,2) for (" +
                         std::to_string(a1) + "," + std::to_string(a2) + "," +
                         std::to_string(a3) + ")" + hint);
    }
    Construction inner = construct_rb_optimized(a2, a3, static_cast<int>(chosen));
    // shift the two-colour witness to colours {2,3} and add K_{a1+1} as colour 1
    std::vector<Edge> shifted = inner.graph.edges();
    for (auto& e : shifted) e.colour += 1;
    ColouredGraph h(inner.graph.vertex_count(), 3, std::move(shifted));
    ColouredGraph clique = ColouredGraph::complete(a1 + 1, 1, 3);
    ColouredGraph g = cartesian_product({h, clique});
    Certificate cert;
    cert.recipe = "three";
    cert.params = {{"a1", a1}, {"a2", a2}, {"a3", a3}, {"x", chosen}};
    cert.colours = 3;
    cert.vertices = g.vertex_count();
    cert.degrees = {a1, a2, a3};
    cert.counts = {{binom2(a1 + 1), chosen + binom2(a2 + 1 - chosen), a3}};
    return {std::move(g), std::move(cert)};
}

Construction construct_gap(int k, std::optional<long long> t_opt) {
    if (k < 4) throw InputError("construct_gap: need at least 4 colours");
    long long n = 1;
    while (4 * (k - 3) * n <= static_cast<long long>(k) * (k - 1) * (k - 1)) ++n;
    long long t_min = (4 * n + k - 2) / (k - 1);
    long long t = t_opt ? *t_opt : t_min;
    if (t < t_min)
        throw InputError("construct_gap: t=" + std::to_string(t) +
                         " rejected: need t >= ceil(4n/(k-1)) = " + std::to_string(t_min) +
                         " with n = " + std::to_string(n));
    long long rho = (k - 1) * (2 * t + k - 2) / 2;

    // K_{2n}: k-i one-factors coloured i for 1 < i < k, the rest coloured 1
    FactorDecomposition fac = one_factorization(static_cast<int>(2 * n));
    std::vector<Edge> kedges;
    std::size_t cursor = 0;
    for (int i = 2; i <= k - 1; ++i)
        for (int copy = 0; copy < k - i; ++copy, ++cursor)
            for (auto [u, v] : fac.factors[cursor]) kedges.push_back({u, v, i});
    for (; cursor < fac.factors.size(); ++cursor)
        for (auto [u, v] : fac.factors[cursor]) kedges.push_back({u, v, 1});
    ColouredGraph kgraph(static_cast<int>(2 * n), k, std::move(kedges));

    // K_{rho,rho}: t+i matchings coloured 2+i for 0 <= i <= k-2
    std::vector<std::pair<long long, int>> groups;
    for (int i = 0; i <= k - 2; ++i) groups.emplace_back(t + i, 2 + i);
    ColouredGraph hgraph = coloured_bipartite(static_cast<int>(rho), groups, k);

    ColouredGraph g = strong_product(hgraph, kgraph);

    Certificate cert;
    cert.recipe = "gap";
    cert.params = {{"k", k}, {"n", n}, {"t", t}, {"rho", rho}};
    cert.colours = k;
    cert.vertices = g.vertex_count();
    long long deg1 = 2 * n - 1 - binom2(k - 1);
    cert.degrees.push_back(deg1);
    for (int i = 2; i <= k; ++i) cert.degrees.push_back((k - i) + 2 * n * (t + i - 2));
    std::vector<long long> counts;
    counts.push_back((rho + 1) * n * deg1);
    for (int i = 2; i <= k; ++i) {
        long long deg_k_i = i < k ? k - i : 0;
        counts.push_back((rho + 1) * n * deg_k_i + 4 * n * n * (t + i - 2));
    }
    cert.counts = {counts};
    return {std::move(g), std::move(cert)};
}

Construction construct_rc_constant(long long r, long long c) {
    if (r < 1) throw InputError("construct_rc_constant: r must be >= 1");
    if (c < 0 || c > binom2(r))
        throw InputError("construct_rc_constant: c must satisfy 0 <= c <= C(r,2)");
    auto part = constant_partition(r, c);
    if (!part)
        throw InputError("construct_rc_constant: no partition of " + std::to_string(r) +
                         " with C-sum " + std::to_string(c) + " exists");
    std::vector<ColouredGraph> cliques;
    for (long long a : part->parts)
        cliques.push_back(ColouredGraph::complete(static_cast<int>(a) + 1, 1, 1));
    ColouredGraph g = cartesian_product(cliques);
    Certificate cert;
    cert.recipe = "rc-constant";
    cert.params = {{"r", r}, {"c", c}, {"partition", part->parts}};
    cert.colours = 1;
    cert.vertices = g.vertex_count();
    cert.degrees = {r};
    cert.counts = {{r + c}};
    return {std::move(g), std::move(cert)};
}

namespace {
constexpr int kIntervalExecutableBound = 5;
}

Construction construct_interval_subsequence(int b, const std::vector<long long>& degrees,
                                            bool force) {
    if (b < 3) throw InputError("construct_interval: b must be >= 3");
    if (degrees.size() < 2)
        throw InputError("construct_interval: need at least 2 colours");
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i] < b || degrees[i] > 2 * b - 2)
            throw InputError("construct_interval: degree " + std::to_string(degrees[i]) +
                             " outside [b, 2b-2]");
        if (i > 0 && degrees[i] <= degrees[i - 1])
            throw InputError("construct_interval: degrees must strictly increase");
    }
    const int k = static_cast<int>(degrees.size());
    long long side = 0;
    for (long long d : degrees) side += 2 * (d - b);
    long double log10_order = std::log10(static_cast<long double>(std::max(1ll, 2 * side)));
    for (long long d : degrees)
        log10_order += std::log10(static_cast<long double>(b + 1 - (d - b)));
    if (!force && log10_order > std::log10(static_cast<long double>(kDefaultOrderCap)))
        throw InputError("construct_interval: estimated order exceeds cap " +
                         std::to_string(kDefaultOrderCap) + "; pass force to build anyway");
    std::vector<ColouredGraph> factors;
    if (side > 0) {
        std::vector<std::pair<long long, int>> groups;
        for (int i = 0; i < k; ++i) groups.emplace_back(2 * (degrees[i] - b), i + 1);
        factors.push_back(coloured_bipartite(static_cast<int>(side), groups, k));
    }
    for (int i = 0; i < k; ++i) {
        long long j = degrees[i] - b;
        factors.push_back(ColouredGraph::complete(static_cast<int>(b + 1 - j), i + 1, k));
    }
    ColouredGraph g = cartesian_product(factors);
    Certificate cert;
    cert.recipe = degrees.front() == b && degrees.back() == 2 * b - 2 &&
                          degrees.size() == static_cast<std::size_t>(b - 1)
                      ? "interval"
                      : "interval-subsequence";
    cert.params = {{"b", b}, {"degrees", degrees}};
    cert.colours = k;
    cert.vertices = g.vertex_count();
    cert.degrees = degrees;
    std::vector<long long> counts;
    for (long long d : degrees) {
        long long j = d - b;
        counts.push_back(binom2(b + 1 - j) + 2 * j);
    }
    cert.counts = {counts};
    return {std::move(g), std::move(cert)};
}

Construction construct_interval(int b, bool force) {
    if (b < 3) throw InputError("construct_interval: b must be >= 3");
    if (b > kIntervalExecutableBound && !force)
        throw InputError("construct_interval: b=" + std::to_string(b) +
                         " is above the executable bound " +
                         std::to_string(kIntervalExecutableBound) +
                         "; pass force to build anyway");
    std::vector<long long> degrees;
    for (long long d = b; d <= 2 * b - 2; ++d) degrees.push_back(d);
    return construct_interval_subsequence(b, degrees, true);
}

Construction construct_constant_chain(const std::vector<long long>& degrees,
                                      long long m, long long order_cap) {
    if (degrees.size() < 2)
        throw InputError("construct_constant_chain: need at least 2 colours");
    for (std::size_t i = 1; i < degrees.size(); ++i)
        if (degrees[i] <= degrees[i - 1])
            throw InputError("construct_constant_chain: degrees must strictly increase");

    std::vector<ConstantPartition> parts;
    long double log10_order = 0;
    for (long long d : degrees) {
        long long c = m - 2 * (d - degrees.front());
        if (c < 0)
            throw InputError("construct_constant_chain: chain runs out of budget: degree " +
                             std::to_string(d) + " needs C-sum " + std::to_string(c));
        auto part = constant_partition(d, c);
        if (!part)
            throw InputError("construct_constant_chain: no (" + std::to_string(d) + "," +
                             std::to_string(c) + ")-constant witness");
        for (long long a : part->parts)
            log10_order += std::log10(static_cast<long double>(a + 1));
        parts.push_back(std::move(*part));
    }
    if (log10_order > std::log10(static_cast<long double>(order_cap))) {
        char estimate[64];
        std::snprintf(estimate, sizeof estimate, "1e%+.0Lf", log10_order);
        throw InputError("construct_constant_chain: estimated order about " +
                         std::string(estimate) + " exceeds cap " +
                         std::to_string(order_cap));
    }

    std::vector<ColouredGraph> chain;
    for (const auto& part : parts) {
        std::vector<ColouredGraph> cliques;
        for (long long a : part.parts)
            cliques.push_back(ColouredGraph::complete(static_cast<int>(a) + 1, 1, 1));
        chain.push_back(cartesian_product(cliques));
    }
    ColouredGraph g = ccp_flip_assemble(chain);

    Certificate cert;
    cert.recipe = "constant-chain";
    nlohmann::json part_json = nlohmann::json::array();
    for (const auto& part : parts) part_json.push_back(part.parts);
    cert.params = {{"degrees", degrees}, {"M", m}, {"partitions", part_json}};
    cert.colours = static_cast<int>(degrees.size());
    cert.vertices = g.vertex_count();
    cert.degrees = degrees;
    std::vector<long long> counts;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        counts.push_back(degrees[i] + (m - 2 * (degrees[i] - degrees.front())));
    cert.counts = {counts};
    return {std::move(g), std::move(cert)};
}

Construction construct_interval_large(int b, std::optional<int> length,
                                      std::optional<long long> m, long long order_cap) {
    if (b < 1) throw InputError("construct_interval_large: b must be >= 1");
    long long m_value = m ? *m : floor_div(quadratic_margin_floor(b), 2);
    int len = length ? *length : static_cast<int>(floor_div(quadratic_margin_floor(b), 4)) + 1;
    if (len < 2)
        throw InputError("construct_interval_large: length " + std::to_string(len) +
                         " rejected: at least 2 colours required");
    std::vector<long long> degrees;
    for (int j = 0; j < len; ++j) degrees.push_back(b + j);
    Construction built = construct_constant_chain(degrees, m_value, order_cap);
    built.certificate.recipe = "interval-large";
    built.certificate.params["b"] = b;
    return built;
}

Construction construct_cayley_tflip(int s, std::optional<int> t_opt) {
    if (s < 2 || s > 4)
        throw InputError("construct_cayley_tflip: s must be in [2,4] (memory cap)");
    int t = t_opt ? *t_opt : s - 1;
    if (t < 1 || t >= s)
        throw InputError("construct_cayley_tflip: t=" + std::to_string(t) +
                         " rejected: need 1 <= t < s");
    const int pow_s = 1 << s;
    const int n = pow_s + s;
    const long long order = 1ll << n;

    std::vector<int> connectors;
    for (int mask = 1; mask < pow_s; ++mask) connectors.push_back(mask);  // B
    const int blue_count = static_cast<int>(connectors.size());
    for (int i = s; i < n; ++i) connectors.push_back(1 << i);  // R

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(order) * connectors.size() / 2);
    for (long long g = 0; g < order; ++g) {
        for (std::size_t idx = 0; idx < connectors.size(); ++idx) {
            long long h = g ^ connectors[idx];
            if (h > g)
                edges.push_back({static_cast<int>(g), static_cast<int>(h),
                                 idx < static_cast<std::size_t>(blue_count) ? 1 : 2});
        }
    }
    ColouredGraph graph(static_cast<int>(order), 2, std::move(edges));

    Certificate cert;
    cert.recipe = "cayley";
    cert.params = {{"s", s}, {"t", t}, {"n", n}};
    cert.colours = 2;
    cert.vertices = order;
    cert.t = t;
    cert.degrees = {pow_s - 1, pow_s};
    long long e1 = binom2(pow_s), e2 = pow_s;
    cert.counts.push_back({e1, e2});
    for (int j = 1; j < t; ++j) {
        e1 += binom2(pow_s) * binom(pow_s, j);
        e2 += static_cast<long long>(pow_s - 1) * (pow_s - j + 1) * binom(pow_s, j - 1) +
              static_cast<long long>(pow_s - j) * binom(pow_s, j);
        cert.counts.push_back({e1, e2});
    }
    return {std::move(graph), std::move(cert)};
}

}  // namespace flipforge
