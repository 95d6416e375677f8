#include "flipforge/products.hpp"

#include <algorithm>
#include <string>

#include "flipforge/util.hpp"
#include "flipforge/verification.hpp"

namespace flipforge {

namespace {
constexpr long long kMaxProductVertices = 50'000'000;
constexpr long long kMaxProductEdges = 200'000'000;
}  // namespace

ProductLabelling::ProductLabelling(std::vector<long long> factor_orders)
    : orders(std::move(factor_orders)) {
    if (orders.empty()) throw InputError("product needs at least one factor");
    strides_.assign(orders.size(), 1);
    for (int i = static_cast<int>(orders.size()) - 2; i >= 0; --i)
        strides_[i] = strides_[i + 1] * orders[i + 1];
    for (long long n : orders) {
        if (n < 1) throw InputError("product factor must have at least one vertex");
        if (total_ > kMaxProductVertices / n)
            throw InputError("product too large to materialize");
        total_ *= n;
    }
}

long long ProductLabelling::flatten(std::span<const int> tuple) const {
    long long index = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) index += tuple[i] * strides_[i];
    return index;
}

std::vector<int> ProductLabelling::unflatten(long long index) const {
    std::vector<int> tuple(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        tuple[i] = static_cast<int>(index / strides_[i]);
        index %= strides_[i];
    }
    return tuple;
}

ColouredGraph cartesian_product(const std::vector<ColouredGraph>& factors) {
    if (factors.empty()) throw InputError("cartesian_product: empty factor list");
    const int k = factors.front().colour_count();
    for (const auto& g : factors)
        if (g.colour_count() != k)
            throw InputError("cartesian_product: colour palette mismatch");

    std::vector<long long> orders;
    for (const auto& g : factors) orders.push_back(g.vertex_count());
    ProductLabelling labels(orders);

    long long edge_total = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        long long copies = labels.total() / orders[i];
        if (factors[i].edge_count() > 0 &&
            copies > kMaxProductEdges / factors[i].edge_count())
            throw InputError("cartesian_product: too many edges to materialize");
        edge_total += factors[i].edge_count() * copies;
    }
    if (edge_total > kMaxProductEdges)
        throw InputError("cartesian_product: too many edges to materialize");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(edge_total));
    long long inner = 1;  // stride of coordinate i, maintained right to left
    for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
        long long outer = labels.total() / (orders[i] * inner);
        for (long long o = 0; o < outer; ++o) {
            long long base_hi = o * orders[i] * inner;
            for (long long in = 0; in < inner; ++in) {
                long long base = base_hi + in;
                for (const auto& e : factors[i].edges()) {
                    edges.push_back({static_cast<int>(base + e.u * inner),
                                     static_cast<int>(base + e.v * inner), e.colour});
                }
            }
        }
        inner *= orders[i];
    }
    return ColouredGraph(static_cast<int>(labels.total()), k, std::move(edges));
}

ColouredGraph strong_product(const ColouredGraph& h, const ColouredGraph& k) {
    if (h.colour_count() != k.colour_count())
        throw InputError("strong_product: colour palette mismatch");
    long long nh = h.vertex_count(), nk = k.vertex_count();
    if (nh * nk > kMaxProductVertices)
        throw InputError("strong_product: too many vertices to materialize");
    long long edge_total = h.edge_count() * nk + k.edge_count() * nh +
                           2 * h.edge_count() * k.edge_count();
    if (edge_total > kMaxProductEdges)
        throw InputError("strong_product: too many edges to materialize");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(edge_total));
    // equal H-coordinate: inherit K's colour
    for (long long u = 0; u < nh; ++u)
        for (const auto& e : k.edges())
            edges.push_back({static_cast<int>(u * nk + e.u),
                             static_cast<int>(u * nk + e.v), e.colour});
    // H-edge with equal or adjacent K-coordinates: inherit H's colour
    for (const auto& eh : h.edges()) {
        long long x = eh.u * nk, y = eh.v * nk;
        for (long long v = 0; v < nk; ++v)
            edges.push_back({static_cast<int>(x + v), static_cast<int>(y + v), eh.colour});
        for (const auto& ek : k.edges()) {
            edges.push_back({static_cast<int>(x + ek.u), static_cast<int>(y + ek.v),
                             eh.colour});
            edges.push_back({static_cast<int>(x + ek.v), static_cast<int>(y + ek.u),
                             eh.colour});
        }
    }
    return ColouredGraph(static_cast<int>(nh * nk), h.colour_count(), std::move(edges));
}

ColouredGraph ccp_flip_assemble(const std::vector<ColouredGraph>& factors) {
    const int k = static_cast<int>(factors.size());
    if (k < 2) throw InputError("ccp_flip_assemble: need at least 2 factors");

    std::vector<long long> degrees(k);
    std::vector<long long> min_e(k), max_e(k);
    for (int i = 0; i < k; ++i) {
        const ColouredGraph& g = factors[i];
        if (g.vertex_count() == 0 || g.edge_count() == 0)
            throw InputError("ccp_flip_assemble: factor " + std::to_string(i + 1) +
                             " has no edges");
        for (const auto& e : g.edges())
            if (e.colour != g.edges().front().colour)
                throw InputError("ccp_flip_assemble: factor " + std::to_string(i + 1) +
                                 " is not single-coloured");
        degrees[i] = g.degree(0);
        for (int v = 1; v < g.vertex_count(); ++v)
            if (g.degree(v) != degrees[i])
                throw InputError("ccp_flip_assemble: factor " + std::to_string(i + 1) +
                                 " is not regular");
        StatsMatrix m = measure_counts(g, 1);
        for (int v = 0; v < g.vertex_count(); ++v) {
            long long total = 0;
            for (int c = 1; c <= g.colour_count(); ++c) total += m.count(v, 1, c);
            if (v == 0)
                min_e[i] = max_e[i] = total;
            else {
                min_e[i] = std::min(min_e[i], total);
                max_e[i] = std::max(max_e[i], total);
            }
        }
    }
    for (int i = 0; i + 1 < k; ++i) {
        if (degrees[i] >= degrees[i + 1])
            throw InputError("ccp_flip_assemble: factor degrees must strictly increase, "
                             "but a_" + std::to_string(i + 1) + "=" +
                             std::to_string(degrees[i]) + " >= a_" +
                             std::to_string(i + 2) + "=" + std::to_string(degrees[i + 1]));
        if (max_e[i + 1] >= min_e[i])
            throw InputError("ccp_flip_assemble: e-range violated between factors " +
                             std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                             ": max e[u]=" + std::to_string(max_e[i + 1]) +
                             " >= min e[v]=" + std::to_string(min_e[i]));
    }
    std::vector<ColouredGraph> recoloured;
    recoloured.reserve(k);
    for (int i = 0; i < k; ++i) recoloured.push_back(factors[i].recoloured(i + 1, k));
    return cartesian_product(recoloured);
}

ColouredGraph compose_flip(const ColouredGraph& g, const ColouredGraph& h) {
    if (g.colour_count() != h.colour_count())
        throw InputError("compose_flip: colour palette mismatch");
    // a single (edgeless) vertex is the neutral element of the product
    if (g.vertex_count() == 1 && g.edge_count() == 0) return h;
    if (h.vertex_count() == 1 && h.edge_count() == 0) return g;
    for (const ColouredGraph* input : {&g, &h}) {
        FlipReport report = verify_flip(*input, VerifyMode::strict, true);
        if (!report.pass)
            throw InputError("compose_flip: input is not a verified flip graph (" +
                             report.summary() + ")");
    }
    return cartesian_product({g, h});
}

}  // namespace flipforge
