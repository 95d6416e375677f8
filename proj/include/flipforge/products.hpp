#pragma once

#include <span>
#include <vector>

#include "flipforge/coloured_graph.hpp"

namespace flipforge {

// Row-major flattening of product vertex tuples: (u_1..u_q) maps to
// sum_i u_i * prod_{j>i} n_j. Bijective onto 0..prod(n_i)-1.
struct ProductLabelling {
    std::vector<long long> orders;

    explicit ProductLabelling(std::vector<long long> factor_orders);

    long long total() const { return total_; }
    long long flatten(std::span<const int> tuple) const;
    std::vector<int> unflatten(long long index) const;

private:
    std::vector<long long> strides_;
    long long total_ = 1;
};

// Cartesian product of edge-coloured graphs; each edge inherits the colour
// of the unique factor edge along which the endpoints differ. All factors
// must share one palette. Per-colour degrees and closed-neighbourhood counts
// are additive over factors.
ColouredGraph cartesian_product(const std::vector<ColouredGraph>& factors);

// Strong product H x K (argument order is part of the contract): edges with
// equal H-coordinate inherit the K colour; every other edge, including the
// diagonal ones, inherits the H colour.
ColouredGraph strong_product(const ColouredGraph& h, const ColouredGraph& k);

// Builds a flip graph from single-colour regular factors H_1..H_k with
// strictly increasing degrees: H_j is recoloured j and the Cartesian product
// is returned. The hypothesis max e[u in H_{i+1}] < min e[v in H_i] is
// checked and a violation is rejected naming the failing pair.
ColouredGraph ccp_flip_assemble(const std::vector<ColouredGraph>& factors);

// Cartesian product of two verified flip graphs on the same palette; colour
// degrees add up. Inputs failing strict colour-regular verification are
// rejected with the report summary. A single-vertex graph acts as identity.
ColouredGraph compose_flip(const ColouredGraph& g, const ColouredGraph& h);

}  // namespace flipforge
