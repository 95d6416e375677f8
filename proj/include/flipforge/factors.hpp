#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flipforge {

// A partition of the edges of K_m or K_{n,n} into regular factors.
// Factors are pairwise edge-disjoint; degrees[i] is the regular degree
// of factor i.
struct FactorDecomposition {
    std::string base;
    int vertices = 0;
    std::vector<std::vector<std::pair<int, int>>> factors;
    std::vector<int> degrees;
};

// Positive integers parts[0] >= parts[1] >= ... with sum r and
// sum of C(part,2) equal to c.
struct ConstantPartition {
    std::vector<long long> parts;
    long long r = 0;
    long long c = 0;
};

// The m-1 perfect matchings of K_m produced by the circle method.
FactorDecomposition one_factorization(int m);

// d pairwise-disjoint perfect matchings of K_{n,n} via cyclic shifts
// M_i = {(u_j, w_(j+i mod n))}. Left vertices are 0..n-1, right n..2n-1.
FactorDecomposition bipartite_d_factor(int n, int d);

// Exact DP oracle: a partition of r with C-sum c, lexicographically largest
// first, or nothing when no such partition exists.
std::optional<ConstantPartition> constant_partition(long long r, long long c);

enum class SpectrumStatus { guaranteed_in, guaranteed_out, unknown };

// Membership of c in the achievable C-sum spectrum of r as far as the proven
// bounds decide it: guaranteed_in when c <= r^2/2 - 5r^(3/2), guaranteed_out
// when c = C(r,2) - k for some k >= 1 with r >= 3k, otherwise unknown.
SpectrumStatus spec_guaranteed(long long r, long long c);

std::string to_string(SpectrumStatus s);

}  // namespace flipforge
