#include "flipforge/factors.hpp"

#include <unordered_map>

#include "flipforge/util.hpp"

namespace flipforge {

FactorDecomposition one_factorization(int m) {
    if (m < 2 || m % 2 != 0)
        throw InputError("one_factorization: vertex count must be even and >= 2, got " +
                         std::to_string(m));
    FactorDecomposition dec;
    dec.base = "K_" + std::to_string(m);
    dec.vertices = m;
    int cycle = m - 1;  // vertices 0..m-2 on the circle, m-1 fixed
    for (int round = 0; round < m - 1; ++round) {
        std::vector<std::pair<int, int>> factor;
        factor.emplace_back(std::min(m - 1, round), std::max(m - 1, round));
        for (int j = 1; j <= m / 2 - 1; ++j) {
            int a = (round + j) % cycle;
            int b = (round - j % cycle + cycle) % cycle;
            factor.emplace_back(std::min(a, b), std::max(a, b));
        }
        dec.factors.push_back(std::move(factor));
        dec.degrees.push_back(1);
    }
    return dec;
}

FactorDecomposition bipartite_d_factor(int n, int d) {
    if (n < 1) throw InputError("bipartite_d_factor: side size must be >= 1");
    if (d < 0 || d > n)
        throw InputError("bipartite_d_factor: degree must satisfy 0 <= d <= n, got " +
                         std::to_string(d));
    FactorDecomposition dec;
    dec.base = "K_{" + std::to_string(n) + "," + std::to_string(n) + "}";
    dec.vertices = 2 * n;
    for (int shift = 0; shift < d; ++shift) {
        std::vector<std::pair<int, int>> factor;
        factor.reserve(n);
        for (int j = 0; j < n; ++j) factor.emplace_back(j, n + (j + shift) % n);
        dec.factors.push_back(std::move(factor));
        dec.degrees.push_back(1);
    }
    return dec;
}

namespace {

// memo key: (sum, c, maxpart) packed into 64 bits (sum, maxp < 2^19, c < 2^26)
struct PartitionMemo {
    std::unordered_map<unsigned long long, bool> table;

    static unsigned long long key(long long sum, long long c, long long maxp) {
        return (static_cast<unsigned long long>(sum) << 45) |
               (static_cast<unsigned long long>(maxp) << 26) |
               static_cast<unsigned long long>(c);
    }

    bool feasible(long long sum, long long c, long long maxp) {
        if (sum == 0) return c == 0;
        if (c < 0) return false;
        if (maxp < 1) return false;
        // all parts equal maxp would give the largest possible C-sum
        auto it = table.find(key(sum, c, maxp));
        if (it != table.end()) return it->second;
        bool ok = false;
        for (long long a = std::min(maxp, sum); a >= 1 && !ok; --a) {
            if (binom2(a) > c) continue;
            ok = feasible(sum - a, c - binom2(a), a);
        }
        table.emplace(key(sum, c, maxp), ok);
        return ok;
    }
};

}  // namespace

std::optional<ConstantPartition> constant_partition(long long r, long long c) {
    if (r < 1) throw InputError("constant_partition: r must be >= 1");
    if (r > 8000) throw InputError("constant_partition: r too large for the exact oracle");
    if (c < 0 || c > binom2(r)) return std::nullopt;
    PartitionMemo memo;
    if (!memo.feasible(r, c, r)) return std::nullopt;
    ConstantPartition part;
    part.r = r;
    part.c = c;
    long long sum = r, rem = c, maxp = r;
    while (sum > 0) {
        // greedy largest part keeps the sequence lexicographically largest
        for (long long a = std::min(maxp, sum); a >= 1; --a) {
            if (binom2(a) > rem) continue;
            if (memo.feasible(sum - a, rem - binom2(a), a)) {
                part.parts.push_back(a);
                sum -= a;
                rem -= binom2(a);
                maxp = a;
                break;
            }
        }
    }
    return part;
}

SpectrumStatus spec_guaranteed(long long r, long long c) {
    if (r < 1) throw InputError("spec_guaranteed: r must be >= 1");
    if (c < 0 || c > binom2(r))
        throw InputError("spec_guaranteed: c must satisfy 0 <= c <= C(r,2)");
    if (below_half_square_bound(r, c)) return SpectrumStatus::guaranteed_in;
    long long k = binom2(r) - c;
    if (k >= 1 && r >= 3 * k) return SpectrumStatus::guaranteed_out;
    return SpectrumStatus::unknown;
}

std::string to_string(SpectrumStatus s) {
    switch (s) {
        case SpectrumStatus::guaranteed_in: return "guaranteed-in";
        case SpectrumStatus::guaranteed_out: return "guaranteed-out";
        default: return "unknown";
    }
}

}  // namespace flipforge
