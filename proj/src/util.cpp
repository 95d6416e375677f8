#include "flipforge/util.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace flipforge {

long long isqrt_floor(long long x) {
    if (x < 0) throw InputError("isqrt_floor: negative argument");
    if (x < 2) return x;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r > x / r) --r;
    while ((r + 1) <= x / (r + 1)) ++r;
    return r;
}

long long binom2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long result = 1;
    for (long long i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

namespace {

// floor(sqrt(v)) for unsigned 128-bit values
unsigned __int128 isqrt_u128(unsigned __int128 v) {
    if (v < 2) return v;
    unsigned __int128 r = static_cast<unsigned __int128>(
        std::sqrt(static_cast<long double>(v)));
    while (r > 0 && r > v / r) --r;
    while ((r + 1) <= v / (r + 1)) ++r;
    return r;
}

}  // namespace

long long quadratic_margin_floor(long long x) {
    if (x < 0) throw InputError("quadratic_margin_floor: negative argument");
    // 10*x^(3/2) = sqrt(100*x^3)
    unsigned __int128 cube = static_cast<unsigned __int128>(x) * x * x * 100;
    unsigned __int128 s = isqrt_u128(cube);
    long long ceil_term =
        static_cast<long long>(s) + ((s * s == cube) ? 0 : 1);
    return x * x - ceil_term;
}

bool below_half_square_bound(long long r, long long c) {
    // c <= r^2/2 - 5*r^(3/2)  <=>  r^2 - 2c >= 10*r^(3/2) and r^2 - 2c >= 0
    if (c < 0) return false;
    long long lhs = r * r - 2 * c;
    if (lhs < 0) return false;
    unsigned __int128 lhs_sq =
        static_cast<unsigned __int128>(lhs) * static_cast<unsigned __int128>(lhs);
    unsigned __int128 rhs =
        static_cast<unsigned __int128>(r) * r * r * 100;
    return lhs_sq >= rhs;
}

int worker_count() {
    if (const char* env = std::getenv("FLIPFORGE_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for_blocks(long long n,
                         const std::function<void(long long, long long, int)>& fn) {
    int workers = worker_count();
    if (n <= 0) return;
    if (workers <= 1 || n < 2 * workers) {
        fn(0, n, 0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    long long chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        long long begin = w * chunk;
        long long end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end, w] { fn(begin, end, w); });
    }
    for (auto& t : pool) t.join();
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw InputError("Rng::below: zero bound");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        std::uint64_t r = eng_();
        if (r < limit) return r % bound;
    }
}

}  // namespace flipforge
