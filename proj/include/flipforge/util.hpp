#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace flipforge {

// Invalid arguments, unparsable files, rejected construction parameters.
// The CLI maps this to exit code 1.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// floor(sqrt(x)) for x >= 0, exact for the full 64-bit range.
long long isqrt_floor(long long x);

// n*(n-1)/2, 0 for n < 2.
long long binom2(long long n);

long long binom(long long n, long long k);

// Floor division (rounds toward -inf), b > 0.
long long floor_div(long long a, long long b);

// floor(x^2 - 10*x^(3/2)) computed with integer square roots only.
long long quadratic_margin_floor(long long x);

// true iff c <= r^2/2 - 5*r^(3/2), decided in exact integer arithmetic.
bool below_half_square_bound(long long r, long long c);

// Worker pool size: FLIPFORGE_THREADS if set, else hardware_concurrency.
int worker_count();

// Runs fn(begin, end, worker) over a static block partition of [0, n).
void parallel_for_blocks(long long n,
                         const std::function<void(long long, long long, int)>& fn);

// mt19937_64 with hand-rolled bounded sampling and Fisher-Yates shuffle so
// that seeded runs are byte-identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [0, bound), bound > 0, unbiased
    std::uint64_t below(std::uint64_t bound);

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace flipforge
