#include "mz/util.hpp"

namespace mz {

std::vector<std::uint32_t> primes_up_to(std::uint64_t n) {
    std::vector<bool> composite(n + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        primes.push_back(static_cast<std::uint32_t>(p));
        for (std::uint64_t q = p * p; q <= n; q += p) composite[q] = true;
    }
    return primes;
}

std::vector<std::uint32_t> smallest_prime_factor(std::uint32_t n) {
    std::vector<std::uint32_t> spf(n + 1, 0);
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (spf[i]) continue;
        for (std::uint64_t j = i; j <= n; j += i)
            if (!spf[j]) spf[j] = i;
    }
    return spf;
}

std::vector<int> moebius_up_to(std::uint32_t n) {
    const auto spf = smallest_prime_factor(n);
    std::vector<int> mu(n + 1, 0);
    if (n >= 1) mu[1] = 1;
    for (std::uint32_t i = 2; i <= n; ++i) {
        const std::uint32_t p = spf[i];
        const std::uint32_t m = i / p;
        mu[i] = (m % p == 0) ? 0 : -mu[m];
    }
    return mu;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    unsigned __int128 acc = 1;
    unsigned __int128 b = base % mod;
    while (exp) {
        if (exp & 1) acc = acc * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

PrimalityResult check_prime_u64(std::uint64_t n) {
    if (n < 2) return {false, 0};
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return {true, 0};
        if (n % p == 0) return {false, p};
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    // This witness set is deterministic for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i + 1 < r; ++i) {
            x = static_cast<std::uint64_t>((unsigned __int128)x * x % n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return {false, a};
    }
    return {true, 0};
}

}  // namespace mz
