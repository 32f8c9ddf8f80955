// Small shared utilities: compensated accumulation, exact rationals for the
// coefficient identities, prime sieves, deterministic chunked parallelism.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace mz {

using cplx = std::complex<double>;

// Neumaier (Kahan-Babuska) compensated sum. Accumulation order is the
// caller's responsibility; merge() folds another accumulator in as two adds.
struct NeumaierSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    void merge(const NeumaierSum& o) {
        add(o.sum);
        add(o.comp);
    }
    double value() const { return sum + comp; }
};

struct NeumaierCSum {
    NeumaierSum re, im;
    void add(const cplx& v) {
        re.add(v.real());
        im.add(v.imag());
    }
    void merge(const NeumaierCSum& o) {
        re.merge(o.re);
        im.merge(o.im);
    }
    cplx value() const { return {re.value(), im.value()}; }
};

// Exact rational on int64 with __int128 intermediates; throws on overflow.
// Only used for the small-n coefficient identities, so magnitudes stay tame.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const long long g = std::gcd(std::abs(num), den);
        if (g > 1) { num /= g; den /= g; }
    }
    static long long checked(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN)
            throw std::overflow_error("Rational: 64-bit overflow");
        return static_cast<long long>(v);
    }
    friend Rational operator+(const Rational& a, const Rational& b) {
        const long long g = std::gcd(a.den, b.den);
        const long long db = b.den / g;
        __int128 n = static_cast<__int128>(a.num) * db +
                     static_cast<__int128>(b.num) * (a.den / g);
        __int128 d = static_cast<__int128>(a.den) * db;
        // reduce in 128 bits before the checked narrowing
        __int128 c = n < 0 ? -n : n;
        __int128 dd = d;
        while (dd) { const __int128 t = dd; dd = c % dd; c = t; }
        if (c == 0) c = 1;
        Rational r;
        r.num = checked(n / c);
        r.den = checked(d / c);
        r.normalize();
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + Rational(-b.num, b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        const long long g1 = std::gcd(std::abs(a.num), b.den);
        const long long g2 = std::gcd(std::abs(b.num), a.den);
        __int128 n = static_cast<__int128>(a.num / g1) * (b.num / g2);
        __int128 d = static_cast<__int128>(a.den / g2) * (b.den / g1);
        Rational r;
        r.num = checked(n);
        r.den = checked(d);
        r.normalize();
        return r;
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Sieves. All 1-indexed with slot 0 unused.
std::vector<std::uint32_t> primes_up_to(std::uint64_t n);
std::vector<std::uint32_t> smallest_prime_factor(std::uint32_t n);
std::vector<int> moebius_up_to(std::uint32_t n);

// Deterministic Miller-Rabin for 64-bit inputs. On composite input the
// returned witness proves compositeness (0 for trivial cases).
struct PrimalityResult {
    bool is_prime;
    std::uint64_t witness;
};
PrimalityResult check_prime_u64(std::uint64_t n);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// Splits [0, n) into `threads` contiguous chunks, runs `chunk_fn(begin, end)`
// on each worker, and merges the partial results in ascending chunk order so
// output is bit-stable for a fixed worker count. threads <= 1 runs inline.
template <typename Acc, typename ChunkFn>
Acc parallel_chunk_reduce(std::size_t n, unsigned threads, ChunkFn chunk_fn) {
    if (threads <= 1 || n < 2) {
        return chunk_fn(std::size_t{0}, n);
    }
    const unsigned k = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    std::vector<Acc> parts(k);
    std::vector<std::thread> pool;
    pool.reserve(k);
    for (unsigned w = 0; w < k; ++w) {
        const std::size_t lo = n * w / k;
        const std::size_t hi = n * (w + 1) / k;
        pool.emplace_back([&parts, w, lo, hi, &chunk_fn] { parts[w] = chunk_fn(lo, hi); });
    }
    for (auto& t : pool) t.join();
    Acc total = std::move(parts[0]);
    for (unsigned w = 1; w < k; ++w) total.merge(parts[w]);
    return total;
}

inline constexpr std::uint64_t kModulusCap = 1'000'000;  // desk-scale policy
inline constexpr double kCutoffXCap = 512.0;             // O(X^4) cost guard

}  // namespace mz
