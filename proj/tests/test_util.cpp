#include <doctest.h>

#include "mz/util.hpp"

using namespace mz;

TEST_CASE("rational arithmetic is exact and normalized") {
    Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(Rational(-4, -8) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("neumaier summation recovers cancellation-prone sums") {
    NeumaierSum s;
    s.add(1e100);
    s.add(1.0);
    s.add(-1e100);
    CHECK(s.value() == 1.0);

    NeumaierSum a, b;
    for (int i = 0; i < 500; ++i) a.add(0.1);
    for (int i = 0; i < 500; ++i) b.add(0.1);
    a.merge(b);
    CHECK(a.value() == doctest::Approx(100.0).epsilon(1e-15));
}

TEST_CASE("sieves") {
    const auto primes = primes_up_to(30);
    CHECK(primes == std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    const auto mu = moebius_up_to(12);
    CHECK(mu[1] == 1);
    CHECK(mu[2] == -1);
    CHECK(mu[4] == 0);
    CHECK(mu[6] == 1);
    CHECK(mu[12] == 0);
    const auto spf = smallest_prime_factor(20);
    CHECK(spf[15] == 3);
    CHECK(spf[16] == 2);
    CHECK(spf[17] == 17);
}

TEST_CASE("deterministic primality with witnesses") {
    CHECK(check_prime_u64(2).is_prime);
    CHECK(check_prime_u64(101).is_prime);
    CHECK(check_prime_u64(1'000'003).is_prime);
    const auto comp = check_prime_u64(1'000'001);
    CHECK_FALSE(comp.is_prime);
    CHECK(comp.witness != 0);
    // Carmichael number: trial division misses it, Miller-Rabin must not
    CHECK_FALSE(check_prime_u64(561).is_prime);
}

TEST_CASE("parallel chunk reduce is bit-stable for a fixed worker count") {
    auto chunk = [](std::size_t lo, std::size_t hi) {
        NeumaierSum acc;
        for (std::size_t i = lo; i < hi; ++i)
            acc.add(1.0 / static_cast<double>(i + 1));
        return acc;
    };
    const double two_a = parallel_chunk_reduce<NeumaierSum>(100000, 2, chunk).value();
    const double two_b = parallel_chunk_reduce<NeumaierSum>(100000, 2, chunk).value();
    const double one = parallel_chunk_reduce<NeumaierSum>(100000, 1, chunk).value();
    CHECK(two_a == two_b);
    CHECK(one == doctest::Approx(two_a).epsilon(1e-14));
}
