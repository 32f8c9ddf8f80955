#include <doctest.h>

#include <cmath>
#include <random>

#include "mz/characters.hpp"

using namespace mz;

TEST_CASE("smallest primitive roots") {
    CHECK(find_primitive_root(3) == 2);
    CHECK(find_primitive_root(5) == 2);
    CHECK(find_primitive_root(7) == 3);
    CHECK(find_primitive_root(101) == 2);
    CHECK_THROWS_WITH_AS(find_primitive_root(9), doctest::Contains("witness"),
                         std::invalid_argument);
    CHECK_THROWS_AS(find_primitive_root(4), std::invalid_argument);
    CHECK_THROWS_AS(find_primitive_root(2'000'003), std::invalid_argument);  // above cap
    CHECK(find_primitive_root(2'000'003, /*force=*/true) > 1);
}

TEST_CASE("power cycle enumerates every nonzero residue once") {
    const CharacterTable tbl(13);
    std::vector<bool> seen(13, false);
    std::uint64_t x = 1;
    for (std::uint64_t a = 0; a < 12; ++a) {
        CHECK_FALSE(seen[x]);
        seen[x] = true;
        x = x * tbl.primitive_root() % 13;
    }
    for (std::uint64_t n = 1; n < 13; ++n) CHECK(seen[n]);
}

TEST_CASE("character values") {
    const CharacterTable tbl(5);
    CHECK(tbl.chi(1, 1) == cplx{1.0, 0.0});
    CHECK(tbl.chi(1, 5) == cplx{0.0, 0.0});
    CHECK(std::abs(tbl.chi(1, 2) - cplx{0.0, 1.0}) <= 1e-15);  // g=2, dlog[2]=1
    CHECK_THROWS_AS(tbl.chi(4, 1), std::invalid_argument);     // j range is [0, P-2]
    // negative arguments reduce mod P
    CHECK(std::abs(tbl.chi(1, -3) - tbl.chi(1, 2)) <= 1e-15);
}

TEST_CASE("multiplicativity is exact on character indices") {
    const CharacterTable tbl(101);
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::int64_t> dn(1, 100);
    std::uniform_int_distribution<std::uint32_t> dj(0, 99);
    for (int k = 0; k < 1000; ++k) {
        const std::uint32_t j = dj(rng);
        const std::int64_t m = dn(rng), n = dn(rng);
        const std::int64_t lhs = tbl.chi_log(j, m * n % 101);
        const std::int64_t rhs =
            (tbl.chi_log(j, m) + tbl.chi_log(j, n)) % static_cast<std::int64_t>(100);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("parity partition") {
    for (std::uint64_t P : {5ull, 13ull, 101ull}) {
        const CharacterTable tbl(P);
        const auto odd = odd_character_indices(tbl);
        CHECK(odd.size() == (P - 1) / 2);
        for (std::uint32_t j : odd) {
            // chi_j(-1) = -1
            CHECK(std::abs(tbl.chi(j, -1) - cplx{-1.0, 0.0}) <= 1e-12);
        }
        // complement is even
        for (std::uint32_t j = 0; j < P - 1; j += 2)
            CHECK(std::abs(tbl.chi(j, -1) - cplx{1.0, 0.0}) <= 1e-12);
    }
}

TEST_CASE("gauss sums") {
    const CharacterTable t5(5);
    CHECK(std::abs(gauss_sum(t5, 0) - cplx{-1.0, 0.0}) <= 1e-13);
    for (std::uint64_t P : {5ull, 13ull, 101ull}) {
        const CharacterTable tbl(P);
        for (std::uint32_t j = 1; j < P - 1; ++j) {
            const cplx tau = gauss_sum(tbl, j);
            CHECK(std::abs(tau) == doctest::Approx(std::sqrt(double(P))).epsilon(1e-10));
            // tau(conj chi) = chi(-1) conj(tau(chi))
            const cplx tau_conj = gauss_sum(tbl, tbl.conj_index(j));
            const cplx want = tbl.chi(j, -1) * std::conj(tau);
            CHECK(std::abs(tau_conj - want) <= 1e-10 * std::sqrt(double(P)));
        }
    }
}

TEST_CASE("orthogonality closed form matches brute force everywhere (P <= 13)") {
    for (std::uint64_t P : {5ull, 13ull}) {
        const CharacterTable tbl(P);
        for (std::int64_t n = 0; n < static_cast<std::int64_t>(P); ++n)
            for (std::int64_t m = 0; m < static_cast<std::int64_t>(P); ++m)
                CHECK_NOTHROW(orthogonality_sum(tbl, n, m));
    }
    const CharacterTable t5(5);
    CHECK(orthogonality_sum(t5, 1, 1) == 2.0);
    CHECK(orthogonality_sum(t5, 4, 1) == -2.0);
    CHECK(orthogonality_sum(t5, 2, 1) == 0.0);
    CHECK(orthogonality_sum(t5, 0, 0) == 0.0);
}
