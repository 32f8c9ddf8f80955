#include "mz/characters.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mz {

namespace {

void reject_bad_modulus(std::uint64_t P, bool force) {
    if (P < 3 || (P & 1) == 0)
        throw std::invalid_argument("modulus must be an odd prime, got " + std::to_string(P));
    const auto pr = check_prime_u64(P);
    if (!pr.is_prime)
        throw std::invalid_argument("modulus " + std::to_string(P) +
                                    " is composite (Miller-Rabin witness " +
                                    std::to_string(pr.witness) + ")");
    if (P > kModulusCap && !force)
        throw std::invalid_argument("modulus " + std::to_string(P) +
                                    " exceeds the desk-scale cap of 10^6; pass force to override");
}

}  // namespace

std::uint64_t find_primitive_root(std::uint64_t P, bool force) {
    reject_bad_modulus(P, force);
    // distinct prime factors of P-1 by trial division
    std::vector<std::uint64_t> factors;
    std::uint64_t m = P - 1;
    for (std::uint64_t q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            factors.push_back(q);
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) factors.push_back(m);
    for (std::uint64_t g = 2; g < P; ++g) {
        bool generates = true;
        for (std::uint64_t q : factors) {
            if (mod_pow(g, (P - 1) / q, P) == 1) {
                generates = false;
                break;
            }
        }
        if (generates) return g;
    }
    throw std::logic_error("no primitive root found (unreachable for prime modulus)");
}

CharacterTable::CharacterTable(std::uint64_t P, bool force) : P_(P) {
    root_ = find_primitive_root(P, force);
    dlog_.assign(P_, UINT32_MAX);
    std::uint64_t x = 1;
    for (std::uint64_t a = 0; a < P_ - 1; ++a) {
        dlog_[x] = static_cast<std::uint32_t>(a);
        x = x * root_ % P_;
    }
    roots_.resize(P_ - 1);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(P_ - 1);
    for (std::uint64_t k = 0; k < P_ - 1; ++k)
        roots_[k] = std::polar(1.0, step * static_cast<double>(k));
}

std::int64_t CharacterTable::chi_log(std::uint32_t j, std::int64_t n) const {
    if (j >= P_ - 1) throw std::invalid_argument("character index out of range");
    std::int64_t r = n % static_cast<std::int64_t>(P_);
    if (r < 0) r += static_cast<std::int64_t>(P_);
    if (r == 0) return -1;
    const std::uint64_t a = dlog_[static_cast<std::uint64_t>(r)];
    return static_cast<std::int64_t>((static_cast<std::uint64_t>(j) * a) % (P_ - 1));
}

cplx CharacterTable::chi(std::uint32_t j, std::int64_t n) const {
    const std::int64_t k = chi_log(j, n);
    return k < 0 ? cplx{0.0, 0.0} : roots_[static_cast<std::size_t>(k)];
}

std::vector<std::uint32_t> odd_character_indices(const CharacterTable& tbl) {
    std::vector<std::uint32_t> out;
    out.reserve((tbl.modulus() - 1) / 2);
    for (std::uint32_t j = 1; j < tbl.group_order(); j += 2) out.push_back(j);
    return out;
}

cplx gauss_sum(const CharacterTable& tbl, std::uint32_t j) {
    const std::uint64_t P = tbl.modulus();
    NeumaierCSum acc;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(P);
    for (std::uint64_t n = 1; n < P; ++n)
        acc.add(tbl.chi(j, static_cast<std::int64_t>(n)) * std::polar(1.0, step * static_cast<double>(n)));
    return acc.value();
}

double orthogonality_sum(const CharacterTable& tbl, std::int64_t n, std::int64_t m) {
    const std::uint64_t P = tbl.modulus();
    const auto order = P - 1;

    // closed form
    std::int64_t rn = n % static_cast<std::int64_t>(P);
    std::int64_t rm = m % static_cast<std::int64_t>(P);
    if (rn < 0) rn += P;
    if (rm < 0) rm += P;
    double closed = 0.0;
    if (rn != 0 && rm != 0) {
        if (rn == rm)
            closed = static_cast<double>(P - 1) / 2.0;
        else if ((rn + rm) % static_cast<std::int64_t>(P) == 0)
            closed = -static_cast<double>(P - 1) / 2.0;
    }

    // brute force over the odd characters
    NeumaierCSum acc;
    for (std::uint32_t j = 1; j < order; j += 2)
        acc.add(tbl.chi(j, n) * std::conj(tbl.chi(j, m)));
    const cplx direct = acc.value();

    const double tol = 1e-12 * static_cast<double>(P);
    if (std::abs(direct - closed) > tol)
        throw std::runtime_error("orthogonality_sum: direct summation and closed form disagree");
    return closed;
}

}  // namespace mz
