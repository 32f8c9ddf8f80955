// Dirichlet character group modulo an odd prime P, represented through the
// discrete logarithm to the smallest primitive root. chi_j(n) =
// exp(2*pi*i * j * dlog[n] / (P-1)), so multiplicativity is exact index
// arithmetic and complex values are materialized from one root-of-unity
// table of length P-1. Immutable after construction.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "mz/util.hpp"

namespace mz {

class CharacterTable {
  public:
    // Throws std::invalid_argument on even/composite input (the diagnostic
    // names the Miller-Rabin witness) and on P above the desk-scale cap
    // unless force is set.
    explicit CharacterTable(std::uint64_t P, bool force = false);

    std::uint64_t modulus() const { return P_; }
    std::uint64_t primitive_root() const { return root_; }
    std::uint64_t group_order() const { return P_ - 1; }

    // Index of chi_j(n) in the root-of-unity table, or -1 when P | n.
    std::int64_t chi_log(std::uint32_t j, std::int64_t n) const;
    cplx chi(std::uint32_t j, std::int64_t n) const;
    bool is_odd(std::uint32_t j) const { return (j & 1u) != 0; }
    std::uint32_t conj_index(std::uint32_t j) const {
        return j == 0 ? 0 : static_cast<std::uint32_t>(P_ - 1 - j);
    }
    std::uint32_t dlog(std::uint64_t n) const { return dlog_[n % P_]; }

  private:
    std::uint64_t P_;
    std::uint64_t root_;
    std::vector<std::uint32_t> dlog_;  // dlog_[0] is a sentinel (no logarithm)
    std::vector<cplx> roots_;          // e^{2 pi i k/(P-1)}, k in [0, P-1)
};

// Smallest g >= 2 generating (Z/PZ)^*. Same rejection rules as the table.
std::uint64_t find_primitive_root(std::uint64_t P, bool force = false);

std::vector<std::uint32_t> odd_character_indices(const CharacterTable& tbl);

// tau(chi_j) by direct summation over n = 1..P-1.
cplx gauss_sum(const CharacterTable& tbl, std::uint32_t j);

// sum over odd chi of chi(n) * conj(chi(m)), evaluated both by brute force
// and by the closed form {(P-1)/2, -(P-1)/2, 0}; throws if the two routes
// disagree beyond 1e-12 * P.
double orthogonality_sum(const CharacterTable& tbl, std::int64_t n, std::int64_t m);

}  // namespace mz
