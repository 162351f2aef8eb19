// Exact size of the per-tier (cores, frequency) action space:
// binom(C-1, N-1) * N^F for N tiers, C pooled cores, F frequency levels.
// The first factor counts the compositions of C cores into N positive parts,
// the second the frequency combinations. Values overflow 64 bits quickly
// (150 cores / 10 levels is ~1e55), so arbitrary precision is mandatory.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "sinan/errors.hpp"

namespace sinan {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i; // exact: result is always an integer here
    }
    return result;
}

inline BigInt action_space_size(int n_tiers, int total_cores, int freq_levels) {
    if (n_tiers < 1) throw InputError("action_space_size: need at least one tier");
    if (total_cores < n_tiers)
        throw InputError("action_space_size: fewer cores than tiers");
    if (freq_levels < 1)
        throw InputError("action_space_size: need at least one frequency level");
    BigInt freq_combos = 1;
    for (int i = 0; i < freq_levels; ++i) freq_combos *= n_tiers;
    return binomial(static_cast<unsigned>(total_cores - 1),
                    static_cast<unsigned>(n_tiers - 1)) *
           freq_combos;
}

} // namespace sinan
