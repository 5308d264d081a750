#pragma once

#include <cstdint>

namespace sdw {

// Resource limits. Defaults keep every supported computation interactive on a
// desktop while covering the full working range of this library (for scale:
// C(48,6) ~ 1.23e7 combinations, C(48,3) = 17296 incidence counters).
struct Caps {
    // full codeword enumeration refuses dimensions above this
    int max_dim = 28;
    // weight-w sieve refuses when C(n,w) exceeds this
    std::uint64_t max_combinations = 200'000'000;
    // t-design incidence counting refuses more than this many counters
    std::uint64_t max_counters = 100'000'000;
    // harmonic-function spaces refuse C(n,k) above this
    std::uint64_t max_subsets = 1'000'000;
    // dense kernel elimination refuses matrices with more cells than this
    std::uint64_t max_kernel_cells = 20'000'000;
};

}  // namespace sdw
