#pragma once

#include <vector>

#include "sdw/binary_code.hpp"
#include "sdw/rational.hpp"

namespace sdw {

// Exact codeword counts per weight, A_0..A_n.
struct WeightDistribution {
    int n = 0;
    std::vector<Int> counts;  // size n+1

    Int total() const;
    // k with 2^k = total; -1 when the total is not a power of two
    int dim_log2() const;
    // smallest w >= 1 with A_w > 0; -1 when none
    int min_nonzero_weight() const;
    // classifier: every weight with A_w > 0 is divisible by 8
    bool triply_even() const;
    std::vector<std::pair<int, Int>> nonzero() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

// validates shape, nonnegativity and A_0 >= 1
WeightDistribution make_distribution(int n, std::vector<Int> counts);

WeightDistribution weight_distribution(const BinaryCode& code, const Caps& caps = {});

// Dual distribution A'_j = 2^-k sum_i A_i K_j(i). Every A'_j must come out an
// exact nonnegative integer, otherwise the input was not a valid distribution
// of a dimension-k binary code.
WeightDistribution macwilliams_transform(const WeightDistribution& dist, int k);

}  // namespace sdw
