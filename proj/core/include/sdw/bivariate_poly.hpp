#pragma once

#include <string>
#include <vector>

#include "sdw/rational.hpp"
#include "sdw/weight_distribution.hpp"

namespace sdw {

// Homogeneous two-variable polynomial with exact rational coefficients;
// coeff[j] multiplies x^(degree-j) y^j. The representation is homogeneous by
// construction.
struct BivariatePoly {
    int degree = 0;
    std::vector<Rat> coeff;  // size degree+1

    bool is_zero() const;
    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;
};

BivariatePoly zero_poly(int degree);
BivariatePoly scale(BivariatePoly p, const Rat& c);
BivariatePoly add(const BivariatePoly& a, const BivariatePoly& b);

// p(x+y, x-y), expanded exactly
BivariatePoly substitute_sum_diff(const BivariatePoly& p);

// W_C(x,y) = sum_i A_i x^(n-i) y^i
BivariatePoly to_polynomial(const WeightDistribution& dist);
// inverse; rejects non-integer or negative coefficients and A_0 < 1
WeightDistribution from_polynomial(const BivariatePoly& p);

std::string poly_to_string(const BivariatePoly& p);

}  // namespace sdw
