#pragma once

#include <string>
#include <vector>

#include "sdw/rational.hpp"

namespace sdw {

// One unknown per primal weight class; complementary classes share a symbol
// when the code contains the all-ones word, with the sign (-1)^degree that
// complementation induces on degree-k sums.
struct CertSymbol {
    int weight = 0;                            // representative (smaller of a tied pair)
    std::vector<std::pair<int, int>> classes;  // (weight, sign)
};

// pivot symbol expressed over the free symbols: lhs = sum coeff * symbol
struct CertRelation {
    int lhs = 0;
    std::vector<std::pair<int, Rat>> rhs;
};

struct DegreeCertificate {
    int degree = 0;
    std::vector<CertSymbol> symbols;
    std::vector<int> dropped_weights;       // classes whose coefficient is structurally zero
    std::vector<int> imposed_dual_weights;  // vanishing forced by the dual minimum distance
    std::vector<CertRelation> relations;
    std::vector<int> free_symbols;          // indices into symbols
    std::vector<int> forced_zero_dual_weights;
    bool degenerate = false;  // no constraints could be imposed; nothing certified
};

// Symbolic run of the harmonic-enumerator transform over a weight profile:
// a generic degree-k enumerator for the profile is pushed through the dual
// transform, the coefficients below the dual minimum distance are forced to
// vanish, and every dual weight whose coefficient dies identically on the
// solution space is certified. Degrees 1..degree are run and intersected, so
// a certified weight class is a degree-design for every code matching the
// profile.
struct DualDesignCertificate {
    int n = 0;
    std::vector<int> primal_weights;
    bool has_all_ones = false;
    int dual_min_dist = 0;
    int degree = 0;
    std::vector<DegreeCertificate> per_degree;
    std::vector<int> certified_dual_weights;
    std::string note;
};

DualDesignCertificate certify_dual_design_classes(int n, std::vector<int> primal_weights,
                                                  bool has_all_ones, int dual_min_dist, int degree);

}  // namespace sdw
