#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdw/binary_code.hpp"
#include "sdw/caps.hpp"
#include "sdw/rational.hpp"
#include "sdw/weight_distribution.hpp"

namespace sdw {

// Block design on v points {0..v-1}. Blocks are sorted point lists and the
// block list itself is sorted; for weight classes of a binary code the blocks
// are automatically pairwise distinct (the support determines the codeword).
struct SupportDesign {
    int v = 0;
    int block_size = 0;
    std::vector<std::vector<int>> blocks;

    Int block_count() const { return Int(static_cast<unsigned long>(blocks.size())); }
};

// supports of the weight-w codewords; nullopt when the class is empty
std::optional<SupportDesign> support_design(const BinaryCode& code, int w, const Caps& caps = {});

SupportDesign design_from_blocks(int v, std::vector<BitVec> blocks);

// Exact incidence count: lambda if every t-subset of points lies in the same
// number of blocks, nullopt otherwise. t = 0 returns the block count.
std::optional<Int> is_t_design(const SupportDesign& d, int t, const Caps& caps = {});

struct Strength {
    int t_max = 0;
    std::vector<Int> lambdas;  // lambdas[i] = lambda_{i+1}, for t = 1..t_max
    // probing stopped at the limit (or a counter cap); the true strength may
    // be larger
    bool at_cap = false;
    std::string note;
};

// largest t with is_t_design success, exploiting that a t-design is a
// (t-1)-design; probe_limit bounds the search
Strength max_strength(const SupportDesign& d, int probe_limit = 24, const Caps& caps = {});

SupportDesign complement_design(const SupportDesign& d);

enum class ClassKind { Empty, TrivialFull, Counted, Unverifiable };

struct ClassStrength {
    int weight = 0;
    ClassKind kind = ClassKind::Counted;
    Int block_count = 0;
    Strength strength;
    std::string note;
};

// Per-class strengths and the delta/s extrema. The full-support class w = n
// (one block covering every point) is reported but excluded from delta/s, as
// are empty and unverifiable classes. Requested dual weights are analyzed via
// the weight-w sieve and reported separately; they never enter delta/s.
struct DesignStrength {
    std::vector<ClassStrength> primal;
    std::vector<ClassStrength> dual_classes;
    std::optional<int> delta, s;
    bool has_unverifiable = false;
};

DesignStrength delta_s(const BinaryCode& code, std::span<const int> dual_weights = {},
                       int probe_limit = 6, const Caps& caps = {});

// Necessary integrality conditions for a t-(v,k,lambda_t) design with b
// blocks: lambda_t = b C(k,t)/C(v,t) and the chain
// lambda_s = lambda_t C(v-s,t-s)/C(k-s,t-s) must all be positive integers.
struct LambdaChain {
    bool admissible = false;
    std::vector<Int> lambdas;  // lambda_0..lambda_t when admissible
    std::string reason;        // first failing divisibility otherwise
};

LambdaChain admissible(int v, int k, int t, const Int& b);

// One orientation of the Assmus-Mattson test: with d the minimum weight of
// the primal side, the largest t with 0 < t < d such that the dual side has
// at most d-t nonzero weights w <= n-t. Guaranteed classes follow the two
// clauses of the theorem.
struct AmOrientation {
    bool swapped = false;
    int t = 0;  // 0 = no valid t in this orientation
    std::vector<int> primal_design_weights;  // nonzero weights u in [d, n]
    std::vector<int> dual_design_weights;    // nonzero weights w in [d_dual, n-t]
};

struct AmResult {
    int t = 0;  // best over both orientations; 0 = not applicable
    AmOrientation direct, interchanged;
};

// requires the pair to be MacWilliams-consistent (transform of one side
// equals the other)
AmResult am_max_t(const WeightDistribution& primal, const WeightDistribution& dual_dist);

}  // namespace sdw
