#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sdw/binary_code.hpp"
#include "sdw/bivariate_poly.hpp"
#include "sdw/caps.hpp"
#include "sdw/design.hpp"
#include "sdw/rational.hpp"

namespace sdw {

// Bijection between k-subsets of {0..n-1} and ranks 0..C(n,k)-1, in
// colexicographic order (which coincides with numeric order of the masks).
class KSubsetIndex {
  public:
    KSubsetIndex(int n, int k);
    int n() const { return n_; }
    int k() const { return k_; }
    std::uint64_t count() const { return binom64(n_, k_); }
    std::uint64_t rank(std::span<const int> subset) const;  // ascending points
    std::vector<int> unrank(std::uint64_t r) const;

  private:
    int n_, k_;
};

// A rational-valued function on the k-subsets of {0..n-1} (n <= 64), stored
// sparsely as (subset mask, value) sorted by mask. Harmonic means gamma(f)
// vanishes identically; see is_harmonic.
struct HarmonicFunction {
    int n = 0;
    int degree = 0;
    std::vector<std::pair<std::uint64_t, Rat>> entries;  // nonzero values only
};

// the set-differentiation operator: gamma(f)(y) = sum of f over the k-sets
// covering the (k-1)-set y
HarmonicFunction gamma(const HarmonicFunction& f);

bool is_harmonic(const HarmonicFunction& f);

// Exact basis of ker gamma on the k-subsets, by rational Gaussian elimination
// of the C(n,k-1) x C(n,k) incidence matrix, pivoting on the first nonzero
// column. Dimension C(n,k) - C(n,k-1) for 1 <= k <= n/2.
std::vector<HarmonicFunction> harm_basis(int n, int k, const Caps& caps = {});

// The same space spanned by products of point-pair differences: for column
// pairs (r_i, c_i) of a standard two-row tableau, f(z) = prod_i
// ([c_i in z] - [r_i in z]). Each function has at most 2^k nonzero entries,
// so this form scales to large C(n,k); see for_each_pair_function for the
// streaming variant.
std::vector<HarmonicFunction> harm_basis_pairs(int n, int k, const Caps& caps = {});

// streams the tableau pair lists (r_i, c_i), i = 0..k-1, without
// materializing the functions; fn returns false to stop early
void for_each_pair_function(int n, int k,
                            const std::function<bool(std::span<const std::pair<int, int>>)>& fn);

// sum of f over the k-subsets of u; zero when |u| < k
Rat f_tilde(const HarmonicFunction& f, std::uint64_t u_mask);
Rat f_tilde(const HarmonicFunction& f, const BitVec& u);

// Delsarte criterion: the blocks form a t-design iff sum_b f~(b) = 0 for
// every harmonic f of every degree 1..t. The two-argument form streams the
// pair-product spanning family; the three-argument form checks explicit
// bases (bases_by_degree[k-1] spans degree k). Requires t <= block size.
bool delsarte_test(const SupportDesign& d, int t, const Caps& caps = {});
bool delsarte_test(const SupportDesign& d, int t,
                   const std::vector<std::vector<HarmonicFunction>>& bases_by_degree,
                   const Caps& caps = {});

// largest t <= probe_limit passing delsarte_test
int delsarte_strength(const SupportDesign& d, int probe_limit, const Caps& caps = {});

// W_{C,f}(x,y) = sum_c f~(supp c) x^(n-wt c) y^(wt c)
BivariatePoly harmonic_weight_enumerator(const BinaryCode& code, const HarmonicFunction& f,
                                         const Caps& caps = {});

// the degree n-2k quotient Z with W = (xy)^k Z; fails when W is not
// divisible by (xy)^k
BivariatePoly z_factor(const BivariatePoly& w, int k);

// Z_{C^perp,f} from Z_{C,f}: (-1)^k (2^k/|C|) Z(x+y, x-y). The radical
// normalization collapses exactly because Z is homogeneous of degree n-2k.
BivariatePoly bachoc_transform(const BivariatePoly& z, int k, const Int& code_size, int n);

}  // namespace sdw
