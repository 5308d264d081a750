#include "sdw/harmonic.hpp"

#include <algorithm>
#include <map>

#include "sdw/errors.hpp"

namespace sdw {

KSubsetIndex::KSubsetIndex(int n, int k) : n_(n), k_(k) {
    if (n < 0 || n > 64 || k < 0 || k > n) throw DomainError("subset index: need 0 <= k <= n <= 64");
}

std::uint64_t KSubsetIndex::rank(std::span<const int> subset) const {
    std::uint64_t r = 0;
    for (size_t i = 0; i < subset.size(); i++) r += binom64(subset[i], static_cast<int>(i) + 1);
    return r;
}

std::vector<int> KSubsetIndex::unrank(std::uint64_t r) const {
    std::vector<int> out(static_cast<size_t>(k_));
    for (int i = k_; i >= 1; i--) {
        // largest a with C(a,i) <= r
        int a = i - 1;
        while (a + 1 < n_ && binom64(a + 1, i) <= r) a++;
        out[static_cast<size_t>(i - 1)] = a;
        r -= binom64(a, i);
    }
    return out;
}

namespace {

std::uint64_t rank_of_mask(std::uint64_t mask) {
    std::uint64_t r = 0;
    int i = 1;
    while (mask) {
        int p = std::countr_zero(mask);
        r += binom64(p, i++);
        mask &= mask - 1;
    }
    return r;
}

void sort_entries(std::vector<std::pair<std::uint64_t, Rat>>& e) {
    std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

}  // namespace

HarmonicFunction gamma(const HarmonicFunction& f) {
    if (f.degree < 1) throw DomainError("gamma needs degree >= 1");
    std::map<std::uint64_t, Rat> acc;
    for (const auto& [mask, val] : f.entries) {
        std::uint64_t rest = mask;
        while (rest) {
            std::uint64_t bit = rest & (~rest + 1);
            acc[mask ^ bit] += val;
            rest ^= bit;
        }
    }
    HarmonicFunction out;
    out.n = f.n;
    out.degree = f.degree - 1;
    for (auto& [mask, val] : acc)
        if (sgn(val) != 0) out.entries.emplace_back(mask, std::move(val));
    return out;
}

bool is_harmonic(const HarmonicFunction& f) {
    if (f.degree == 0) return true;
    return gamma(f).entries.empty();
}

std::vector<HarmonicFunction> harm_basis(int n, int k, const Caps& caps) {
    KSubsetIndex cols(n, k);
    if (cols.count() > caps.max_subsets)
        throw CapExceeded("C(n,k) = " + std::to_string(cols.count()) +
                          " exceeds max_subsets = " + std::to_string(caps.max_subsets));
    if (k == 0) {
        HarmonicFunction one;
        one.n = n;
        one.degree = 0;
        one.entries.emplace_back(0, Rat(1));
        return {one};
    }

    KSubsetIndex rows(n, k - 1);
    std::uint64_t r = rows.count(), c = cols.count();
    if (r * c > caps.max_kernel_cells)
        throw CapExceeded("kernel matrix of " + std::to_string(r * c) +
                          " cells exceeds max_kernel_cells = " + std::to_string(caps.max_kernel_cells) +
                          "; the pair-product basis covers this size");

    // dense incidence matrix of gamma
    std::vector<std::vector<Rat>> m(r, std::vector<Rat>(c));
    std::vector<int> y(static_cast<size_t>(k - 1));
    for (std::uint64_t j = 0; j < c; j++) {
        std::vector<int> z = cols.unrank(j);
        for (int drop = 0; drop < k; drop++) {
            for (int i = 0, o = 0; i < k; i++)
                if (i != drop) y[static_cast<size_t>(o++)] = z[static_cast<size_t>(i)];
            m[rows.rank(y)][j] = 1;
        }
    }

    // RREF, pivot on the first nonzero column
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pivots;  // (row, col)
    std::uint64_t rank = 0;
    for (std::uint64_t col = 0; col < c && rank < r; col++) {
        std::uint64_t p = rank;
        while (p < r && sgn(m[p][col]) == 0) p++;
        if (p == r) continue;
        std::swap(m[rank], m[p]);
        Rat inv = 1 / m[rank][col];
        for (std::uint64_t j = col; j < c; j++) m[rank][j] *= inv;
        for (std::uint64_t i = 0; i < r; i++) {
            if (i == rank || sgn(m[i][col]) == 0) continue;
            Rat f = m[i][col];
            for (std::uint64_t j = col; j < c; j++) m[i][j] -= f * m[rank][j];
        }
        pivots.emplace_back(rank, col);
        rank++;
    }

    std::vector<bool> is_pivot(c, false);
    for (auto& [pr, pc] : pivots) is_pivot[pc] = true;

    std::vector<HarmonicFunction> basis;
    for (std::uint64_t fc = 0; fc < c; fc++) {
        if (is_pivot[fc]) continue;
        HarmonicFunction f;
        f.n = n;
        f.degree = k;
        auto mask_of = [&](std::uint64_t rk) {
            std::uint64_t mask = 0;
            for (int p : cols.unrank(rk)) mask |= std::uint64_t{1} << p;
            return mask;
        };
        f.entries.emplace_back(mask_of(fc), Rat(1));
        for (auto& [pr, pc] : pivots) {
            const Rat& v = m[pr][fc];
            if (sgn(v) != 0) f.entries.emplace_back(mask_of(pc), -v);
        }
        sort_entries(f.entries);
        basis.push_back(std::move(f));
    }
    return basis;
}

void for_each_pair_function(int n, int k,
                            const std::function<bool(std::span<const std::pair<int, int>>)>& fn) {
    if (k < 0 || k > n) throw DomainError("pair functions: need 0 <= k <= n");
    if (k == 0 || 2 * k > n) return;

    // Row 2 of the tableau runs over k-subsets c_0 < ... < c_{k-1}; row 1 is
    // the complement, and the column condition r_i < c_i holds iff every
    // prefix of {0..x} has at least as many row-1 as row-2 elements.
    std::vector<int> c(static_cast<size_t>(k));
    std::vector<std::pair<int, int>> pairs(static_cast<size_t>(k));
    for (int i = 0; i < k; i++) c[static_cast<size_t>(i)] = i;
    std::vector<bool> inc(static_cast<size_t>(n));
    while (true) {
        std::fill(inc.begin(), inc.end(), false);
        for (int x : c) inc[static_cast<size_t>(x)] = true;
        int taken = 0, pos = 0;
        bool ok = true;
        for (int i = 0; i < k && ok; i++) {
            // r_i = next complement element; must precede c_i
            while (pos < n && inc[static_cast<size_t>(pos)]) pos++;
            if (pos < c[static_cast<size_t>(i)]) {
                pairs[static_cast<size_t>(taken++)] = {pos, c[static_cast<size_t>(i)]};
                pos++;
            } else {
                ok = false;
            }
        }
        if (ok && !fn(std::span<const std::pair<int, int>>(pairs.data(), pairs.size()))) return;

        int i = k - 1;
        while (i >= 0 && c[static_cast<size_t>(i)] == n - k + i) i--;
        if (i < 0) break;
        c[static_cast<size_t>(i)]++;
        for (int j = i + 1; j < k; j++) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
    }
}

std::vector<HarmonicFunction> harm_basis_pairs(int n, int k, const Caps& caps) {
    if (n > 64) throw DomainError("pair basis needs n <= 64");
    if (k == 0) return harm_basis(n, 0, caps);
    std::vector<HarmonicFunction> basis;
    for_each_pair_function(n, k, [&](std::span<const std::pair<int, int>> pairs) {
        HarmonicFunction f;
        f.n = n;
        f.degree = k;
        f.entries.reserve(size_t{1} << k);
        for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << k); sel++) {
            std::uint64_t mask = 0;
            int sign = 1;
            for (int i = 0; i < k; i++) {
                if ((sel >> i) & 1) {
                    mask |= std::uint64_t{1} << pairs[static_cast<size_t>(i)].first;  // r_i
                    sign = -sign;
                } else {
                    mask |= std::uint64_t{1} << pairs[static_cast<size_t>(i)].second;  // c_i
                }
            }
            f.entries.emplace_back(mask, Rat(sign));
        }
        sort_entries(f.entries);
        basis.push_back(std::move(f));
        return true;
    });
    return basis;
}

Rat f_tilde(const HarmonicFunction& f, std::uint64_t u_mask) {
    Rat s = 0;
    for (const auto& [mask, val] : f.entries)
        if ((mask & u_mask) == mask) s += val;
    return s;
}

Rat f_tilde(const HarmonicFunction& f, const BitVec& u) {
    if (u.size() != f.n) throw DomainError("subset length differs from function domain");
    return f_tilde(f, u.mask64());
}

namespace {

// incidence counts: for every k-subset z, the number of blocks containing z
std::vector<std::int64_t> moment_counts(const SupportDesign& d, int k, const Caps& caps) {
    if (d.v > 64) throw DomainError("point counts above 64 are not supported");
    std::uint64_t size = binom64(d.v, k);
    if (size > caps.max_subsets)
        throw CapExceeded("C(v,k) = " + std::to_string(size) +
                          " exceeds max_subsets = " + std::to_string(caps.max_subsets));
    std::vector<std::int64_t> m(size, 0);
    std::vector<int> idx(static_cast<size_t>(k)), sub(static_cast<size_t>(k));
    for (const std::vector<int>& block : d.blocks) {
        int bs = static_cast<int>(block.size());
        if (bs < k) continue;
        for (int i = 0; i < k; i++) idx[static_cast<size_t>(i)] = i;
        while (true) {
            std::uint64_t r = 0;
            for (int i = 0; i < k; i++)
                r += binom64(block[static_cast<size_t>(idx[static_cast<size_t>(i)])], i + 1);
            m[r]++;
            int i = k - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == bs - k + i) i--;
            if (i < 0) break;
            idx[static_cast<size_t>(i)]++;
            for (int j = i + 1; j < k; j++) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return m;
}

}  // namespace

bool delsarte_test(const SupportDesign& d, int t, const Caps& caps) {
    if (t < 0 || t > d.block_size) throw DomainError("t out of range for this block size");
    for (int k = 1; k <= t; k++) {
        std::vector<std::int64_t> m = moment_counts(d, k, caps);
        bool zero = true;
        std::vector<int> pts(static_cast<size_t>(k));
        for_each_pair_function(d.v, k, [&](std::span<const std::pair<int, int>> pairs) {
            std::int64_t s = 0;
            for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << k); sel++) {
                int sign = 1;
                for (int i = 0; i < k; i++) {
                    int p = ((sel >> i) & 1) ? pairs[static_cast<size_t>(i)].first
                                             : pairs[static_cast<size_t>(i)].second;
                    if ((sel >> i) & 1) sign = -sign;
                    // insertion sort into pts
                    int j = i;
                    while (j > 0 && pts[static_cast<size_t>(j - 1)] > p) {
                        pts[static_cast<size_t>(j)] = pts[static_cast<size_t>(j - 1)];
                        j--;
                    }
                    pts[static_cast<size_t>(j)] = p;
                }
                std::uint64_t r = 0;
                for (int i = 0; i < k; i++) r += binom64(pts[static_cast<size_t>(i)], i + 1);
                s += sign * m[r];
            }
            if (s != 0) {
                zero = false;
                return false;
            }
            return true;
        });
        if (!zero) return false;
    }
    return true;
}

bool delsarte_test(const SupportDesign& d, int t,
                   const std::vector<std::vector<HarmonicFunction>>& bases_by_degree,
                   const Caps& caps) {
    if (t < 0 || t > d.block_size) throw DomainError("t out of range for this block size");
    if (static_cast<int>(bases_by_degree.size()) < t) throw DomainError("missing a basis for some degree <= t");
    for (int k = 1; k <= t; k++) {
        std::vector<std::int64_t> m = moment_counts(d, k, caps);
        for (const HarmonicFunction& f : bases_by_degree[static_cast<size_t>(k - 1)]) {
            if (f.degree != k || f.n != d.v) throw DomainError("basis function has the wrong domain");
            Rat s = 0;
            for (const auto& [mask, val] : f.entries) {
                std::int64_t c = m[rank_of_mask(mask)];
                if (c != 0) s += val * Rat(static_cast<long>(c));
            }
            if (sgn(s) != 0) return false;
        }
    }
    return true;
}

int delsarte_strength(const SupportDesign& d, int probe_limit, const Caps& caps) {
    int limit = std::min(probe_limit, d.block_size);
    for (int t = 1; t <= limit; t++)
        if (!delsarte_test(d, t, caps)) return t - 1;
    return limit;
}

BivariatePoly harmonic_weight_enumerator(const BinaryCode& code, const HarmonicFunction& f,
                                         const Caps& caps) {
    if (f.n != code.n) throw DomainError("function domain differs from code length");
    int k = f.degree;
    if (code.n > 64) throw DomainError("lengths above 64 are not supported here");
    std::uint64_t msize = binom64(code.n, k);
    if (msize > caps.max_subsets)
        throw CapExceeded("C(n,k) = " + std::to_string(msize) +
                          " exceeds max_subsets = " + std::to_string(caps.max_subsets));

    // accumulate per-weight incidence counts once; each coefficient is then a
    // sparse dot product with f
    std::map<int, std::vector<std::int64_t>> by_weight;
    std::vector<int> idx(static_cast<size_t>(k));
    for_each_codeword(code, [&](const BitVec& c) {
        int w = c.weight();
        if (w < k) return;
        std::vector<int> pts = c.support();
        auto [it, fresh] = by_weight.try_emplace(w);
        if (fresh) it->second.assign(msize, 0);
        std::vector<std::int64_t>& m = it->second;
        if (k == 0) {
            m[0]++;
            return;
        }
        for (int i = 0; i < k; i++) idx[static_cast<size_t>(i)] = i;
        while (true) {
            std::uint64_t r = 0;
            for (int i = 0; i < k; i++)
                r += binom64(pts[static_cast<size_t>(idx[static_cast<size_t>(i)])], i + 1);
            m[r]++;
            int i = k - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == w - k + i) i--;
            if (i < 0) break;
            idx[static_cast<size_t>(i)]++;
            for (int j = i + 1; j < k; j++) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }, caps);

    BivariatePoly out = zero_poly(code.n);
    for (const auto& [w, m] : by_weight) {
        Rat s = 0;
        for (const auto& [mask, val] : f.entries) {
            std::int64_t c = m[rank_of_mask(mask)];
            if (c != 0) s += val * Rat(static_cast<long>(c));
        }
        out.coeff[static_cast<size_t>(w)] = std::move(s);
    }
    return out;
}

BivariatePoly z_factor(const BivariatePoly& w, int k) {
    if (k < 0 || 2 * k > w.degree) throw DomainError("factor degree out of range");
    for (int j = 0; j <= w.degree; j++) {
        if ((j < k || j > w.degree - k) && sgn(w.coeff[static_cast<size_t>(j)]) != 0)
            throw ConsistencyError("polynomial is not divisible by (xy)^" + std::to_string(k));
    }
    BivariatePoly out = zero_poly(w.degree - 2 * k);
    for (int j = 0; j <= out.degree; j++) out.coeff[static_cast<size_t>(j)] = w.coeff[static_cast<size_t>(j + k)];
    return out;
}

BivariatePoly bachoc_transform(const BivariatePoly& z, int k, const Int& code_size, int n) {
    if (z.degree != n - 2 * k) throw DomainError("Z must be homogeneous of degree n-2k");
    if (sgn(code_size) <= 0) throw DomainError("code size must be positive");
    Rat factor(pow2(static_cast<unsigned long>(k)), code_size);
    factor.canonicalize();
    if (k & 1) factor = -factor;
    return scale(substitute_sum_diff(z), factor);
}

}  // namespace sdw
