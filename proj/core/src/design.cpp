#include "sdw/design.hpp"

#include <algorithm>

#include "sdw/errors.hpp"

namespace sdw {

SupportDesign design_from_blocks(int v, std::vector<BitVec> blocks) {
    SupportDesign d;
    d.v = v;
    d.blocks.reserve(blocks.size());
    int k = -1;
    for (const BitVec& b : blocks) {
        if (b.size() != v) throw DomainError("block length differs from point count");
        std::vector<int> pts = b.support();
        if (k < 0) k = static_cast<int>(pts.size());
        if (static_cast<int>(pts.size()) != k) throw DomainError("blocks of mixed size");
        d.blocks.push_back(std::move(pts));
    }
    d.block_size = std::max(k, 0);
    std::sort(d.blocks.begin(), d.blocks.end());
    for (size_t i = 1; i < d.blocks.size(); i++)
        if (d.blocks[i] == d.blocks[i - 1]) throw ConsistencyError("duplicate block");
    return d;
}

std::optional<SupportDesign> support_design(const BinaryCode& code, int w, const Caps& caps) {
    if (w < 1 || w > code.n) throw DomainError("weight out of range");
    std::vector<BitVec> cls = weight_class(code, w, caps);
    if (cls.empty()) return std::nullopt;
    return design_from_blocks(code.n, std::move(cls));
}

namespace {

// colexicographic rank of an ascending point tuple
std::uint64_t colex_rank(std::span<const int> pts) {
    std::uint64_t r = 0;
    for (size_t i = 0; i < pts.size(); i++) r += binom64(pts[i], static_cast<int>(i) + 1);
    return r;
}

}  // namespace

std::optional<Int> is_t_design(const SupportDesign& d, int t, const Caps& caps) {
    if (t < 0 || t > d.block_size) throw DomainError("t out of range for this block size");
    if (d.blocks.empty()) throw DomainError("design has no blocks");
    if (t == 0) return d.block_count();
    if (d.v > 64) throw DomainError("point counts above 64 are not supported");

    std::uint64_t tables = binom64(d.v, t);
    if (tables > caps.max_counters)
        throw CapExceeded("t-design check needs " + std::to_string(tables) +
                          " counters, above max_counters = " + std::to_string(caps.max_counters));

    std::vector<std::uint32_t> count(tables, 0);
    std::vector<int> idx(static_cast<size_t>(t));
    std::vector<int> sub(static_cast<size_t>(t));
    for (const std::vector<int>& block : d.blocks) {
        int m = static_cast<int>(block.size());
        for (int i = 0; i < t; i++) idx[static_cast<size_t>(i)] = i;
        while (true) {
            for (int i = 0; i < t; i++) sub[static_cast<size_t>(i)] = block[static_cast<size_t>(idx[static_cast<size_t>(i)])];
            count[colex_rank(sub)]++;
            int i = t - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == m - t + i) i--;
            if (i < 0) break;
            idx[static_cast<size_t>(i)]++;
            for (int j = i + 1; j < t; j++) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }

    std::uint32_t lambda = count[0];
    for (std::uint32_t c : count)
        if (c != lambda) return std::nullopt;
    return Int(static_cast<unsigned long>(lambda));
}

Strength max_strength(const SupportDesign& d, int probe_limit, const Caps& caps) {
    if (d.block_size == d.v)
        throw DomainError("full-support class is trivially a design for every t");
    Strength s;
    int limit = std::min(probe_limit, d.block_size);
    for (int t = 1; t <= limit; t++) {
        std::optional<Int> lambda;
        try {
            lambda = is_t_design(d, t, caps);
        } catch (const CapExceeded& e) {
            s.at_cap = true;
            s.note = e.what();
            return s;
        }
        if (!lambda) return s;
        s.t_max = t;
        s.lambdas.push_back(std::move(*lambda));
    }
    if (s.t_max == probe_limit && probe_limit < d.block_size) {
        s.at_cap = true;
        s.note = "probe limit reached";
    }
    return s;
}

SupportDesign complement_design(const SupportDesign& d) {
    if (d.blocks.empty()) throw DomainError("design has no blocks");
    SupportDesign out;
    out.v = d.v;
    out.block_size = d.v - d.block_size;
    out.blocks.reserve(d.blocks.size());
    std::vector<bool> in(static_cast<size_t>(d.v));
    for (const std::vector<int>& b : d.blocks) {
        std::fill(in.begin(), in.end(), false);
        for (int p : b) in[static_cast<size_t>(p)] = true;
        std::vector<int> c;
        c.reserve(static_cast<size_t>(out.block_size));
        for (int p = 0; p < d.v; p++)
            if (!in[static_cast<size_t>(p)]) c.push_back(p);
        out.blocks.push_back(std::move(c));
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

namespace {

ClassStrength analyze_class(const BinaryCode& code, int w, int probe_limit, const Caps& caps) {
    ClassStrength cs;
    cs.weight = w;
    std::optional<SupportDesign> d;
    try {
        d = support_design(code, w, caps);
    } catch (const CapExceeded& e) {
        cs.kind = ClassKind::Unverifiable;
        cs.note = e.what();
        return cs;
    }
    if (!d) {
        cs.kind = ClassKind::Empty;
        return cs;
    }
    cs.block_count = d->block_count();
    if (w == code.n) {
        cs.kind = ClassKind::TrivialFull;
        cs.note = "single full block, a t-design for every t";
        return cs;
    }
    cs.kind = ClassKind::Counted;
    cs.strength = max_strength(*d, probe_limit, caps);
    return cs;
}

}  // namespace

DesignStrength delta_s(const BinaryCode& code, std::span<const int> dual_weights, int probe_limit,
                       const Caps& caps) {
    DesignStrength out;
    WeightDistribution dist = weight_distribution(code, caps);
    for (int w = 1; w <= code.n; w++) {
        if (sgn(dist.counts[static_cast<size_t>(w)]) == 0) continue;
        out.primal.push_back(analyze_class(code, w, probe_limit, caps));
    }
    if (!dual_weights.empty()) {
        BinaryCode dc = dual(code);
        for (int w : dual_weights) out.dual_classes.push_back(analyze_class(dc, w, probe_limit, caps));
    }
    for (const ClassStrength& cs : out.primal) {
        if (cs.kind == ClassKind::Unverifiable) out.has_unverifiable = true;
        if (cs.kind != ClassKind::Counted) continue;
        int t = cs.strength.t_max;
        out.delta = out.delta ? std::min(*out.delta, t) : t;
        out.s = out.s ? std::max(*out.s, t) : t;
    }
    for (const ClassStrength& cs : out.dual_classes)
        if (cs.kind == ClassKind::Unverifiable) out.has_unverifiable = true;
    return out;
}

LambdaChain admissible(int v, int k, int t, const Int& b) {
    if (!(2 <= k && k <= v && 1 <= t && t <= k)) throw DomainError("admissible: need 2 <= k <= v, 1 <= t <= k");
    LambdaChain out;
    if (sgn(b) <= 0) {
        out.reason = "block count must be positive";
        return out;
    }

    Int ckt = binom(static_cast<unsigned long>(k), static_cast<unsigned long>(t));
    Int cvt = binom(static_cast<unsigned long>(v), static_cast<unsigned long>(t));
    Int lambda_t;
    if (!divide_exact(b * ckt, cvt, lambda_t)) {
        Int g;
        mpz_gcd(g.get_mpz_t(), cvt.get_mpz_t(), ckt.get_mpz_t());
        out.reason = Int(cvt / g).get_str() + " ∤ b";
        return out;
    }

    std::vector<Int> lambdas(static_cast<size_t>(t) + 1);
    lambdas[static_cast<size_t>(t)] = lambda_t;
    for (int s = t - 1; s >= 0; s--) {
        Int num = binom(static_cast<unsigned long>(v - s), static_cast<unsigned long>(t - s));
        Int den = binom(static_cast<unsigned long>(k - s), static_cast<unsigned long>(t - s));
        Int ls;
        if (!divide_exact(lambda_t * num, den, ls)) {
            Int g;
            mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), num.get_mpz_t());
            out.reason = Int(den / g).get_str() + " ∤ λ_" + std::to_string(t) +
                         " (chain fails at λ_" + std::to_string(s) + ")";
            return out;
        }
        lambdas[static_cast<size_t>(s)] = std::move(ls);
    }
    out.admissible = true;
    out.lambdas = std::move(lambdas);
    return out;
}

namespace {

AmOrientation am_orientation(const WeightDistribution& a, const WeightDistribution& b, bool swapped) {
    AmOrientation out;
    out.swapped = swapped;
    int n = a.n;
    int d = a.min_nonzero_weight();
    if (d < 1) return out;
    for (int t = d - 1; t >= 1; t--) {
        int cnt = 0;
        for (int w = 1; w <= n - t; w++)
            if (sgn(b.counts[static_cast<size_t>(w)]) != 0) cnt++;
        if (cnt <= d - t) {
            out.t = t;
            break;
        }
    }
    if (out.t == 0) return out;
    for (int u = d; u <= n; u++)
        if (sgn(a.counts[static_cast<size_t>(u)]) != 0) out.primal_design_weights.push_back(u);
    int dd = b.min_nonzero_weight();
    if (dd >= 1)
        for (int w = dd; w <= n - out.t; w++)
            if (sgn(b.counts[static_cast<size_t>(w)]) != 0) out.dual_design_weights.push_back(w);
    return out;
}

}  // namespace

AmResult am_max_t(const WeightDistribution& primal, const WeightDistribution& dual_dist) {
    if (primal.n != dual_dist.n) throw DomainError("distributions have different lengths");
    int k = primal.dim_log2();
    int kd = dual_dist.dim_log2();
    if (k < 0 || kd < 0 || k + kd != primal.n)
        throw InconsistentDistribution("totals are not 2^k, 2^(n-k)");
    if (macwilliams_transform(primal, k) != dual_dist)
        throw InconsistentDistribution("pair is not MacWilliams-consistent");

    AmResult r;
    r.direct = am_orientation(primal, dual_dist, false);
    r.interchanged = am_orientation(dual_dist, primal, true);
    r.t = std::max(r.direct.t, r.interchanged.t);
    return r;
}

}  // namespace sdw
