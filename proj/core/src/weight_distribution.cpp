#include "sdw/weight_distribution.hpp"

#include "sdw/errors.hpp"
#include "sdw/krawtchouk.hpp"

namespace sdw {

Int WeightDistribution::total() const {
    Int t = 0;
    for (const Int& c : counts) t += c;
    return t;
}

int WeightDistribution::dim_log2() const {
    Int t = total();
    if (sgn(t) <= 0) return -1;
    size_t bits = mpz_sizeinbase(t.get_mpz_t(), 2);
    Int p = pow2(static_cast<unsigned long>(bits - 1));
    return p == t ? static_cast<int>(bits - 1) : -1;
}

int WeightDistribution::min_nonzero_weight() const {
    for (int w = 1; w <= n; w++)
        if (sgn(counts[static_cast<size_t>(w)]) != 0) return w;
    return -1;
}

bool WeightDistribution::triply_even() const {
    for (int w = 0; w <= n; w++)
        if (w % 8 != 0 && sgn(counts[static_cast<size_t>(w)]) != 0) return false;
    return true;
}

std::vector<std::pair<int, Int>> WeightDistribution::nonzero() const {
    std::vector<std::pair<int, Int>> out;
    for (int w = 0; w <= n; w++)
        if (sgn(counts[static_cast<size_t>(w)]) != 0) out.emplace_back(w, counts[static_cast<size_t>(w)]);
    return out;
}

WeightDistribution make_distribution(int n, std::vector<Int> counts) {
    if (n < 1) throw DomainError("distribution length must be positive");
    if (counts.size() != static_cast<size_t>(n) + 1)
        throw DomainError("distribution needs exactly n+1 counts");
    for (const Int& c : counts)
        if (sgn(c) < 0) throw InconsistentDistribution("negative count");
    if (sgn(counts[0]) <= 0) throw InconsistentDistribution("A_0 must be at least 1");
    return WeightDistribution{n, std::move(counts)};
}

WeightDistribution weight_distribution(const BinaryCode& code, const Caps& caps) {
    std::vector<std::uint64_t> buckets(static_cast<size_t>(code.n) + 1, 0);
    for_each_codeword(code, [&](const BitVec& c) { buckets[static_cast<size_t>(c.weight())]++; }, caps);
    std::vector<Int> counts(buckets.size());
    for (size_t i = 0; i < buckets.size(); i++) counts[i] = Int(static_cast<unsigned long>(buckets[i]));
    return WeightDistribution{code.n, std::move(counts)};
}

WeightDistribution macwilliams_transform(const WeightDistribution& dist, int k) {
    int n = dist.n;
    if (k < 0 || k > n) throw DomainError("dimension out of range");
    if (dist.total() != pow2(static_cast<unsigned long>(k)))
        throw InconsistentDistribution("counts do not sum to 2^" + std::to_string(k));

    KrawtchoukTable kt(n);
    Int size = pow2(static_cast<unsigned long>(k));
    std::vector<Int> out(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; j++) {
        Int s = 0;
        for (int i = 0; i <= n; i++) {
            const Int& a = dist.counts[static_cast<size_t>(i)];
            if (sgn(a) != 0) s += a * kt.at(j, i);
        }
        Int q;
        if (!divide_exact(s, size, q))
            throw InconsistentDistribution("transform count at weight " + std::to_string(j) +
                                           " is not an integer; not a code distribution");
        if (sgn(q) < 0)
            throw InconsistentDistribution("transform count at weight " + std::to_string(j) +
                                           " is negative; not a code distribution");
        out[static_cast<size_t>(j)] = std::move(q);
    }
    return WeightDistribution{n, std::move(out)};
}

}  // namespace sdw
