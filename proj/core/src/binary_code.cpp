#include "sdw/binary_code.hpp"

#include <algorithm>

#include "sdw/errors.hpp"
#include "sdw/rational.hpp"

namespace sdw {

std::uint64_t binom64(int n, int k) {
    static const auto table = [] {
        auto t = std::vector<std::vector<std::uint64_t>>(65, std::vector<std::uint64_t>(65, 0));
        for (int i = 0; i <= 64; i++) {
            t[static_cast<size_t>(i)][0] = 1;
            for (int j = 1; j <= i; j++)
                t[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    t[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                    (j <= i - 1 ? t[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] : 0);
        }
        return t;
    }();
    if (n < 0 || n > 64 || k < 0) throw DomainError("binom64: arguments out of range");
    if (k > n) return 0;
    return table[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

BinaryCode canonicalize(BinaryCode code) {
    if (code.n < 1) throw DomainError("code length must be positive");
    for (const BitVec& g : code.gens)
        if (g.size() != code.n) throw DomainError("generator row length differs from code length");

    std::vector<BitVec>& rows = code.gens;
    size_t r = 0;
    for (int col = 0; col < code.n && r < rows.size(); col++) {
        size_t piv = r;
        while (piv < rows.size() && !rows[piv].get(col)) piv++;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (size_t i = 0; i < rows.size(); i++)
            if (i != r && rows[i].get(col)) rows[i] ^= rows[r];
        r++;
    }
    rows.resize(r);
    return code;
}

BinaryCode make_code(int n, std::vector<BitVec> rows, std::string name) {
    BinaryCode c;
    c.n = n;
    c.gens = std::move(rows);
    c.name = std::move(name);
    return canonicalize(std::move(c));
}

BinaryCode dual(const BinaryCode& code) {
    // standard parity-check construction from the RREF basis: one dual basis
    // row per free column f, with a 1 at f and the pivot-row entries at the
    // pivot columns
    std::vector<int> pivot(static_cast<size_t>(code.n), -1);
    for (size_t i = 0; i < code.gens.size(); i++) pivot[static_cast<size_t>(code.gens[i].first_set())] = static_cast<int>(i);

    BinaryCode d;
    d.n = code.n;
    d.name = code.name.empty() ? "" : code.name + "^dual";
    for (int f = 0; f < code.n; f++) {
        if (pivot[static_cast<size_t>(f)] >= 0) continue;
        BitVec row(code.n);
        row.set(f, true);
        for (int c = 0; c < code.n; c++)
            if (pivot[static_cast<size_t>(c)] >= 0 && code.gens[static_cast<size_t>(pivot[static_cast<size_t>(c)])].get(f))
                row.set(c, true);
        d.gens.push_back(std::move(row));
    }
    return canonicalize(std::move(d));
}

bool contains(const BinaryCode& code, const BitVec& v) {
    if (v.size() != code.n) throw DomainError("vector length differs from code length");
    BitVec r = v;
    for (const BitVec& g : code.gens) {
        int p = g.first_set();
        if (r.get(p)) r ^= g;
    }
    return !r.any();
}

void for_each_codeword(const BinaryCode& code, const std::function<void(const BitVec&)>& fn,
                       const Caps& caps) {
    int k = code.dim();
    if (k > caps.max_dim || k > 62)
        throw CapExceeded("dimension " + std::to_string(k) +
                          " exceeds the full-enumeration cap (max_dim = " + std::to_string(caps.max_dim) + ")");

    BitVec c(code.n);
    fn(c);
    std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t m = 1; m < total; m++) {
        std::uint64_t changed = m ^ (m - 1);
        while (changed) {
            int b = std::countr_zero(changed);
            c ^= code.gens[static_cast<size_t>(k - 1 - b)];
            changed &= changed - 1;
        }
        fn(c);
    }
}

std::vector<BitVec> codewords(const BinaryCode& code, const Caps& caps) {
    std::vector<BitVec> out;
    out.reserve(size_t{1} << std::min(code.dim(), 20));
    for_each_codeword(code, [&](const BitVec& c) { out.push_back(c); }, caps);
    return out;
}

namespace {

// depth-first walk over all weight-w supports with an incrementally
// maintained syndrome against the dual basis
struct SieveWalk {
    int n, w;
    const std::vector<BitVec>& cols;  // per coordinate: syndrome column
    std::vector<BitVec>& out;
    std::vector<int> chosen;
    BitVec syndrome;

    void run() {
        chosen.reserve(static_cast<size_t>(w));
        descend(0, w);
    }

    void descend(int start, int remaining) {
        if (remaining == 0) {
            if (!syndrome.any()) {
                BitVec v(n);
                for (int i : chosen) v.set(i, true);
                out.push_back(std::move(v));
            }
            return;
        }
        for (int j = start; j <= n - remaining; j++) {
            syndrome ^= cols[static_cast<size_t>(j)];
            chosen.push_back(j);
            descend(j + 1, remaining - 1);
            chosen.pop_back();
            syndrome ^= cols[static_cast<size_t>(j)];
        }
    }
};

}  // namespace

std::vector<BitVec> weight_class(const BinaryCode& code, int w, const Caps& caps) {
    if (w < 0 || w > code.n) throw DomainError("weight out of range");
    int k = code.dim();

    bool full_ok = k <= caps.max_dim && k <= 62;
    Int comb = binom(static_cast<unsigned long>(code.n), static_cast<unsigned long>(w));
    bool sieve_ok = comb <= Int(static_cast<unsigned long>(caps.max_combinations));
    if (!full_ok && !sieve_ok)
        throw CapExceeded("weight class infeasible: dimension " + std::to_string(k) +
                          " exceeds max_dim = " + std::to_string(caps.max_dim) + " and C(" +
                          std::to_string(code.n) + "," + std::to_string(w) + ") = " + comb.get_str() +
                          " exceeds max_combinations = " + std::to_string(caps.max_combinations));

    bool use_full = full_ok && (!sieve_ok || Int(pow2(static_cast<unsigned long>(k))) <= comb);

    std::vector<BitVec> out;
    if (use_full) {
        for_each_codeword(code, [&](const BitVec& c) {
            if (c.weight() == w) out.push_back(c);
        }, caps);
    } else {
        BinaryCode parity = dual(code);
        std::vector<BitVec> cols(static_cast<size_t>(code.n), BitVec(parity.dim()));
        for (int j = 0; j < code.n; j++)
            for (int i = 0; i < parity.dim(); i++)
                if (parity.gens[static_cast<size_t>(i)].get(j)) cols[static_cast<size_t>(j)].set(i, true);
        BitVec syn(parity.dim());
        SieveWalk walk{code.n, w, cols, out, {}, syn};
        walk.run();
    }
    std::sort(out.begin(), out.end(), support_less);
    return out;
}

int span_rank(std::span<const BitVec> vectors, int n) {
    std::vector<BitVec> basis;  // kept reduced, pivots distinct
    for (const BitVec& v : vectors) {
        if (v.size() != n) throw DomainError("vector length differs from stated length");
        BitVec r = v;
        for (const BitVec& b : basis) {
            if (r.get(b.first_set())) r ^= b;
        }
        if (r.any()) basis.push_back(std::move(r));
    }
    return static_cast<int>(basis.size());
}

}  // namespace sdw
