#include "sdw/certify.hpp"

#include <algorithm>
#include <map>

#include "sdw/errors.hpp"

namespace sdw {

namespace {

using Form = std::vector<Rat>;  // dense over the symbol indices

bool form_zero(const Form& f) {
    for (const Rat& c : f)
        if (sgn(c) != 0) return false;
    return true;
}

// Rational solver for homogeneous systems, pivoting on the last nonzero
// column so that relations express heavier weight classes through lighter
// ones.
struct Solver {
    size_t nsym;
    std::vector<std::pair<size_t, Form>> pivots;  // (pivot column, RREF row)

    explicit Solver(size_t n) : nsym(n) {}

    Form reduce(Form f) const {
        for (const auto& [pc, row] : pivots) {
            if (sgn(f[pc]) == 0) continue;
            Rat c = f[pc];
            for (size_t j = 0; j < nsym; j++) f[j] -= c * row[j];
        }
        return f;
    }

    void add(Form f) {
        f = reduce(std::move(f));
        size_t pc = nsym;
        for (size_t j = nsym; j-- > 0;) {
            if (sgn(f[j]) != 0) {
                pc = j;
                break;
            }
        }
        if (pc == nsym) return;  // dependent constraint
        Rat inv = 1 / f[pc];
        for (size_t j = 0; j < nsym; j++) f[j] *= inv;
        for (auto& [qc, row] : pivots) {
            if (sgn(row[pc]) == 0) continue;
            Rat c = row[pc];
            for (size_t j = 0; j < nsym; j++) row[j] -= c * f[j];
        }
        pivots.emplace_back(pc, std::move(f));
    }
};

// coefficients of (x+y)^(d-jp) (x-y)^jp by y-degree
std::vector<Int> sum_diff_row(int d, int jp) {
    std::vector<Int> t(static_cast<size_t>(d) + 1);
    for (int j = 0; j <= d; j++) {
        Int s = 0;
        for (int u = 0; u <= j; u++) {
            if (u > jp || j - u > d - jp) continue;
            Int term = binom(static_cast<unsigned long>(jp), static_cast<unsigned long>(u)) *
                       binom(static_cast<unsigned long>(d - jp), static_cast<unsigned long>(j - u));
            if (u & 1) {
                s -= term;
            } else {
                s += term;
            }
        }
        t[static_cast<size_t>(j)] = std::move(s);
    }
    return t;
}

DegreeCertificate run_degree(int n, const std::vector<int>& weights, bool all_ones, int dmin, int k) {
    DegreeCertificate cert;
    cert.degree = k;

    // interior classes only: weight 0 and, under all-ones, weight n
    // contribute nothing at degree >= 1
    std::vector<int> interior;
    for (int w : weights)
        if (0 < w && w < n) interior.push_back(w);

    std::map<int, size_t> symbol_of;  // class weight -> symbol index
    std::map<int, int> sign_of;
    for (int w : interior) {
        if (w < k || w > n - k) {
            cert.dropped_weights.push_back(w);
            continue;
        }
        if (all_ones) {
            int rep = std::min(w, n - w);
            if (w == n - w && (k & 1)) {
                // a = (-1)^k a kills the middle class at odd degree
                cert.dropped_weights.push_back(w);
                continue;
            }
            auto it = symbol_of.find(rep);
            if (it == symbol_of.end()) {
                symbol_of[rep] = cert.symbols.size();
                cert.symbols.push_back({rep, {{rep, 1}}});
                if (rep != n - rep && std::find(interior.begin(), interior.end(), n - rep) != interior.end())
                    cert.symbols.back().classes.emplace_back(n - rep, (k & 1) ? -1 : 1);
            }
            symbol_of[w] = symbol_of[rep];
            sign_of[w] = (w > n - w && (k & 1)) ? -1 : 1;
        } else {
            symbol_of[w] = cert.symbols.size();
            sign_of[w] = 1;
            cert.symbols.push_back({w, {{w, 1}}});
        }
    }

    size_t nsym = cert.symbols.size();
    int d = n - 2 * k;

    // symbolic Z: y-degree w-k carries the class symbol
    std::vector<Form> z(static_cast<size_t>(d) + 1, Form(nsym));
    for (int w : interior) {
        auto it = symbol_of.find(w);
        if (it == symbol_of.end()) continue;
        z[static_cast<size_t>(w - k)][it->second] += Rat(sign_of[w]);
    }

    // transformed side, up to the common nonzero scalar (-1)^k 2^k/|C|, which
    // cannot affect which coefficients vanish
    std::vector<Form> s(static_cast<size_t>(d) + 1, Form(nsym));
    for (int jp = 0; jp <= d; jp++) {
        if (form_zero(z[static_cast<size_t>(jp)])) continue;
        std::vector<Int> row = sum_diff_row(d, jp);
        for (int j = 0; j <= d; j++) {
            if (sgn(row[static_cast<size_t>(j)]) == 0) continue;
            Rat c{row[static_cast<size_t>(j)]};
            for (size_t q = 0; q < nsym; q++)
                s[static_cast<size_t>(j)][q] += c * z[static_cast<size_t>(jp)][q];
        }
    }

    Solver solver(nsym);
    if (dmin <= 1) {
        cert.degenerate = true;
    } else {
        for (int u = 1; u < dmin; u++) {
            if (u < k || u > n - k) continue;  // those dual coefficients vanish structurally
            cert.imposed_dual_weights.push_back(u);
            solver.add(s[static_cast<size_t>(u - k)]);
        }
    }

    std::vector<bool> pivot_col(nsym, false);
    for (const auto& [pc, row] : solver.pivots) {
        pivot_col[pc] = true;
        CertRelation rel;
        rel.lhs = static_cast<int>(pc);
        for (size_t j = 0; j < nsym; j++)
            if (j != pc && sgn(row[j]) != 0) rel.rhs.emplace_back(static_cast<int>(j), -row[j]);
        cert.relations.push_back(std::move(rel));
    }
    for (size_t j = 0; j < nsym; j++)
        if (!pivot_col[j]) cert.free_symbols.push_back(static_cast<int>(j));

    if (cert.degenerate) return cert;

    // report range: dual weights that can be nonempty for a matching code
    bool all_even = true;
    for (int w : weights)
        if (w % 2) all_even = false;
    int lo = dmin;
    int hi = all_even ? n - dmin : n - 1;
    for (int u = lo; u <= hi; u++) {
        if (all_ones && (u % 2)) continue;  // an all-ones primal forces even dual weights
        bool forced;
        if (u < k || u > n - k) {
            forced = true;  // degree-k sums vanish pointwise outside [k, n-k]
        } else {
            forced = form_zero(solver.reduce(s[static_cast<size_t>(u - k)]));
        }
        if (forced) cert.forced_zero_dual_weights.push_back(u);
    }
    return cert;
}

}  // namespace

DualDesignCertificate certify_dual_design_classes(int n, std::vector<int> primal_weights,
                                                  bool has_all_ones, int dual_min_dist, int degree) {
    if (n < 2) throw DomainError("length too small");
    if (degree < 1 || 2 * degree > n) throw DomainError("degree must be in [1, n/2]");
    if (dual_min_dist < 0 || dual_min_dist > n) throw DomainError("dual minimum distance out of range");
    std::sort(primal_weights.begin(), primal_weights.end());
    primal_weights.erase(std::unique(primal_weights.begin(), primal_weights.end()), primal_weights.end());
    for (int w : primal_weights)
        if (w < 0 || w > n) throw DomainError("weight out of range");
    if (has_all_ones) {
        for (int w : primal_weights)
            if (0 < w && w < n &&
                std::find(primal_weights.begin(), primal_weights.end(), n - w) == primal_weights.end())
                throw DomainError("an all-ones profile needs complement-symmetric weights");
    }

    DualDesignCertificate out;
    out.n = n;
    out.primal_weights = primal_weights;
    out.has_all_ones = has_all_ones;
    out.dual_min_dist = dual_min_dist;
    out.degree = degree;
    out.note =
        "dual coefficients are linear in the free symbols, so vanishing on the whole "
        "solution space and vanishing at generic nonzero values coincide";

    for (int k = 1; k <= degree; k++) out.per_degree.push_back(run_degree(n, primal_weights, has_all_ones, dual_min_dist, k));

    bool any_degenerate = false;
    for (const DegreeCertificate& c : out.per_degree)
        if (c.degenerate) any_degenerate = true;
    if (!any_degenerate) {
        out.certified_dual_weights = out.per_degree.front().forced_zero_dual_weights;
        for (const DegreeCertificate& c : out.per_degree) {
            std::vector<int> merged;
            std::set_intersection(out.certified_dual_weights.begin(), out.certified_dual_weights.end(),
                                  c.forced_zero_dual_weights.begin(), c.forced_zero_dual_weights.end(),
                                  std::back_inserter(merged));
            out.certified_dual_weights = std::move(merged);
        }
    }
    return out;
}

}  // namespace sdw
