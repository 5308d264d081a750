#include "sdw/bivariate_poly.hpp"

#include "sdw/errors.hpp"

namespace sdw {

bool BivariatePoly::is_zero() const {
    for (const Rat& c : coeff)
        if (sgn(c) != 0) return false;
    return true;
}

BivariatePoly zero_poly(int degree) {
    if (degree < 0) throw DomainError("polynomial degree must be nonnegative");
    return BivariatePoly{degree, std::vector<Rat>(static_cast<size_t>(degree) + 1)};
}

BivariatePoly scale(BivariatePoly p, const Rat& c) {
    for (Rat& x : p.coeff) x *= c;
    return p;
}

BivariatePoly add(const BivariatePoly& a, const BivariatePoly& b) {
    if (a.degree != b.degree) throw DomainError("cannot add polynomials of different degrees");
    BivariatePoly out = a;
    for (size_t j = 0; j < out.coeff.size(); j++) out.coeff[j] += b.coeff[j];
    return out;
}

BivariatePoly substitute_sum_diff(const BivariatePoly& p) {
    int d = p.degree;
    BivariatePoly out = zero_poly(d);
    // x^(d-j') y^j' -> (x+y)^(d-j') (x-y)^j'; expand via one binomial
    // convolution per source monomial
    for (int jp = 0; jp <= d; jp++) {
        const Rat& c = p.coeff[static_cast<size_t>(jp)];
        if (sgn(c) == 0) continue;
        for (int j = 0; j <= d; j++) {
            Int t = 0;
            for (int u = 0; u <= j; u++) {
                if (u > jp || j - u > d - jp) continue;
                Int term = binom(static_cast<unsigned long>(jp), static_cast<unsigned long>(u)) *
                           binom(static_cast<unsigned long>(d - jp), static_cast<unsigned long>(j - u));
                if (u & 1) {
                    t -= term;
                } else {
                    t += term;
                }
            }
            if (sgn(t) != 0) out.coeff[static_cast<size_t>(j)] += c * Rat(t);
        }
    }
    return out;
}

BivariatePoly to_polynomial(const WeightDistribution& dist) {
    BivariatePoly p = zero_poly(dist.n);
    for (int i = 0; i <= dist.n; i++) p.coeff[static_cast<size_t>(i)] = Rat(dist.counts[static_cast<size_t>(i)]);
    return p;
}

WeightDistribution from_polynomial(const BivariatePoly& p) {
    std::vector<Int> counts(static_cast<size_t>(p.degree) + 1);
    for (int j = 0; j <= p.degree; j++) {
        const Rat& c = p.coeff[static_cast<size_t>(j)];
        if (c.get_den() != 1)
            throw InconsistentDistribution("coefficient at weight " + std::to_string(j) + " is not an integer");
        counts[static_cast<size_t>(j)] = c.get_num();
    }
    return make_distribution(p.degree, std::move(counts));
}

std::string poly_to_string(const BivariatePoly& p) {
    std::string s;
    for (int j = 0; j <= p.degree; j++) {
        const Rat& c = p.coeff[static_cast<size_t>(j)];
        if (sgn(c) == 0) continue;
        Rat a = abs(c);
        if (s.empty()) {
            if (sgn(c) < 0) s += "-";
        } else {
            s += sgn(c) < 0 ? " - " : " + ";
        }
        int xd = p.degree - j;
        bool unit = a == 1 && (xd > 0 || j > 0);
        if (!unit) s += a.get_str();
        bool need_space = !unit;
        auto var = [&](const char* v, int e) {
            if (e == 0) return;
            if (need_space) s += " ";
            s += v;
            if (e > 1) s += "^" + std::to_string(e);
            need_space = true;
        };
        var("x", xd);
        var("y", j);
    }
    return s.empty() ? "0" : s;
}

}  // namespace sdw
