#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace sdw {

// All exact arithmetic in this library runs on GMP integers and rationals.
// Fixed-width integers are only used for counters that provably fit.
using Int = mpz_class;
using Rat = mpq_class;

inline Int binom(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int pow2(unsigned long k) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

// quotient of p/q when the division is exact; returns false otherwise
inline bool divide_exact(const Int& p, const Int& q, Int& out) {
    Int r;
    mpz_fdiv_qr(out.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    return sgn(r) == 0;
}

// C(n,k) in a machine word; valid for 0 <= n <= 64 (C(64,32) < 2^63)
std::uint64_t binom64(int n, int k);

}  // namespace sdw
