#include "sdw/krawtchouk.hpp"

#include "sdw/errors.hpp"

namespace sdw {

namespace {

// rows 0..n of Pascal's triangle
std::vector<std::vector<Int>> pascal(int n) {
    std::vector<std::vector<Int>> b(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; i++) {
        b[static_cast<size_t>(i)].resize(static_cast<size_t>(i) + 1);
        b[static_cast<size_t>(i)][0] = 1;
        for (int j = 1; j <= i; j++)
            b[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                b[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                (j <= i - 1 ? b[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] : Int(0));
    }
    return b;
}

Int kraw_sum(int j, int i, int n, const std::vector<std::vector<Int>>& b) {
    Int s = 0;
    for (int u = 0; u <= j; u++) {
        if (u > i || j - u > n - i) continue;
        Int term = b[static_cast<size_t>(i)][static_cast<size_t>(u)] *
                   b[static_cast<size_t>(n - i)][static_cast<size_t>(j - u)];
        if (u & 1) {
            s -= term;
        } else {
            s += term;
        }
    }
    return s;
}

}  // namespace

Int krawtchouk(int j, int i, int n) {
    if (n < 0 || j < 0 || j > n || i < 0 || i > n) throw DomainError("krawtchouk: arguments out of range");
    return kraw_sum(j, i, n, pascal(n));
}

KrawtchoukTable::KrawtchoukTable(int n) : n_(n) {
    if (n < 0) throw DomainError("krawtchouk: negative length");
    auto b = pascal(n);
    k_.resize((static_cast<size_t>(n) + 1) * (static_cast<size_t>(n) + 1));
    for (int j = 0; j <= n; j++)
        for (int i = 0; i <= n; i++)
            k_[static_cast<size_t>(j) * (static_cast<size_t>(n) + 1) + static_cast<size_t>(i)] = kraw_sum(j, i, n, b);
}

}  // namespace sdw
