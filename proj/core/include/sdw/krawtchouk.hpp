#pragma once

#include <vector>

#include "sdw/rational.hpp"

namespace sdw {

// K_j(i; n) = sum_u (-1)^u C(i,u) C(n-i, j-u), the binary Krawtchouk value
Int krawtchouk(int j, int i, int n);

// all (n+1)^2 values for a fixed n, built once with cached binomials
class KrawtchoukTable {
  public:
    explicit KrawtchoukTable(int n);
    const Int& at(int j, int i) const { return k_[static_cast<size_t>(j) * (static_cast<size_t>(n_) + 1) + static_cast<size_t>(i)]; }
    int n() const { return n_; }

  private:
    int n_;
    std::vector<Int> k_;
};

}  // namespace sdw
