#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sfl {

// Parameters of K_s v (K_{n-s-t} + tK_1): join clique of size s, inner clique
// of size n-s-t, independent part of size t. Orbit labeling is fixed: join
// clique first (0..s-1), inner clique next, independent part last. The inner
// clique may be empty; that boundary shows up at the top of the claim sweeps.
struct SplitGraphSpec {
  int n = 0;
  int s = 0;
  int t = 1;

  int inner_size() const { return n - s - t; }

  bool valid() const { return s >= 0 && t >= 1 && inner_size() >= 0 && n <= 64; }

  void validate() const {
    if (!valid()) {
      throw std::invalid_argument("invalid split graph spec (n=" + std::to_string(n) +
                                  ", s=" + std::to_string(s) + ", t=" + std::to_string(t) + ")");
    }
  }
};

}  // namespace sfl
