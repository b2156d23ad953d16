#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qgarnier {

// Generalized Cartan matrix indexed by the labels of its family (0..N for
// the affine case, 1..N for the finite one).
struct CartanMatrix {
  std::string type;
  int first_index = 0;
  std::vector<std::vector<int>> entries;

  int size() const { return static_cast<int>(entries.size()); }
  int operator()(int i, int j) const { return entries.at(i - first_index).at(j - first_index); }

  // order of r_i r_j in the Weyl group; 0 when infinite
  int braid_order(int i, int j) const {
    if (i == j) return 1;
    int p = (*this)(i, j) * (*this)(j, i);
    switch (p) {
      case 0: return 2;
      case 1: return 3;
      case 2: return 4;
      case 3: return 6;
      default: return 0;
    }
  }
};

// Type A_N^(1), labels 0..N. For N = 1 the off-diagonal entries are -2.
inline CartanMatrix affine_a(int n) {
  if (n < 1) throw std::invalid_argument("affine type A needs rank at least 1");
  CartanMatrix c{"A" + std::to_string(n) + "^(1)", 0, std::vector<std::vector<int>>(n + 1, std::vector<int>(n + 1, 0))};
  for (int i = 0; i <= n; ++i) c.entries[i][i] = 2;
  if (n == 1) {
    c.entries[0][1] = c.entries[1][0] = -2;
    return c;
  }
  for (int i = 0; i <= n; ++i) {
    int j = (i + 1) % (n + 1);
    c.entries[i][j] = c.entries[j][i] = -1;
  }
  return c;
}

// Type A_N, labels 1..N.
inline CartanMatrix finite_a(int n) {
  if (n < 1) throw std::invalid_argument("type A needs rank at least 1");
  CartanMatrix c{"A" + std::to_string(n), 1, std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
  for (int i = 0; i < n; ++i) {
    c.entries[i][i] = 2;
    if (i + 1 < n) c.entries[i][i + 1] = c.entries[i + 1][i] = -1;
  }
  return c;
}

}  // namespace qgarnier
