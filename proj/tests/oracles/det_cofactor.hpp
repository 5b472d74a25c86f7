#pragma once

#include <vector>

#include "k3ml/exact/int_matrix.hpp"

namespace oracle {

// Laplace expansion along the first row.
inline k3ml::exact::BigInt det_cofactor(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  k3ml::exact::BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const k3ml::exact::BigInt term = m[0][c] * det_cofactor(minor);
    total += (c % 2 == 0) ? term : k3ml::exact::BigInt(-term);
  }
  return total;
}

}  // namespace oracle
