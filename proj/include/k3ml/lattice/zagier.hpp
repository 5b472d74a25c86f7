#pragma once

#include <cstdint>
#include <vector>

#include "k3ml/lattice/lattice_sum.hpp"

namespace k3ml::lattice {

struct ZagierAResult {
  double value = 0;
  double tail_bound = 0;
  LatticeSumResult k18;  // sum' 1/(k^2+18m^2)^s
  LatticeSumResult m9;   // sum' 1/(9m^2+2k^2)^s
};

// sum'( -1/(9m^2+2k^2)^s + 1/(k^2+18m^2)^s ), s > 1.
ZagierAResult zagier_A(double s, long radius, const LatticeOptions& opt = {});

// Dirichlet coefficients of A(s): #{k^2+18m^2 = n} - #{9m^2+2k^2 = n} for n = 0..n_max.
std::vector<std::int64_t> zagier_A_coefficients(long n_max);

struct ZagierBResult {
  double lhs = 0, rhs = 0;
  double factor = 0;  // 1 + 2/3^s + 27/3^{2s}
  double tail_bound = 0;  // combined bound for lhs - rhs
  LatticeSumResult k18, m9, base;
};

// Both sides of
//   sum'(k^2-18m^2)/(k^2+18m^2)^s + sum'(9m^2-2k^2)/(9m^2+2k^2)^s
//     = (1 + 2/3^s + 27/3^{2s}) sum'(m^2-2k^2)/(m^2+2k^2)^s,  s >= 3.
ZagierBResult zagier_B_identity(double s, long radius, const LatticeOptions& opt = {});

// Half the number of (k,m) with k^2 + 2m^2 = n, n >= 1.
std::int64_t r_n(std::int64_t n);
// r_0..r_{n_max} by enumeration (entry 0 is 0).
std::vector<std::int64_t> r_n_table(long n_max);

}  // namespace k3ml::lattice
