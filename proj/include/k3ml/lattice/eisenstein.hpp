#pragma once

#include <array>
#include <complex>
#include <utility>

#include "k3ml/lattice/lattice_sum.hpp"

namespace k3ml::lattice {

struct EisensteinSpec {
  std::complex<double> tau{0.0, 0.7071067811865476};
  std::array<std::pair<int, int>, 4> dilation_weights{{{1, -4}, {2, 16}, {3, -36}, {6, 144}}};
  long radius = 4096;
};

struct EisensteinResult {
  double value = 0;
  double imaginary_residue = 0;
  double raw = 0;
  double tail_correction = 0;
  double tail_bound = 0;
  long long points = 0;
};

// (Im tau / 8 pi^3) sum_j w_j sum'_{m,n} [2 Re 1/(z^3 conj z) + 1/|z|^4], z = m j tau + n,
// over 0 < max(|m|,|n|) <= radius. Throws DomainError for Im tau <= 0 or radius < 64,
// InternalError when the imaginary part exceeds 1e-12.
EisensteinResult eisenstein_mahler(const EisensteinSpec& spec, const LatticeOptions& opt = {});

// Same sum restricted to m > 0 or (m = 0, n > 0), without the tail correction.
EisensteinResult eisenstein_half_lattice(const EisensteinSpec& spec, const LatticeOptions& opt = {});

// Rational-term form of the sum at tau = i/sqrt2, built from the four forms
// D_1 = (m^2+2k^2)/2, D_2 = 2m^2+k^2, D_3 = (9m^2+2k^2)/2, D_6 = 18m^2+k^2.
EisensteinResult specialized_m10(long radius, const LatticeOptions& opt = {});

// (1/2) sum' (k^2-2m^2)/(k^2+2m^2)^3, the lattice value of L(f,3).
LatticeSumResult central_lattice_value(long radius, const LatticeOptions& opt = {});

}  // namespace k3ml::lattice
