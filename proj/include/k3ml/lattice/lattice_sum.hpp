#pragma once

#include <string>
#include <vector>

#include "k3ml/lattice/kernel.hpp"

namespace k3ml::lattice {

// a k^2 + b k m + c m^2, positive definite.
struct QuadForm {
  long a = 1, b = 0, c = 1;
  bool positive_definite() const { return a > 0 && 4 * a * c - b * b > 0; }
  // Smallest eigenvalue of the Gram matrix, i.e. the minimum on the unit circle.
  double min_on_unit_circle() const;
  std::string to_string() const;
};

struct Monomial {
  int k_exp = 0, m_exp = 0;
  long coeff = 0;
};

// Parses an integer polynomial in k and m such as "k^2 - 2*m^2" or "1".
std::vector<Monomial> parse_numerator(const std::string& text);
std::string numerator_to_string(const std::vector<Monomial>& num);
int numerator_degree(const std::vector<Monomial>& num);

struct LatticeSumSpec {
  QuadForm form;
  std::vector<Monomial> numerator{{0, 0, 1}};
  double s = 2.0;
  long radius = 4096;
};

struct LatticeOptions {
  unsigned threads = 0;
  Kernel kernel = Kernel::automatic;
  // Adds the continuum estimate of the sum over max(|k|,|m|) > radius.
  bool tail_correction = true;
};

struct LatticeSumResult {
  double value = 0;  // raw + tail_correction (or raw when disabled)
  double raw = 0;  // sum over 0 < max(|k|,|m|) <= radius
  double tail_correction = 0;
  double tail_bound = 0;  // bound on |sum over max(|k|,|m|) > radius|
  long long points = 0;
};

// sum' num(k,m) / form(k,m)^s over square shells, each shell compensated,
// shells reduced in ascending order. Throws DomainError for divergent or invalid specs.
LatticeSumResult lattice_sum(const LatticeSumSpec& spec, const LatticeOptions& opt = {});

// C R^{deg + 2 - 2s} with C = 8 sum|c|2^{(i+j)/2} / (lambda^s (2s - deg - 2)).
double lattice_tail_bound(const LatticeSumSpec& spec);

}  // namespace k3ml::lattice
