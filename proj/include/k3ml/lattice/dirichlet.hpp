#pragma once

#include <string>
#include <vector>

namespace k3ml::lattice {

// Real character given by its table on one period; values[n % modulus].
class DirichletChar {
 public:
  // Validates complete multiplicativity on the period and the zero pattern.
  DirichletChar(long modulus, std::vector<int> values, std::string name = "");

  // n -> kronecker(D, n) for D = 0, 1 mod 4, modulus |D|; other D throw DomainError.
  static DirichletChar kronecker(long discriminant);
  static DirichletChar trivial();

  long modulus() const { return modulus_; }
  const std::vector<int>& values() const { return values_; }
  const std::string& name() const { return name_; }
  int operator()(long n) const;
  bool principal() const;

 private:
  long modulus_;
  std::vector<int> values_;
  std::string name_;
};

struct LValueResult {
  double value = 0;
  double error_bound = 0;
  long periods = 0;  // full periods summed directly before the tail model
};

// sum chi(n) n^{-s}: whole periods summed directly, then the remaining Hurwitz tails by
// Euler-Maclaurin. s > 1, or s > 0 for a non-principal character (periods paired).
LValueResult dirichlet_L(const DirichletChar& chi, double s, double tol = 1e-13);

struct D3Result {
  double value = 0;  // character route
  double character_route = 0;
  double lattice_route = 0;
  double difference = 0;
};

// (3 sqrt3 / 4 pi) L(chi_-3, 2) and (2 sqrt3 / pi^3) sum' 1/(m^2+3k^2)^2;
// throws InternalError when they differ by more than 1e-8.
D3Result d3(long radius = 4096, unsigned threads = 0);

}  // namespace k3ml::lattice
