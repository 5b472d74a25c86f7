#pragma once

#include <map>
#include <string>
#include <vector>

#include "k3ml/exact/rational.hpp"

namespace k3ml::modular {

using exact::BigInt;
using exact::Rational;

// q^leading_exponent * sum_{j < precision} coefficients[j] q^j.
struct QExpansion {
  Rational leading_exponent{0};
  std::vector<BigInt> coefficients;
  long precision = 0;

  bool is_zero() const;
  // Shifts leading zero coefficients into the exponent.
  QExpansion normalized() const;
  std::string to_string(int terms = 8) const;
};

// Truncates to the smaller precision.
QExpansion operator*(const QExpansion& a, const QExpansion& b);
// Inverse of a series whose first coefficient is +-1.
QExpansion inverse(const QExpansion& a);
QExpansion power(const QExpansion& a, int e);

// eta(N tau): q^{N/24} prod_{n >= 1} (1 - q^{N n}) via the pentagonal-number theorem.
QExpansion eta_q(long N, long precision);

// prod_N eta(N tau)^{e_N}.
QExpansion eta_quotient(const std::map<long, int>& exponents, long precision);

}  // namespace k3ml::modular
