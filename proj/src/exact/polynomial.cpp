#include "k3ml/exact/polynomial.hpp"

namespace k3ml::exact {

PolyQd to_quadratic(const PolyQ& p, long d) {
  std::vector<QuadFieldElement> c;
  c.reserve(p.coefficients().size());
  for (const Rational& x : p.coefficients()) c.emplace_back(x, 0, d);
  return PolyQd(std::move(c), p.variable());
}

}  // namespace k3ml::exact
