#pragma once

#include <vector>

#include "k3ml/exact/polynomial.hpp"

namespace k3ml::exact {

struct PolyFactor {
  PolyQ factor;        // monic
  int multiplicity = 1;
  // False for a squarefree block of degree >= 4 without rational roots that
  // may still split into quadratics over Q.
  bool irreducible = true;
};

struct Factorization {
  Rational constant;  // input = constant * prod factor^multiplicity
  std::vector<PolyFactor> factors;
};

// Squarefree decomposition (Yun) followed by splitting off rational roots.
// Factors come back in canonical (degree, then coefficient) order.
// Throws DomainError for the zero polynomial.
Factorization squarefree_factor(const PolyQ& p);

// Yun's squarefree decomposition only: pairs (squarefree block, multiplicity).
std::vector<std::pair<PolyQ, int>> yun_decomposition(const PolyQ& p);

// Rational roots of a nonzero polynomial over Q, each listed once.
std::vector<Rational> rational_roots(const PolyQ& p);

}  // namespace k3ml::exact
