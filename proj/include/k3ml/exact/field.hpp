#pragma once

#include <optional>
#include <string>

#include "k3ml/exact/quad_field.hpp"
#include "k3ml/exact/rational.hpp"

// Uniform field interface used by the polynomial templates. Coefficient
// fields are Q (Rational) and Q(sqrt d) (QuadFieldElement).
namespace k3ml::exact {

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const QuadFieldElement& x) { return x.is_zero(); }

inline Rational field_inverse(const Rational& x);
inline QuadFieldElement field_inverse(const QuadFieldElement& x) { return x.inverse(); }

inline std::optional<Rational> field_sqrt(const Rational& x) { return rational_sqrt(x); }
inline std::optional<QuadFieldElement> field_sqrt(const QuadFieldElement& x) { return x.sqrt(); }

inline std::string to_string(const QuadFieldElement& x) { return x.to_string(); }

// Total order used only for canonical output ordering.
inline bool field_less(const Rational& x, const Rational& y) { return x < y; }
inline bool field_less(const QuadFieldElement& x, const QuadFieldElement& y) {
  if (x.a() != y.a()) return x.a() < y.a();
  return x.b() < y.b();
}

}  // namespace k3ml::exact

#include "k3ml/error.hpp"

namespace k3ml::exact {

inline Rational field_inverse(const Rational& x) {
  if (is_zero(x)) throw DomainError("division by zero in Q");
  Rational r = 1 / x;
  r.canonicalize();
  return r;
}

}  // namespace k3ml::exact
