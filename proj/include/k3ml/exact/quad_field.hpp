#pragma once

#include <optional>
#include <string>

#include "k3ml/exact/rational.hpp"

namespace k3ml::exact {

// Element a + b*sqrt(d) of the quadratic field Q(sqrt(d)).
//
// d == 0 marks an element that is known to be rational and has not yet been
// tied to a field; it combines with elements of any Q(sqrt(d)). Combining two
// elements with different nonzero d throws FieldMismatch.
class QuadFieldElement {
 public:
  QuadFieldElement() = default;
  QuadFieldElement(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadFieldElement(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadFieldElement(Rational a, Rational b, long d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long d() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  QuadFieldElement conjugate() const;
  Rational norm() const;  // a^2 - d b^2
  QuadFieldElement inverse() const;

  QuadFieldElement& operator+=(const QuadFieldElement& o);
  QuadFieldElement& operator-=(const QuadFieldElement& o);
  QuadFieldElement& operator*=(const QuadFieldElement& o);
  QuadFieldElement& operator/=(const QuadFieldElement& o);

  friend QuadFieldElement operator+(QuadFieldElement x, const QuadFieldElement& y) { return x += y; }
  friend QuadFieldElement operator-(QuadFieldElement x, const QuadFieldElement& y) { return x -= y; }
  friend QuadFieldElement operator*(QuadFieldElement x, const QuadFieldElement& y) { return x *= y; }
  friend QuadFieldElement operator/(QuadFieldElement x, const QuadFieldElement& y) { return x /= y; }
  QuadFieldElement operator-() const;

  // Equality is numeric: 2 (unbound) == 2 in Q(sqrt(-3)).
  friend bool operator==(const QuadFieldElement& x, const QuadFieldElement& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  // Square root within the same field, if it exists.
  std::optional<QuadFieldElement> sqrt() const;

  std::string to_string() const;

 private:
  long merged_d(const QuadFieldElement& o) const;

  Rational a_{0};
  Rational b_{0};
  long d_ = 0;
};

// Returns true if d is squarefree and not 0 or 1.
bool valid_field_parameter(long d);

}  // namespace k3ml::exact

namespace k3ml::exact {

// sqrt(n) for a positive integer n, written c*sqrt(d) with d squarefree;
// rational when n is a perfect square.
QuadFieldElement sqrt_of_integer(const BigInt& n);

}  // namespace k3ml::exact
