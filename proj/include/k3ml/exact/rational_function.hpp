#pragma once

#include <string>
#include <utility>

#include "k3ml/exact/polynomial.hpp"

namespace k3ml::exact {

// Element num/den of F(var), kept reduced with a monic denominator.
template <class F>
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial<F>::constant(F(1))) {}
  RationalFunction(Polynomial<F> num)  // NOLINT(google-explicit-constructor)
      : num_(std::move(num)), den_(Polynomial<F>::constant(F(1), num_.variable())) {}
  RationalFunction(Polynomial<F> num, Polynomial<F> den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  const Polynomial<F>& numerator() const { return num_; }
  const Polynomial<F>& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction operator-() const { return RationalFunction(-num_, den_, Reduced{}); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DomainError("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend RationalFunction operator*(const F& k, const RationalFunction& a) {
    return RationalFunction(a.num_ * k, a.den_);
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  struct Reduced {};
  RationalFunction(Polynomial<F> num, Polynomial<F> den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Polynomial<F>::constant(F(1), den_.variable());
      return;
    }
    Polynomial<F> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
    const F lead_inv = field_inverse(den_.leading());
    num_ *= lead_inv;
    den_ *= lead_inv;
  }

  Polynomial<F> num_;
  Polynomial<F> den_;
};

using RatFuncQ = RationalFunction<Rational>;
using RatFuncQd = RationalFunction<QuadFieldElement>;

}  // namespace k3ml::exact
