#include "k3ml/exact/quad_field.hpp"

#include "k3ml/error.hpp"

namespace k3ml::exact {

bool valid_field_parameter(long d) {
  if (d == 0 || d == 1) return false;
  return split_square(BigInt(d)).first == 1;
}

QuadFieldElement::QuadFieldElement(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (d_ != 0 && !valid_field_parameter(d_))
    throw DomainError("quadratic field parameter must be squarefree and not 0 or 1, got " + std::to_string(d));
  if (d_ == 0 && b_ != 0) throw DomainError("irrational part given without a field parameter");
}

long QuadFieldElement::merged_d(const QuadFieldElement& o) const {
  if (d_ == 0) return o.d_;
  if (o.d_ == 0 || o.d_ == d_) return d_;
  throw FieldMismatch("Q(sqrt " + std::to_string(d_) + ") combined with Q(sqrt " + std::to_string(o.d_) + ")");
}

QuadFieldElement QuadFieldElement::conjugate() const {
  QuadFieldElement r = *this;
  r.b_ = -b_;
  return r;
}

Rational QuadFieldElement::norm() const {
  Rational n = a_ * a_ - Rational(d_) * b_ * b_;
  n.canonicalize();
  return n;
}

QuadFieldElement QuadFieldElement::inverse() const {
  if (is_zero()) throw DomainError("division by zero in quadratic field");
  const Rational n = norm();
  QuadFieldElement r = conjugate();
  r.a_ /= n;
  r.b_ /= n;
  r.a_.canonicalize();
  r.b_.canonicalize();
  return r;
}

QuadFieldElement& QuadFieldElement::operator+=(const QuadFieldElement& o) {
  d_ = merged_d(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadFieldElement& QuadFieldElement::operator-=(const QuadFieldElement& o) {
  d_ = merged_d(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadFieldElement& QuadFieldElement::operator*=(const QuadFieldElement& o) {
  const long d = merged_d(o);
  Rational a = a_ * o.a_ + Rational(d) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  return *this;
}

QuadFieldElement& QuadFieldElement::operator/=(const QuadFieldElement& o) { return *this *= o.inverse(); }

QuadFieldElement QuadFieldElement::operator-() const {
  QuadFieldElement r = *this;
  r.a_ = -a_;
  r.b_ = -b_;
  return r;
}

std::optional<QuadFieldElement> QuadFieldElement::sqrt() const {
  if (is_zero()) return *this;
  if (d_ == 0 || b_ == 0) {
    if (auto r = rational_sqrt(a_)) return QuadFieldElement(*r, 0, d_);
    if (d_ == 0) return std::nullopt;
    // a = d * v^2 gives sqrt(a) = v sqrt(d).
    Rational over_d = a_ / Rational(d_);
    over_d.canonicalize();
    if (auto v = rational_sqrt(over_d)) return QuadFieldElement(0, *v, d_);
    return std::nullopt;
  }
  // (u + v sqrt d)^2 = a + b sqrt d  =>  u^2 = (a +- sqrt(norm)) / 2, v = b / (2u).
  const auto n = rational_sqrt(norm());
  if (!n) return std::nullopt;
  for (const Rational& cand : {Rational((a_ + *n) / 2), Rational((a_ - *n) / 2)}) {
    Rational c = cand;
    c.canonicalize();
    auto u = rational_sqrt(c);
    if (!u || *u == 0) continue;
    Rational v = b_ / (2 * *u);
    v.canonicalize();
    QuadFieldElement root(*u, v, d_);
    if (root * root == *this) return root;
  }
  return std::nullopt;
}

std::string QuadFieldElement::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  std::string irr = (b_ == 1) ? root : (b_ == -1 ? "-" + root : b_.get_str() + "*" + root);
  if (a_ == 0) return irr;
  if (irr[0] == '-') return a_.get_str() + " - " + irr.substr(1);
  return a_.get_str() + " + " + irr;
}

QuadFieldElement sqrt_of_integer(const BigInt& n) {
  if (n < 0) throw DomainError("sqrt_of_integer: negative argument");
  auto [root, sf] = split_square(n);
  if (sf == 1 || sf == 0) return QuadFieldElement(Rational(root));
  return QuadFieldElement(0, Rational(root), sf.get_si());
}

}  // namespace k3ml::exact
