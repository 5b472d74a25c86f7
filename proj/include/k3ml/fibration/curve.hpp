#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3ml/exact/factor.hpp"
#include "k3ml/exact/polynomial.hpp"
#include "k3ml/exact/rational_function.hpp"

namespace k3ml::fibration {

using exact::Polynomial;
using exact::RationalFunction;

// Long Weierstrass curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F(s).
// field_d is the d of Q(sqrt d) when F is a quadratic field, 0 for Q.
template <class F>
struct Curve {
  Polynomial<F> a1, a2, a3, a4, a6;
  long field_d = 0;
  std::string name;

  std::string variable() const {
    for (const auto* p : {&a1, &a2, &a3, &a4, &a6})
      if (p->degree() >= 1) return p->variable();
    return a1.variable();
  }
};

template <class F>
struct Invariants {
  Polynomial<F> b2, b4, b6, b8, c4, c6, delta;
  RationalFunction<F> j;
};

template <class F>
Invariants<F> invariants(const Curve<F>& e) {
  const F two(2), four(4), eight(8), nine(9), twentyfour(24), twentyseven(27), thirtysix(36), twosixteen(216);
  Invariants<F> r;
  r.b2 = e.a1 * e.a1 + four * e.a2;
  r.b4 = two * e.a4 + e.a1 * e.a3;
  r.b6 = e.a3 * e.a3 + four * e.a6;
  r.b8 = e.a1 * e.a1 * e.a6 + four * e.a2 * e.a6 - e.a1 * e.a3 * e.a4 + e.a2 * e.a3 * e.a3 - e.a4 * e.a4;
  r.c4 = r.b2 * r.b2 - twentyfour * r.b4;
  r.c6 = -(r.b2 * r.b2 * r.b2) + thirtysix * r.b2 * r.b4 - twosixteen * r.b6;
  r.delta = -(r.b2 * r.b2 * r.b8) - eight * r.b4 * r.b4 * r.b4 - twentyseven * r.b6 * r.b6 + nine * r.b2 * r.b4 * r.b6;
  if (r.delta.is_zero()) throw DomainError("curve " + e.name + " has zero discriminant");
  r.j = RationalFunction<F>(r.c4 * r.c4 * r.c4, r.delta);
  return r;
}

// 4 b8 = b2 b6 - b4^2, 1728 delta = c4^3 - c6^2, j delta = c4^3.
template <class F>
bool invariant_identities_hold(const Invariants<F>& v) {
  const bool b8_ok = F(4) * v.b8 == v.b2 * v.b6 - v.b4 * v.b4;
  const bool disc_ok = F(1728) * v.delta == v.c4 * v.c4 * v.c4 - v.c6 * v.c6;
  const bool j_ok = v.j * RationalFunction<F>(v.delta) == RationalFunction<F>(v.c4 * v.c4 * v.c4);
  return b8_ok && disc_ok && j_ok;
}

// Affine point (x, y) over F(s), or the point at infinity.
template <class F>
struct Point {
  bool infinity = true;
  RationalFunction<F> x, y;

  static Point at_infinity() { return Point{}; }
  static Point affine(RationalFunction<F> x, RationalFunction<F> y) { return Point{false, std::move(x), std::move(y)}; }

  friend bool operator==(const Point& p, const Point& q) {
    if (p.infinity || q.infinity) return p.infinity == q.infinity;
    return p.x == q.x && p.y == q.y;
  }
};

// Projective triple (X : Y : Z) with rational-function entries, as printed in the data files.
template <class F>
struct ProjectivePoint {
  RationalFunction<F> X, Y, Z;
};

template <class F>
RationalFunction<F> lift(const Polynomial<F>& p) {
  return RationalFunction<F>(p);
}

// Y^2 Z + a1 XYZ + a3 YZ^2 - (X^3 + a2 X^2 Z + a4 X Z^2 + a6 Z^3).
template <class F>
RationalFunction<F> verify_section(const Curve<F>& e, const ProjectivePoint<F>& p) {
  const auto& X = p.X;
  const auto& Y = p.Y;
  const auto& Z = p.Z;
  const auto lhs = Y * Y * Z + lift(e.a1) * X * Y * Z + lift(e.a3) * Y * Z * Z;
  const auto rhs = X * X * X + lift(e.a2) * X * X * Z + lift(e.a4) * X * Z * Z + lift(e.a6) * Z * Z * Z;
  return lhs - rhs;
}

template <class F>
Point<F> to_affine(const ProjectivePoint<F>& p) {
  if (p.Z.is_zero()) {
    if (p.X.is_zero() && !p.Y.is_zero()) return Point<F>::at_infinity();
    throw DomainError("projective point with Z = 0 is not the origin (0:1:0)");
  }
  return Point<F>::affine(p.X / p.Z, p.Y / p.Z);
}

// Clears denominators: entries become polynomials (as rational functions with denominator 1).
template <class F>
ProjectivePoint<F> to_projective(const Point<F>& p, const std::string& var) {
  using RF = RationalFunction<F>;
  if (p.infinity)
    return {RF(Polynomial<F>({}, var)), RF(Polynomial<F>::constant(F(1), var)), RF(Polynomial<F>({}, var))};
  const auto& dx = p.x.denominator();
  const auto& dy = p.y.denominator();
  const Polynomial<F> l = (dx * dy).exact_div(gcd(dx, dy));
  return {RF(p.x.numerator() * l.exact_div(dx)), RF(p.y.numerator() * l.exact_div(dy)), RF(l)};
}

template <class F>
bool on_curve(const Curve<F>& e, const Point<F>& p) {
  if (p.infinity) return true;
  const RationalFunction<F> one(Polynomial<F>::constant(F(1), e.variable()));
  return verify_section(e, ProjectivePoint<F>{p.x, p.y, one}).is_zero();
}

template <class F>
Point<F> negate(const Curve<F>& e, const Point<F>& p) {
  if (p.infinity) return p;
  return Point<F>::affine(p.x, -p.y - lift(e.a1) * p.x - lift(e.a3));
}

namespace detail {

template <class F>
Point<F> add_unchecked(const Curve<F>& e, const Point<F>& p, const Point<F>& q) {
  using RF = RationalFunction<F>;
  if (p.infinity) return q;
  if (q.infinity) return p;
  const RF a1 = lift(e.a1), a2 = lift(e.a2), a3 = lift(e.a3), a4 = lift(e.a4), a6 = lift(e.a6);
  RF lambda, nu;
  if (p.x == q.x) {
    const RF denom = p.y + q.y + a1 * q.x + a3;
    if (denom.is_zero()) return Point<F>::at_infinity();
    const RF three(Polynomial<F>::constant(F(3))), two(Polynomial<F>::constant(F(2)));
    lambda = (three * p.x * p.x + two * a2 * p.x + a4 - a1 * p.y) / denom;
    nu = (-(p.x * p.x * p.x) + a4 * p.x + two * a6 - a3 * p.y) / denom;
  } else {
    const RF dx = q.x - p.x;
    lambda = (q.y - p.y) / dx;
    nu = (p.y * q.x - q.y * p.x) / dx;
  }
  const RF x3 = lambda * lambda + a1 * lambda - a2 - p.x - q.x;
  const RF y3 = -(lambda + a1) * x3 - nu - a3;
  return Point<F>::affine(x3, y3);
}

}  // namespace detail

// Chord-tangent addition; throws DomainError if an input is not on the curve.
template <class F>
Point<F> group_add(const Curve<F>& e, const Point<F>& p, const Point<F>& q) {
  if (!on_curve(e, p) || !on_curve(e, q)) throw DomainError("group_add: point not on curve " + e.name);
  return detail::add_unchecked(e, p, q);
}

// k * p by double-and-add; negative k uses -p.
template <class F>
Point<F> multiply(const Curve<F>& e, Point<F> p, long k) {
  if (!on_curve(e, p)) throw DomainError("multiply: point not on curve " + e.name);
  if (k < 0) {
    p = negate(e, p);
    k = -k;
  }
  Point<F> acc = Point<F>::at_infinity();
  while (k != 0) {
    if (k & 1) acc = detail::add_unchecked(e, acc, p);
    k >>= 1;
    if (k != 0) p = detail::add_unchecked(e, p, p);
  }
  return acc;
}

// Smallest n in [1, bound] with n p = O, or nullopt.
template <class F>
std::optional<long> torsion_order(const Curve<F>& e, const Point<F>& p, long bound) {
  if (!on_curve(e, p)) throw DomainError("torsion_order: point not on curve " + e.name);
  Point<F> acc = p;
  for (long n = 1; n <= bound; ++n) {
    if (acc.infinity) return n;
    acc = detail::add_unchecked(e, acc, p);
  }
  return std::nullopt;
}

template <class F>
struct RecoverYResult {
  bool exists = false;
  RationalFunction<F> discriminant;  // (a1 x + a3)^2 + 4 (x^3 + a2 x^2 + a4 x + a6)
};

namespace detail {

inline exact::Rational bind_field(const exact::Rational& x, long) { return x; }
inline exact::QuadFieldElement bind_field(const exact::QuadFieldElement& x, long d) {
  if (d == 0) return x;
  return exact::QuadFieldElement(x.a(), x.b(), d);
}

}  // namespace detail

// Whether some y in F(s) satisfies the curve equation at x = X / Z.
template <class F>
RecoverYResult<F> recover_y(const Curve<F>& e, const RationalFunction<F>& X, const RationalFunction<F>& Z) {
  if (Z.is_zero()) throw DomainError("recover_y: Z must be nonzero");
  using RF = RationalFunction<F>;
  const RF x = X / Z;
  const RF lin = lift(e.a1) * x + lift(e.a3);
  const RF cubic = x * x * x + lift(e.a2) * x * x + lift(e.a4) * x + lift(e.a6);
  RecoverYResult<F> out;
  out.discriminant = lin * lin + RF(Polynomial<F>::constant(F(4))) * cubic;
  // num/den is a square iff num*den is a square polynomial (den is monic).
  Polynomial<F> prod = out.discriminant.numerator() * out.discriminant.denominator();
  if (prod.is_zero()) {
    out.exists = true;
    return out;
  }
  std::vector<F> coeffs = prod.coefficients();
  for (F& c : coeffs) c = detail::bind_field(c, e.field_d);
  out.exists = Polynomial<F>(std::move(coeffs), prod.variable()).sqrt().has_value();
  return out;
}

struct FiberReport {
  std::optional<exact::PolyQ> place;  // monic irreducible factor; nullopt is the place at infinity
  int place_degree = 1;
  int delta_valuation = 0;
  std::optional<int> c4_valuation;  // nullopt when c4 vanishes identically
  bool irreducible_place = true;    // false for an unsplit squarefree block of degree >= 4
  std::string kodaira;              // "I_n" or "additive (not classified)"

  bool multiplicative() const { return c4_valuation.has_value() && *c4_valuation == 0; }
  std::string place_label() const;
};

// Curve rescaled at s = 1/sigma with a_i <- sigma^(i weight) a_i(1/sigma).
Curve<exact::Rational> at_infinity(const Curve<exact::Rational>& e, int weight, const std::string& var = "sigma");

// One report per irreducible factor of the discriminant (canonical order) then infinity if singular there.
std::vector<FiberReport> classify_fibers(const Curve<exact::Rational>& e, int weight);

// Sum of delta valuations weighted by place degree.
int valuation_sum(const std::vector<FiberReport>& fibers);

// Component counts m_v, one entry per geometric place (a degree-d place contributes d entries).
std::vector<int> component_counts(const std::vector<FiberReport>& fibers);

struct ShiodaInput {
  int rho = 0;
  std::vector<int> fiber_component_counts;
};

// r = rho - 2 - sum(m_v - 1); throws DomainError on inconsistent input.
int shioda_rank(const ShiodaInput& in);

}  // namespace k3ml::fibration
