#include <map>

#include "doctest.h"
#include "k3ml/exact/factor.hpp"
#include "k3ml/exact/int_matrix.hpp"
#include "k3ml/exact/kronecker.hpp"
#include "k3ml/exact/quad_field.hpp"
#include "k3ml/exact/rational_function.hpp"
#include "oracles/det_cofactor.hpp"
#include "oracles/gen.hpp"

using namespace k3ml::exact;

namespace {

// Euler's criterion for an odd prime modulus.
int legendre_euler(long a, long p) {
  long x = ((a % p) + p) % p;
  if (x == 0) return 0;
  long r = 1, b = x, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

PolyQ poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return PolyQ(v, "s");
}

}  // namespace

TEST_CASE("kronecker symbol small values") {
  CHECK(kronecker_symbol(-3, 7) == 1);
  CHECK(kronecker_symbol(-3, 5) == -1);
  CHECK(kronecker_symbol(6, 5) == 1);
  CHECK(kronecker_symbol(6, 7) == -1);
  CHECK(kronecker_symbol(-3, 3) == 0);
  CHECK(kronecker_symbol(5, 1) == 1);
  CHECK(kronecker_symbol(2, 8) == 0);
  CHECK(kronecker_symbol(3, 2) == -1);
  CHECK(kronecker_symbol(1, 2) == 1);
  CHECK(kronecker_symbol(-1, -1) == -1);
  CHECK_THROWS_AS(kronecker_symbol(3, 0), k3ml::DomainError);
}

TEST_CASE("kronecker symbol agrees with Euler's criterion at odd primes") {
  for (long p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 97, 101})
    for (long a = -60; a <= 60; ++a) CHECK(kronecker_symbol(a, p) == legendre_euler(a, p));
}

TEST_CASE("kronecker symbol is completely multiplicative in the top argument") {
  for (long p : {3, 5, 7, 11, 13, 97})
    for (long a = 1; a < 100; ++a)
      for (long b = 1; b < 100; ++b)
        REQUIRE(kronecker_symbol(a * b, p) == kronecker_symbol(a, p) * kronecker_symbol(b, p));
}

TEST_CASE("quadratic field arithmetic") {
  const QuadFieldElement w(Rational(-1, 2), Rational(1, 2), -3);  // primitive cube root of unity
  CHECK(w * w * w == QuadFieldElement(1));
  CHECK(w.norm() == 1);
  CHECK((w * w.inverse()) == QuadFieldElement(1));
  const QuadFieldElement m3(Rational(-3));
  auto r = QuadFieldElement(Rational(-3), 0, -3).sqrt();
  REQUIRE(r.has_value());
  CHECK(*r * *r == m3);
  CHECK_FALSE(QuadFieldElement(Rational(2), 0, -3).sqrt().has_value());
  CHECK_THROWS_AS(QuadFieldElement(1, 1, -3) + QuadFieldElement(1, 1, 2), k3ml::FieldMismatch);
  CHECK_THROWS_AS(QuadFieldElement(1, 1, 4), k3ml::DomainError);
  const auto s72 = sqrt_of_integer(72);
  CHECK(s72.b() == 6);
  CHECK(s72.d() == 2);
}

TEST_CASE("quadratic field: x times its conjugate is rational") {
  gen::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const long d = std::vector<long>{-3, -1, 2, 5, -7}[static_cast<std::size_t>(rng.uniform(0, 4))];
    QuadFieldElement x(Rational(rng.uniform(-50, 50), rng.uniform(1, 9)), Rational(rng.uniform(-50, 50), rng.uniform(1, 9)), d);
    const auto p = x * x.conjugate();
    CHECK(p.b() == 0);
    CHECK(p.a() == x.norm());
  }
}

TEST_CASE("polynomial division, gcd and square roots") {
  const PolyQ a = poly({1, -10, 1});
  const PolyQ b = poly({-1, 1});
  const PolyQ p = a * a * b;
  auto [q, r] = p.divrem(a);
  CHECK(r.is_zero());
  CHECK(q == a * b);
  CHECK(gcd(p, a * poly({2, 1})) == a);
  CHECK(p.valuation(a) == 2);
  CHECK((a * a).sqrt() == a);
  CHECK_FALSE(p.sqrt().has_value());
  CHECK(poly({1, 2, 3}).reciprocal(4, "t").to_string() == "t^4 + 2*t^3 + 3*t^2");
  CHECK_THROWS_AS(poly({1}).divrem(PolyQ()), k3ml::DomainError);
}

TEST_CASE("rational functions stay reduced") {
  const PolyQ a = poly({1, -10, 1});
  const RatFuncQ f(a * poly({0, 2}), a * poly({-1, 1}));
  CHECK(f.numerator() == poly({0, 2}));
  CHECK(f.denominator() == poly({-1, 1}));
  CHECK((f - f).is_zero());
  CHECK((f / f) == RatFuncQ(poly({1})));
}

TEST_CASE("squarefree_factor on the discriminant shape") {
  const PolyQ s = poly({0, 1});
  const PolyQ p = Rational(7) * s.pow(12) * poly({-1, 10}).pow(2) * poly({1, -10, 1}).pow(3) * poly({-1, 1}) * poly({-1, 9});
  const Factorization f = squarefree_factor(p);
  CHECK(f.constant == 7 * 100 * 9);
  std::map<std::string, int> got;
  for (const auto& pf : f.factors) {
    CHECK(pf.irreducible);
    got[pf.factor.to_string()] = pf.multiplicity;
  }
  CHECK(got.size() == 5);
  CHECK(got["s"] == 12);
  CHECK(got["s + -1/10"] == 2);
  CHECK(got["s^2 + -10*s + 1"] == 3);
  CHECK(got["s + -1"] == 1);
  CHECK(got["s + -1/9"] == 1);
  CHECK(squarefree_factor(s.pow(3)).factors.size() == 1);
  CHECK(squarefree_factor(poly({5})).factors.empty());
  CHECK_THROWS_AS(squarefree_factor(PolyQ()), k3ml::DomainError);
}

TEST_CASE("squarefree_factor re-multiplies to its input") {
  gen::Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    PolyQ p = PolyQ::constant(Rational(rng.uniform(1, 5) * (rng.uniform(0, 1) ? 1 : -1)));
    const int pieces = static_cast<int>(rng.uniform(1, 4));
    for (int i = 0; i < pieces; ++i) {
      PolyQ piece;
      if (rng.uniform(0, 1) == 0) {
        piece = poly({rng.uniform(-9, 9), rng.uniform(1, 4)});
      } else {
        // x^2 + b x + c with negative discriminant is irreducible over Q.
        const long b = rng.uniform(-6, 6);
        const long c = b * b / 4 + rng.uniform(1, 9);
        piece = poly({c, b, 1});
      }
      p = p * piece.pow(static_cast<unsigned>(rng.uniform(1, 3)));
    }
    const Factorization f = squarefree_factor(p);
    PolyQ back = PolyQ::constant(f.constant);
    for (const auto& pf : f.factors) {
      CHECK(pf.factor.leading() == 1);
      CHECK(pf.factor.degree() <= 2);
      back = back * pf.factor.pow(static_cast<unsigned>(pf.multiplicity));
    }
    CHECK(back == p);
    for (std::size_t i = 0; i < f.factors.size(); ++i)
      for (std::size_t j = i + 1; j < f.factors.size(); ++j)
        CHECK(gcd(f.factors[i].factor, f.factors[j].factor).degree() == 0);
  }
}

TEST_CASE("degree six blocks made of cubics are flagged") {
  const PolyQ q = poly({2, 0, 0, 1}) * poly({3, 0, 0, 1});
  const Factorization f = squarefree_factor(q);
  REQUIRE(f.factors.size() == 1);
  CHECK_FALSE(f.factors[0].irreducible);
}

TEST_CASE("det_exact matches cofactor expansion on random 4x4 matrices") {
  gen::Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::vector<long>> m(4, std::vector<long>(4));
    IntMatrix im(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) {
        m[r][c] = rng.uniform(-9, 9);
        if (rng.uniform(0, 4) == 0) m[r][c] = 0;
        im(r, c) = m[r][c];
      }
    REQUIRE(det_exact(im) == oracle::det_cofactor(m));
  }
}

TEST_CASE("det_exact on fixtures") {
  CHECK(det_exact(IntMatrix::identity(5)) == 1);
  CHECK(det_exact(IntMatrix::diagonal({12, 6})) == 72);
  CHECK(det_exact(read_int_matrix_csv(std::string(K3ML_FIXTURE_DIR) + "/t2.csv")) == 72);
  const IntMatrix ns = read_int_matrix_csv(std::string(K3ML_FIXTURE_DIR) + "/ns20.csv");
  REQUIRE(ns.rows() == 20);
  CHECK_FALSE(ns.is_symmetric());
  const auto asym = ns.asymmetric_positions();
  REQUIRE(asym.size() == 1);
  CHECK(asym[0] == std::pair<std::size_t, std::size_t>{0, 2});
  CHECK(det_exact(ns) == -2160);
  CHECK(det_exact(ns.symmetrized_from_upper()) == -2592);
  CHECK(det_exact(ns.symmetrized_from_lower()) == -1728);
  CHECK_THROWS_AS(det_exact(IntMatrix(2, 3)), k3ml::DomainError);
  CHECK_THROWS_AS(parse_int_matrix_csv("1,2\n3\n"), k3ml::ParseError);
}
