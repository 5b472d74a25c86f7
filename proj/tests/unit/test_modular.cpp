#include <cmath>
#include <numeric>

#include "doctest.h"
#include "k3ml/error.hpp"
#include "k3ml/lattice/eisenstein.hpp"
#include "k3ml/mahler/measure.hpp"
#include "k3ml/modular/newform.hpp"
#include "k3ml/modular/qexpansion.hpp"

using namespace k3ml::modular;

namespace {

// Expands prod (1 - q^{N n}) factor by factor, no pentagonal shortcut.
std::vector<long long> naive_product(const std::vector<std::pair<long, int>>& factors, long len) {
  std::vector<long long> s(static_cast<std::size_t>(len), 0);
  s[0] = 1;
  for (const auto& [N, e] : factors)
    for (int rep = 0; rep < e; ++rep)
      for (long n = 1; N * n < len; ++n)
        for (long i = len - 1; i >= N * n; --i) s[static_cast<std::size_t>(i)] -= s[static_cast<std::size_t>(i - N * n)];
  return s;
}

bool prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("eta expansions") {
  const auto e = eta_q(1, 8);
  CHECK(e.leading_exponent == Rational(1, 24));
  const std::vector<BigInt> expect{1, -1, -1, 0, 0, 1, 0, 1};
  CHECK(e.coefficients == expect);
  CHECK(eta_q(2, 4).leading_exponent == Rational(1, 12));
  const auto f = eta_quotient({{1, 2}, {2, 1}, {4, 1}, {8, 2}}, 30);
  CHECK(f.leading_exponent == 1);
  CHECK(f.coefficients[0] == 1);
  const auto naive = naive_product({{1, 2}, {2, 1}, {4, 1}, {8, 2}}, 30);
  for (std::size_t i = 0; i < 30; ++i) CHECK(f.coefficients[i] == static_cast<long>(naive[i]));
  CHECK_THROWS_AS(eta_q(0, 5), k3ml::DomainError);
  CHECK(e.to_string(6) == "q^(1/24) * (1 - q - q^2 + q^5 + O(q^8))");
}

TEST_CASE("series inverse and powers") {
  const auto e = eta_q(3, 40);
  const auto one = e * inverse(e);
  CHECK(one.leading_exponent == 0);
  CHECK(one.coefficients[0] == 1);
  for (std::size_t i = 1; i < 40; ++i) CHECK(one.coefficients[i] == 0);
  const auto cube = power(e, 3);
  CHECK(cube.leading_exponent == Rational(3, 8));
  const auto back = cube * power(e, -3);
  CHECK(back.leading_exponent == 0);
  CHECK(back.coefficients[0] == 1);
  for (std::size_t i = 1; i < 40; ++i) CHECK(back.coefficients[i] == 0);
  QExpansion two;
  two.coefficients = {2, 1};
  two.precision = 2;
  CHECK_THROWS_AS(inverse(two), k3ml::DomainError);
}

TEST_CASE("the Hauptmodul quotient has leading exponent one half") {
  const auto t = eta_quotient({{1, 6}, {6, 6}, {2, -6}, {3, -6}}, 20);
  CHECK(t.leading_exponent == Rational(1, 2));
  // periodic under tau -> tau + 24: 24 times every exponent is an integer
  CHECK(Rational(t.leading_exponent * 24).get_den() == 1);
}

TEST_CASE("newform coefficients") {
  const auto a = newform_coeffs(20);
  CHECK(a[0] == 1);
  CHECK(a[1] == -2);
  CHECK(a[2] == -2);
  CHECK(a[3] == 4);
  CHECK(a[8] == -5);
  CHECK(a[16] == 2);
  CHECK(a[18] == -34);
  CHECK(a[4] == 0);
  CHECK(a[6] == 0);
  CHECK(a[12] == 0);
  CHECK(a[10] == 14);
  const auto big = newform_coeffs(3000);
  const auto naive = naive_product({{1, 2}, {2, 1}, {4, 1}, {8, 2}}, 3000);
  for (std::size_t i = 0; i < 3000; ++i) REQUIRE(big[i] == naive[i]);
  CHECK_THROWS_AS(newform_coeffs(0), k3ml::DomainError);
}

TEST_CASE("multiplicativity for coprime indices") {
  const auto a = newform_coeffs(90000);
  auto at = [&](long n) { return a[static_cast<std::size_t>(n - 1)]; };
  for (long m = 1; m <= 300; ++m)
    for (long n = 1; n <= 300; ++n)
      if (std::gcd(m, n) == 1) REQUIRE(at(m * n) == at(m) * at(n));
}

TEST_CASE("Euler factor at 3") {
  const auto a = newform_coeffs(59049);
  auto at = [&](long n) { return a[static_cast<std::size_t>(n - 1)]; };
  CHECK(at(3) == -2);
  long prev = 1, cur = 3;
  for (int r = 1; r < 10; ++r) {
    REQUIRE(at(cur * 3) == at(3) * at(cur) - 9 * at(prev));
    prev = cur;
    cur *= 3;
  }
}

TEST_CASE("CM traces") {
  const auto t11 = cm_trace(11);
  CHECK(t11.A_p == 14);
  REQUIRE(t11.representation.has_value());
  CHECK(t11.representation->first == 3);
  CHECK(t11.representation->second == 1);
  CHECK(cm_trace(17).A_p == 2);
  const auto t5 = cm_trace(5);
  CHECK(t5.A_p == 0);
  CHECK(t5.middle_sign == -1);
  CHECK_FALSE(t5.representation.has_value());
  CHECK(cm_trace(3).A_p == -2);
  CHECK_THROWS_AS(cm_trace(2), k3ml::DomainError);
  CHECK_THROWS_AS(cm_trace(15), k3ml::DomainError);
  const auto a = newform_coeffs(1000);
  for (long p = 3; p <= 1000; ++p) {
    if (!prime(p)) continue;
    const auto r = cm_trace(p);
    REQUIRE(a[static_cast<std::size_t>(p - 1)] == r.A_p);
    CHECK(r.A_p % 2 == 0);
    CHECK(std::abs(r.A_p) <= 2 * p);
    if (p % 8 == 1 || p % 8 == 3) {
      REQUIRE(r.representation.has_value());
      const auto [x, y] = *r.representation;
      CHECK(x * x + 2 * y * y == p);
      CHECK(r.middle_sign == 1);
    } else {
      CHECK(r.A_p == 0);
      CHECK(r.middle_sign == -1);
    }
  }
}

TEST_CASE("evaluating t") {
  const std::complex<double> tau(0.0, 1.0 / std::sqrt(2.0));
  const auto t = eval_t(tau);
  CHECK(std::abs(t.t - std::complex<double>(5 - 2 * std::sqrt(6.0), 0)) < 1e-12);
  CHECK(std::abs(eval_k(tau) - 10.0) < 1e-10);
  CHECK(t.truncation_bound < 1e-30);
  const auto t2 = eval_t({0.0, 2.0}).t;
  CHECK(t2.real() > 0);
  CHECK(t2.real() < 1);
  CHECK(std::abs(t2.imag()) < 1e-300);
  for (std::complex<double> z : {std::complex<double>(0.1, 0.6), std::complex<double>(-0.37, 1.1)})
    CHECK(std::abs(eval_t(z + 24.0).t - eval_t(z).t) < 1e-12 * std::abs(eval_t(z).t));
  CHECK_THROWS_AS(eval_t({0.0, -1.0}), k3ml::DomainError);
  CHECK_THROWS_AS(eval_t({0.0, 1.0}, 8), k3ml::DomainError);
}

TEST_CASE("inverting k on the imaginary axis") {
  CHECK(std::abs(invert_k(10.0, 1e-12) - std::complex<double>(0, 1 / std::sqrt(2.0))) < 1e-8);
  const double k_i = eval_k({0.0, 1.0}).real();
  CHECK(std::abs(invert_k(k_i, 1e-12).imag() - 1.0) < 1e-10);
  double prev = eval_k({0.0, kInvertLower}).real();
  CHECK(std::abs(prev - 6.0) < 1e-12);
  for (int i = 1; i <= 400; ++i) {
    const double y = kInvertLower + (kInvertUpper - kInvertLower) * i / 400.0;
    const double v = eval_k({0.0, y}).real();
    REQUIRE(v > prev);
    prev = v;
  }
  // k is symmetric under y -> 1/(6y), so it is not monotone below 1/sqrt6
  CHECK(std::abs(eval_k({0.0, 0.3}).real() - eval_k({0.0, 1.0 / 1.8}).real()) < 1e-9);
  CHECK_THROWS_AS(invert_k(5.0), k3ml::DomainError);
  CHECK_THROWS_AS(invert_k(1e7), k3ml::DomainError);
}

TEST_CASE("Eisenstein sum at the tau solving k = 12") {
  k3ml::lattice::EisensteinSpec spec;
  spec.tau = invert_k(12.0, 1e-13);
  CHECK(std::abs(eval_k(spec.tau) - 12.0) < 1e-10);
  const double e = k3ml::lattice::eisenstein_mahler(spec).value;
  CHECK(std::abs(e - k3ml::mahler::mahler_family(12, 1e-9).value) < 1e-5);
}

TEST_CASE("partial sums of L(f,3)") {
  const auto big = lf3_partial(100000);
  const double S = k3ml::lattice::central_lattice_value(4096).value;
  CHECK(std::abs(big.value - S) < 2e-3);
  CHECK(std::abs(big.value - S) < big.tail_bound);
  const auto half = lf3_partial(50000);
  CHECK(std::abs(big.value - half.value) < half.tail_bound);
  CHECK(big.value > 0);
  double prev = lf3_partial(100).value;
  for (long n : {1000L, 10000L}) {
    const double v = lf3_partial(n).value;
    CHECK(v > 0);
    CHECK(std::abs(v - big.value) < std::abs(prev - big.value) + 1e-12);
    prev = v;
  }
  CHECK_THROWS_AS(lf3_partial(50), k3ml::DomainError);
}
