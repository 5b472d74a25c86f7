#include <cmath>
#include <numeric>

#include "doctest.h"
#include "k3ml/error.hpp"
#include "k3ml/exact/kronecker.hpp"
#include "k3ml/exact/quad_field.hpp"
#include "k3ml/lattice/dirichlet.hpp"
#include "k3ml/lattice/eisenstein.hpp"
#include "k3ml/lattice/kernel.hpp"
#include "k3ml/lattice/zagier.hpp"
#include "k3ml/mahler/measure.hpp"
#include "oracles/constants.hpp"
#include "oracles/gen.hpp"

using namespace k3ml::lattice;

namespace {

constexpr double kPi = 3.141592653589793;

// Plain box loop in long double, no shells, no compensation.
double brute_lattice(long a, long b, long c, const std::vector<Monomial>& num, int s, long radius) {
  long double total = 0;
  for (long k = -radius; k <= radius; ++k)
    for (long m = -radius; m <= radius; ++m) {
      if (k == 0 && m == 0) continue;
      long double n = 0;
      for (const auto& t : num) n += t.coeff * std::pow(static_cast<long double>(k), t.k_exp) * std::pow(static_cast<long double>(m), t.m_exp);
      const long double q = static_cast<long double>(a * k * k + b * k * m + c * m * m);
      total += n / std::pow(q, s);
    }
  return static_cast<double>(total);
}

// Brute-force sum of 3x^2 - y^2 over |z|^6 for z = m j tau + n.
double brute_eisenstein(std::complex<double> tau, long radius) {
  const int js[] = {1, 2, 3, 6};
  const int ws[] = {-4, 16, -36, 144};
  long double total = 0;
  for (int d = 0; d < 4; ++d)
    for (long m = -radius; m <= radius; ++m)
      for (long n = -radius; n <= radius; ++n) {
        if (m == 0 && n == 0) continue;
        const std::complex<long double> z = static_cast<long double>(m * js[d]) * std::complex<long double>(tau) + static_cast<long double>(n);
        const std::complex<long double> inv = 1.0L / (z * z * z * std::conj(z));
        total += ws[d] * (2.0L * inv.real() + 1.0L / std::norm(z) / std::norm(z));
      }
  return static_cast<double>(total * tau.imag() / (8.0L * kPi * kPi * kPi));
}

long divisor_chi8_sum(long n) {
  long s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    s += k3ml::exact::kronecker_symbol(-8, d);
    if (d * d != n) s += k3ml::exact::kronecker_symbol(-8, n / d);
  }
  return s;
}

LatticeOptions raw_only() {
  LatticeOptions o;
  o.tail_correction = false;
  return o;
}

}  // namespace

TEST_CASE("Dirichlet characters") {
  const auto chi = DirichletChar::kronecker(-3);
  CHECK(chi.modulus() == 3);
  CHECK(chi(1) == 1);
  CHECK(chi(2) == -1);
  CHECK(chi(3) == 0);
  CHECK(chi(-1) == -1);
  const auto chi8 = DirichletChar::kronecker(-8);
  CHECK(chi8(1) == 1);
  CHECK(chi8(3) == 1);
  CHECK(chi8(5) == -1);
  CHECK(chi8(7) == -1);
  CHECK(DirichletChar::kronecker(24)(5) == 1);
  CHECK(DirichletChar::kronecker(24)(7) == -1);
  CHECK_FALSE(chi.principal());
  CHECK(DirichletChar::trivial().principal());
  CHECK_THROWS_AS(DirichletChar(4, {0, 1, 1, -1}), k3ml::DomainError);
  CHECK_THROWS_AS(DirichletChar(5, {0, 1, -1, 1, 1}), k3ml::DomainError);
  CHECK_THROWS_AS(DirichletChar(3, {0, 1}), k3ml::DomainError);
  CHECK_THROWS_AS(DirichletChar::kronecker(2), k3ml::DomainError);
  CHECK_THROWS_AS(DirichletChar::kronecker(-5), k3ml::DomainError);
  CHECK(DirichletChar::kronecker(9).principal());
}

TEST_CASE("Dirichlet L-values against independent series") {
  CHECK(std::abs(dirichlet_L(DirichletChar::kronecker(-3), 2.0).value - oracle::l_chi_m3_2()) < 1e-13);
  CHECK(std::abs(dirichlet_L(DirichletChar::trivial(), 2.0).value - kPi * kPi / 6) < 1e-14);
  CHECK(std::abs(dirichlet_L(DirichletChar::trivial(), 3.0).value - oracle::zeta3()) < 1e-13);
  CHECK(std::abs(2 * dirichlet_L(DirichletChar::kronecker(24), 2.0).value - kPi * kPi / (2 * std::sqrt(6.0))) < 1e-13);
  CHECK(std::abs(dirichlet_L(DirichletChar::kronecker(-4), 1.0).value - kPi / 4) < 1e-13);
  CHECK(std::abs(dirichlet_L(DirichletChar::kronecker(-3), 2.0).value - 0.781302412896) < 1e-12);
  CHECK_THROWS_AS(dirichlet_L(DirichletChar::trivial(), 1.0), k3ml::DomainError);
  CHECK_THROWS_AS(dirichlet_L(DirichletChar::kronecker(-3), 0.0), k3ml::DomainError);
}

TEST_CASE("d3 by character sum and lattice sum") {
  const auto d = d3();
  CHECK(d.difference < 1e-8);
  CHECK(std::abs(d.value - oracle::d3_oracle()) < 1e-12);
  CHECK(std::abs(d.value - 0.3230659472) < 1e-10);
  const double smyth = k3ml::mahler::mahler_measure(k3ml::mahler::parse_laurent("1 + x + y"), 1e-7).value;
  CHECK(std::abs(d.value - smyth) < 1e-4);
}

TEST_CASE("shell summation equals a plain box loop") {
  const std::vector<Monomial> s_num{{2, 0, 1}, {0, 2, -2}};
  CHECK(std::abs(lattice_sum({{1, 0, 2}, s_num, 3.0, 60}, raw_only()).raw - brute_lattice(1, 0, 2, s_num, 3, 60)) < 1e-14);
  const std::vector<Monomial> mixed{{1, 1, 3}, {0, 0, 2}, {3, 1, -1}};
  CHECK(std::abs(lattice_sum({{2, 1, 3}, mixed, 4.0, 40}, raw_only()).raw - brute_lattice(2, 1, 3, mixed, 4, 40)) < 1e-14);
  const auto r = lattice_sum({{1, 0, 1}, {{0, 0, 1}}, 2.0, 10}, raw_only());
  CHECK(r.points == 21 * 21 - 1);
}

TEST_CASE("non-integer exponents use the real-power path") {
  const std::vector<Monomial> one{{0, 0, 1}};
  long double total = 0;
  for (long k = -30; k <= 30; ++k)
    for (long m = -30; m <= 30; ++m)
      if (k || m) total += std::pow(static_cast<long double>(k * k + 3 * m * m), -2.5L);
  CHECK(std::abs(lattice_sum({{1, 0, 3}, one, 2.5, 30}, raw_only()).raw - static_cast<double>(total)) < 1e-14);
}

TEST_CASE("divergent and invalid lattice specs are rejected") {
  CHECK_THROWS_AS(lattice_sum({{1, 0, 1}, {{0, 0, 1}}, 1.0, 10}), k3ml::DomainError);
  CHECK_THROWS_AS(lattice_sum({{1, 0, 2}, {{2, 0, 1}}, 2.0, 10}), k3ml::DomainError);
  CHECK_THROWS_AS(lattice_sum({{1, 3, 1}, {{0, 0, 1}}, 2.0, 10}), k3ml::DomainError);
  CHECK_THROWS_AS(lattice_sum({{1, 0, 1}, {{0, 0, 1}}, 2.0, 0}), k3ml::DomainError);
  CHECK_THROWS_AS(parse_numerator("k^(-1)"), k3ml::DomainError);
  CHECK_THROWS_AS(parse_numerator("k + z"), k3ml::ParseError);
  const auto n = parse_numerator("k^2 - 2*m^2");
  CHECK(numerator_degree(n) == 2);
  CHECK(parse_numerator(numerator_to_string(n)).size() == 2);
}

TEST_CASE("radius doubling stays within the tail bound") {
  const std::vector<LatticeSumSpec> specs{
      {{1, 0, 2}, {{2, 0, 1}, {0, 2, -2}}, 3.0, 512},
      {{3, 0, 1}, {{0, 0, 1}}, 2.0, 512},
      {{1, 0, 18}, {{2, 0, 1}, {0, 2, -18}}, 3.0, 512},
      {{2, 1, 5}, {{1, 1, 1}}, 2.5, 512}};
  for (auto spec : specs) {
    LatticeSumResult prev;
    for (long r : {512L, 1024L, 2048L}) {
      spec.radius = r;
      const auto cur = lattice_sum(spec);
      if (r > 512) {
        CHECK(std::abs(cur.raw - prev.raw) < prev.tail_bound);
        CHECK(std::abs(cur.value - prev.value) < prev.tail_bound);
        // the corrected values move far less than the raw ones
        CHECK(std::abs(cur.value - prev.value) <= std::abs(cur.raw - prev.raw));
      }
      prev = cur;
    }
  }
}

TEST_CASE("scalar and AVX2 kernels agree") {
  if (!avx2_available()) return;
  gen::Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    LineSpec l;
    l.q2 = static_cast<double>(rng.uniform(1, 20));
    l.q1 = static_cast<double>(rng.uniform(-50, 50));
    l.q0 = l.q1 * l.q1 / (4 * l.q2) + rng.real(0.5, 200.0);
    l.num_degree = static_cast<int>(rng.uniform(0, 4));
    l.numerators = static_cast<int>(rng.uniform(1, 2));
    for (auto& row : l.num)
      for (int d = 0; d <= l.num_degree; ++d) row[static_cast<std::size_t>(d)] = rng.real(-5, 5);
    if (rng.uniform(0, 3) == 0) {
      l.real_exponent = 0.5 * l.num_degree + rng.real(1.1, 3.0);
    } else {
      l.int_exponent = static_cast<int>(l.num_degree / 2 + rng.uniform(1, 4));
    }
    l.t_begin = rng.uniform(-3000, 3000);
    l.t_end = l.t_begin + rng.uniform(-1, 700);
    const auto a = line_sum_scalar(l);
    const auto b = line_sum_avx2(l);
    for (int i = 0; i < l.numerators; ++i) {
      const double x = a.value[static_cast<std::size_t>(i)], y = b.value[static_cast<std::size_t>(i)];
      CHECK(std::abs(x - y) <= 1e-13 * std::max(1e-300, std::abs(x)) + 1e-300);
    }
  }
  LatticeSumSpec spec{{1, 0, 2}, {{2, 0, 1}, {0, 2, -2}}, 3.0, 1024};
  LatticeOptions s, v;
  s.kernel = Kernel::scalar;
  v.kernel = Kernel::avx2;
  CHECK(std::abs(lattice_sum(spec, s).value - lattice_sum(spec, v).value) < 1e-15);
}

TEST_CASE("lattice sums do not depend on the thread count") {
  LatticeSumSpec spec{{1, 0, 2}, {{2, 0, 1}, {0, 2, -2}}, 3.0, 700};
  LatticeOptions o;
  o.threads = 1;
  const double ref = lattice_sum(spec, o).value;
  for (unsigned t : {2u, 3u, 8u}) {
    o.threads = t;
    CHECK(lattice_sum(spec, o).value == ref);
  }
  EisensteinSpec e;
  e.radius = 300;
  o.threads = 1;
  const double eref = eisenstein_mahler(e, o).value;
  o.threads = 5;
  CHECK(eisenstein_mahler(e, o).value == eref);
}

TEST_CASE("swapping k and m leaves the central sum unchanged") {
  const auto a = lattice_sum({{1, 0, 2}, {{2, 0, 1}, {0, 2, -2}}, 3.0, 2048});
  const auto b = lattice_sum({{2, 0, 1}, {{0, 2, 1}, {2, 0, -2}}, 3.0, 2048});
  CHECK(std::abs(a.value - b.value) < 1e-15);
  const auto S = central_lattice_value(4096);
  CHECK(S.value > 0);
  CHECK(std::abs(S.value - 0.5 * a.value) < 1e-12);
}

TEST_CASE("r_n is the divisor sum of chi_-8") {
  CHECK(r_n(1) == 1);
  CHECK(r_n(2) == 1);
  CHECK(r_n(3) == 2);
  CHECK_THROWS_AS(r_n(0), k3ml::DomainError);
  const auto table = r_n_table(100000);
  for (long n = 1; n <= 100000; ++n) REQUIRE(table[static_cast<std::size_t>(n)] == divisor_chi8_sum(n));
  gen::Rng rng(8);
  for (int i = 0; i < 2000; ++i) {
    const long n = rng.uniform(1, 100000);
    REQUIRE(r_n(n) == table[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("A(s): coefficient identity and the value at s = 2") {
  const auto c = zagier_A_coefficients(10000);
  const auto r = r_n_table(10000);
  CHECK(c[0] == 0);
  for (long n = 1; n <= 10000; ++n)
    REQUIRE(c[static_cast<std::size_t>(n)] == 2 * k3ml::exact::kronecker_symbol(-3, n) * r[static_cast<std::size_t>(n)]);
  const auto a2 = zagier_A(2.0, 4096);
  CHECK(std::abs(a2.value - kPi * kPi / (2 * std::sqrt(6.0)) * oracle::l_chi_m3_2()) < 1e-6);
  CHECK(std::abs(a2.value - 1.57403103) < 1e-8);
  const auto half = zagier_A(2.0, 2048);
  CHECK(std::abs(a2.value - half.value) < half.tail_bound);
  // truncated Dirichlet series of the coefficients
  double series = 0;
  for (long n = 10000; n >= 1; --n) series += static_cast<double>(c[static_cast<std::size_t>(n)]) / (static_cast<double>(n) * n * n * n);
  CHECK(std::abs(zagier_A(4.0, 4096).value - series) < 1e-10);
}

TEST_CASE("B identity at s = 3 and s = 4") {
  for (double s : {3.0, 4.0}) {
    const auto b = zagier_B_identity(s, 4096);
    CHECK(std::abs(b.lhs - b.rhs) < 1e-8);
    CHECK(std::abs(b.lhs - b.rhs) < b.tail_bound);
  }
  const auto b3 = zagier_B_identity(3.0, 512);
  CHECK(std::abs(b3.factor - 10.0 / 9.0) < 1e-15);
  CHECK(std::abs(b3.base.value - 2 * central_lattice_value(512).value) < 1e-15);
  CHECK_THROWS_AS(zagier_B_identity(2.0, 64), k3ml::DomainError);
}

TEST_CASE("Eisenstein sum against a brute-force complex loop") {
  const std::complex<double> tau(0.0, 1.0 / std::sqrt(2.0));
  LatticeOptions o = raw_only();
  CHECK(std::abs(eisenstein_mahler({tau, {{{1, -4}, {2, 16}, {3, -36}, {6, 144}}}, 64}, o).raw - brute_eisenstein(tau, 64)) < 1e-13);
  EisensteinSpec e;
  e.radius = 64;
  e.tau = {0.3, 0.9};
  CHECK_THROWS_AS(eisenstein_mahler(e), k3ml::InternalError);
  e.tau = {0.0, -0.7};
  CHECK_THROWS_AS(eisenstein_mahler(e), k3ml::DomainError);
  e.tau = {0.0, 0.7};
  e.radius = 10;
  CHECK_THROWS_AS(eisenstein_mahler(e), k3ml::DomainError);
}

TEST_CASE("m(P_10) from the Eisenstein sum and its specializations") {
  const EisensteinSpec spec;
  const auto e = eisenstein_mahler(spec);
  CHECK(std::abs(e.imaginary_residue) < 1e-12);
  const auto fam10 = k3ml::mahler::mahler_family(10, 1e-9);
  CHECK(std::abs(e.value - fam10.value) < 1e-5);
  const auto half = eisenstein_half_lattice(spec);
  CHECK(std::abs(2 * half.raw - e.raw) < 1e-14);
  const auto sp = specialized_m10(4096);
  CHECK(std::abs(sp.value - e.value) < 1e-8);
  const double d = d3().value;
  const double fam2 = k3ml::mahler::mahler_family(2, 1e-9).value;
  CHECK(std::abs(sp.value - (2 * d + 3 * fam2)) < 1e-4);
  const double S = central_lattice_value(4096).value;
  CHECK(std::abs(sp.value - (2 * d + 48 * std::sqrt(2.0) * S / (kPi * kPi * kPi))) < 1e-6);
}

TEST_CASE("72^(3/2) / 9 = 48 sqrt 2 exactly") {
  using k3ml::exact::QuadFieldElement;
  using k3ml::exact::Rational;
  const auto root = k3ml::exact::sqrt_of_integer(72);
  const auto lhs = QuadFieldElement(Rational(72)) * root / QuadFieldElement(Rational(9));
  CHECK(lhs == QuadFieldElement(Rational(0), Rational(48), 2));
}
