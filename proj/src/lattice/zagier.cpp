#include "k3ml/lattice/zagier.hpp"

#include <cmath>

#include "k3ml/error.hpp"

namespace k3ml::lattice {

namespace {

LatticeSumResult sum_of(QuadForm form, std::vector<Monomial> num, double s, long radius, const LatticeOptions& opt) {
  LatticeSumSpec spec;
  spec.form = form;
  spec.numerator = std::move(num);
  spec.s = s;
  spec.radius = radius;
  return lattice_sum(spec, opt);
}

// Adds the number of (k,m) != 0 with a k^2 + c m^2 = n into counts[n] with the given sign.
void count_form(long a, long c, long n_max, int sign, std::vector<std::int64_t>& counts) {
  for (long k = 0; a * k * k <= n_max; ++k)
    for (long m = 0; a * k * k + c * m * m <= n_max; ++m) {
      if (k == 0 && m == 0) continue;
      const int mult = (k ? 2 : 1) * (m ? 2 : 1);
      counts[static_cast<std::size_t>(a * k * k + c * m * m)] += sign * mult;
    }
}

}  // namespace

ZagierAResult zagier_A(double s, long radius, const LatticeOptions& opt) {
  if (!(s > 1.0)) throw DomainError("zagier_A: need s > 1");
  ZagierAResult r;
  r.k18 = sum_of({1, 0, 18}, {{0, 0, 1}}, s, radius, opt);
  r.m9 = sum_of({2, 0, 9}, {{0, 0, 1}}, s, radius, opt);
  r.value = r.k18.value - r.m9.value;
  r.tail_bound = r.k18.tail_bound + r.m9.tail_bound;
  return r;
}

std::vector<std::int64_t> zagier_A_coefficients(long n_max) {
  if (n_max < 0) throw DomainError("zagier_A_coefficients: n_max must be >= 0");
  std::vector<std::int64_t> c(static_cast<std::size_t>(n_max) + 1, 0);
  count_form(1, 18, n_max, 1, c);
  count_form(2, 9, n_max, -1, c);
  return c;
}

ZagierBResult zagier_B_identity(double s, long radius, const LatticeOptions& opt) {
  if (!(s >= 3.0)) throw DomainError("zagier_B_identity: need s >= 3");
  ZagierBResult r;
  r.k18 = sum_of({1, 0, 18}, {{2, 0, 1}, {0, 2, -18}}, s, radius, opt);
  r.m9 = sum_of({2, 0, 9}, {{0, 2, 9}, {2, 0, -2}}, s, radius, opt);
  r.base = sum_of({2, 0, 1}, {{0, 2, 1}, {2, 0, -2}}, s, radius, opt);
  r.factor = 1.0 + 2.0 * std::pow(3.0, -s) + 27.0 * std::pow(3.0, -2.0 * s);
  r.lhs = r.k18.value + r.m9.value;
  r.rhs = r.factor * r.base.value;
  r.tail_bound = r.k18.tail_bound + r.m9.tail_bound + r.factor * r.base.tail_bound;
  return r;
}

std::int64_t r_n(std::int64_t n) {
  if (n < 1) throw DomainError("r_n: need n >= 1");
  std::int64_t count = 0;
  for (std::int64_t m = 0; 2 * m * m <= n; ++m) {
    const std::int64_t rest = n - 2 * m * m;
    auto k = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(rest))));
    while (k * k > rest) --k;
    while ((k + 1) * (k + 1) <= rest) ++k;
    if (k * k != rest) continue;
    count += (k ? 2 : 1) * (m ? 2 : 1);
  }
  return count / 2;
}

std::vector<std::int64_t> r_n_table(long n_max) {
  if (n_max < 0) throw DomainError("r_n_table: n_max must be >= 0");
  std::vector<std::int64_t> c(static_cast<std::size_t>(n_max) + 1, 0);
  count_form(1, 2, n_max, 1, c);
  for (auto& x : c) x /= 2;
  return c;
}

}  // namespace k3ml::lattice
