#include "k3ml/counting/point_count.hpp"

#include <sstream>

#include "k3ml/error.hpp"
#include "k3ml/exact/kronecker.hpp"
#include "k3ml/modular/newform.hpp"
#include "k3ml/parallel.hpp"

namespace k3ml::counting {

namespace {

int legendre(long a, long p) { return exact::kronecker_symbol(a, p); }

int pow_sign(int s, int r) { return r == 2 ? s * s : s; }

long mod(long v, long p) {
  v %= p;
  return v < 0 ? v + p : v;
}

}  // namespace

FiniteField::FiniteField(long p, int r) : p_(p), r_(r) {
  if (p < 5 || !modular::is_prime(p)) throw DomainError("FiniteField: p must be a prime >= 5, got " + std::to_string(p));
  if (r != 1 && r != 2) throw DomainError("FiniteField: r must be 1 or 2");
  for (long n = 2; n < p; ++n)
    if (legendre(n, p) == -1) {
      n_ = n;
      break;
    }
}

FiniteField::Elem FiniteField::from_int(long v) const { return {mod(v, p_), 0}; }

FiniteField::Elem FiniteField::mul(Elem x, Elem y) const {
  return {(x.a * y.a + n_ * ((x.b * y.b) % p_)) % p_, (x.a * y.b + x.b * y.a) % p_};
}

int FiniteField::chi(Elem x) const {
  if (r_ == 1) return legendre(x.a, p_);
  const long norm = mod(x.a * x.a - n_ * ((x.b * x.b) % p_), p_);
  return legendre(norm, p_);
}

std::int64_t count_Yprime(const FiniteField& f, unsigned threads) {
  const long q = f.q();
  std::vector<std::int64_t> per_x(static_cast<std::size_t>(q), 0);
  const auto ten = f.from_int(10), four = f.from_int(4);
  parallel_for(static_cast<std::size_t>(q), threads, [&](std::size_t ix) {
    const auto x = f.element(static_cast<long>(ix));
    if (f.is_zero(x)) return;
    std::int64_t n = 0;
    for (long iy = 0; iy < q; ++iy) {
      const auto y = f.element(iy);
      if (f.is_zero(y)) continue;
      // xy z^2 + (x^2 y + x y^2 + x + y - 10xy) z + xy; the roots multiply to 1, so z != 0.
      const auto xy = f.mul(x, y);
      const auto b = f.sub(f.add(f.add(f.mul(xy, f.add(x, y)), x), y), f.mul(ten, xy));
      const auto disc = f.sub(f.mul(b, b), f.mul(four, f.mul(xy, xy)));
      n += 1 + f.chi(disc);
    }
    per_x[ix] = n;
  });
  std::int64_t total = 0;
  for (auto v : per_x) total += v;
  return total;
}

std::int64_t count_Yprime_t_chart(const FiniteField& f, unsigned threads) {
  const long q = f.q();
  std::vector<std::int64_t> per_x(static_cast<std::size_t>(q), 0);
  const auto ten = f.from_int(10), four = f.from_int(4), one = f.from_int(1);
  parallel_for(static_cast<std::size_t>(q), threads, [&](std::size_t ix) {
    const auto x = f.element(static_cast<long>(ix));
    if (f.is_zero(x)) return;
    std::int64_t n = 0;
    for (long iy = 0; iy < q; ++iy) {
      const auto y = f.element(iy);
      if (f.is_zero(y)) continue;
      const auto xy = f.mul(x, y);
      const auto a = f.add(f.add(xy, x), y);
      const auto b = f.sub(f.from_int(0), f.mul(ten, xy));
      const auto c = f.mul(xy, f.add(f.add(x, y), one));
      if (!f.is_zero(a)) {
        const auto disc = f.sub(f.mul(b, b), f.mul(four, f.mul(a, c)));
        n += 1 + f.chi(disc);
        if (f.is_zero(c)) n -= 1;  // t = 0 is one of the roots
      } else if (!f.is_zero(b)) {
        if (!f.is_zero(c)) n += 1;  // single nonzero root -c/b
      } else if (f.is_zero(c)) {
        n += q - 1;  // identically zero in t
      }
    }
    per_x[ix] = n;
  });
  std::int64_t total = 0;
  for (auto v : per_x) total += v;
  return total;
}

std::int64_t trace_from_count(long p, int r, std::int64_t N_Y10) {
  if (p == 2 || p == 3) throw DomainError("trace_from_count: p must differ from 2 and 3");
  const std::int64_t q = r == 2 ? p * p : p;
  return N_Y10 - 1 - q * q - 17 * q - 2 * q * pow_sign(legendre(6, p), r) - q * pow_sign(legendre(-3, p), r);
}

std::pair<bool, bool> check_congruence(long p, int r, std::int64_t N_Y10, std::int64_t A_q) {
  if (p == 2 || p == 3) throw DomainError("check_congruence: p must differ from 2 and 3");
  const std::int64_t q = r == 2 ? p * p : p;
  const int s6 = pow_sign(legendre(6, p), r), s3 = pow_sign(legendre(3, p), r), s2 = pow_sign(legendre(2, p), r),
            sm3 = pow_sign(legendre(-3, p), r);
  const std::int64_t n_rhs = 4 * q - 4 + s3 + s2 - 2 * s6;
  const std::int64_t a_rhs = 3 - q * q + 3 * q - q * (2 * s6 + sm3) + s3 + s2 - 2 * s6;
  return {mod(N_Y10 - n_rhs, 8) == 0, mod(A_q - a_rhs, 8) == 0};
}

CountReport count_report(long p, int r, unsigned threads) {
  const FiniteField f(p, r);
  CountReport c;
  c.p = p;
  c.r = r;
  c.q = f.q();
  c.N_Yprime = count_Yprime(f, threads);
  c.N_Y10 = c.N_Yprime + 20 * c.q - 4;
  c.A_q = trace_from_count(p, r, c.N_Y10);
  c.legendre_6 = legendre(6, p);
  c.legendre_m3 = legendre(-3, p);
  c.legendre_3 = legendre(3, p);
  c.legendre_2 = legendre(2, p);
  return c;
}

DichotomyReport verify_dichotomy(long p_max, long r2_max, unsigned threads, CountBudget budget) {
  if (p_max > budget.r1_max) throw DomainError("verify_dichotomy: p_max " + std::to_string(p_max) + " exceeds the budget " + std::to_string(budget.r1_max));
  if (r2_max > budget.r2_max) throw DomainError("verify_dichotomy: r = 2 bound " + std::to_string(r2_max) + " exceeds the budget " + std::to_string(budget.r2_max));
  DichotomyReport rep;
  for (long p = 5; p <= p_max; ++p) {
    if (!modular::is_prime(p)) continue;
    const auto trace = modular::cm_trace(p);
    for (int r = 1; r <= 2; ++r) {
      if (r == 2 && p > r2_max) break;
      DichotomyRow row;
      row.count = count_report(p, r, threads);
      row.cm_A = r == 1 ? trace.A_p : trace.A_p * trace.A_p - 2 * trace.middle_sign * p * p;
      row.match = row.count.A_q == row.cm_A;
      std::tie(row.cong_N, row.cong_A) = check_congruence(p, r, row.count.N_Y10, row.count.A_q);
      const std::string tag = "p=" + std::to_string(p) + ", r=" + std::to_string(r) + ": ";
      if (!row.match) rep.failures.push_back(tag + "counted A_q " + std::to_string(row.count.A_q) + " != " + std::to_string(row.cm_A));
      if (!row.cong_N) rep.failures.push_back(tag + "N congruence mod 8 fails");
      if (!row.cong_A) rep.failures.push_back(tag + "A congruence mod 8 fails");
      rep.rows.push_back(row);
    }
  }
  return rep;
}

std::string to_csv(const DichotomyReport& report) {
  std::ostringstream os;
  os << "p,r,q,N_Yprime,N_Y10,A_q,cm_A,match,cong_N,cong_A\n";
  for (const auto& row : report.rows) {
    const auto& c = row.count;
    os << c.p << ',' << c.r << ',' << c.q << ',' << c.N_Yprime << ',' << c.N_Y10 << ',' << c.A_q << ',' << row.cm_A << ','
       << (row.match ? "true" : "false") << ',' << (row.cong_N ? "true" : "false") << ',' << (row.cong_A ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace k3ml::counting
