#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace k3ml::counting {

// F_q with q = p^r, r in {1,2}; F_{p^2} = F_p[w]/(w^2 - nonresidue).
class FiniteField {
 public:
  struct Elem {
    long a = 0, b = 0;  // a + b w
    friend bool operator==(const Elem&, const Elem&) = default;
  };

  // Throws DomainError unless p is a prime >= 5 and r is 1 or 2.
  FiniteField(long p, int r);

  long p() const { return p_; }
  int r() const { return r_; }
  long q() const { return r_ == 1 ? p_ : p_ * p_; }
  long nonresidue() const { return n_; }  // least quadratic non-residue mod p (used when r = 2)

  // Elements indexed 0..q-1 as a + b p.
  Elem element(long index) const { return {index % p_, index / p_}; }
  Elem from_int(long v) const;
  Elem add(Elem x, Elem y) const { return {(x.a + y.a) % p_, (x.b + y.b) % p_}; }
  Elem sub(Elem x, Elem y) const { return {(x.a - y.a + p_) % p_, (x.b - y.b + p_) % p_}; }
  Elem mul(Elem x, Elem y) const;
  bool is_zero(Elem x) const { return x.a == 0 && x.b == 0; }
  // Quadratic character of F_q (0 at 0): Legendre symbol of the norm.
  int chi(Elem x) const;

 private:
  long p_;
  int r_;
  long n_ = 0;
};

// #{(x,y,z) in (F_q^*)^3 : xyz(x+y+z) + (xy+xz+yz) - 10xyz = 0}, solving the quadratic in z.
std::int64_t count_Yprime(const FiniteField& f, unsigned threads = 0);

// Same set in the chart z = 1, t free: (xy+x+y) t^2 - 10xy t + xy(x+y+1) = 0 with x, y, t != 0.
std::int64_t count_Yprime_t_chart(const FiniteField& f, unsigned threads = 0);

struct CountReport {
  long p = 0;
  int r = 1;
  long q = 0;
  std::int64_t N_Yprime = 0;
  std::int64_t N_Y10 = 0;  // N_Yprime + 20q - 4
  std::int64_t A_q = 0;
  int legendre_6 = 0, legendre_m3 = 0, legendre_3 = 0, legendre_2 = 0;
};

CountReport count_report(long p, int r, unsigned threads = 0);

// A_q = N - 1 - q^2 - 17q - 2q (6/p)^r - q (-3/p)^r.
std::int64_t trace_from_count(long p, int r, std::int64_t N_Y10);

// (N congruence holds, A congruence holds), both mod 8.
std::pair<bool, bool> check_congruence(long p, int r, std::int64_t N_Y10, std::int64_t A_q);

struct DichotomyRow {
  CountReport count;
  std::int64_t cm_A = 0;  // r = 1: cm_trace(p).A_p; r = 2: A_p^2 - 2 sign p^2
  bool match = false;
  bool cong_N = false, cong_A = false;
};

struct CountBudget {
  long r1_max = 97;
  long r2_max = 7;
};

struct DichotomyReport {
  std::vector<DichotomyRow> rows;
  std::vector<std::string> failures;  // "p=..., r=...: ..." per mismatch
  bool ok() const { return failures.empty(); }
};

// All primes 5 <= p <= p_max with r = 1, plus r = 2 for p <= min(p_max, r2_max).
// Throws DomainError when p_max exceeds budget.r1_max.
DichotomyReport verify_dichotomy(long p_max, long r2_max = 7, unsigned threads = 0, CountBudget budget = {});

// Header "p,r,q,N_Yprime,N_Y10,A_q,cm_A,match,cong_N,cong_A" and one line per row.
std::string to_csv(const DichotomyReport& report);

}  // namespace k3ml::counting
