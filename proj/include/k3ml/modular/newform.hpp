#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace k3ml::modular {

// a_1..a_{n_max} of eta(z)^2 eta(2z) eta(4z) eta(8z)^2 (index 0 holds a_1).
// Int64 with overflow checks; throws InternalError on overflow.
std::vector<std::int64_t> newform_coeffs(long n_max);

struct TraceRecord {
  long p = 0;
  long A_p = 0;
  int middle_sign = 0;  // sign of lambda_1 lambda_2 / p^2
  std::optional<std::pair<long, long>> representation;  // p = a^2 + 2 b^2, a, b >= 0
};

bool is_prime(long n);

// p = 3 or p = 1, 3 mod 8: p = a^2 + 2b^2, A_p = 2(a^2 - 2b^2), middle sign +1.
// p = 5, 7 mod 8: A_p = 0, middle sign -1. Throws DomainError unless p is an odd prime.
TraceRecord cm_trace(long p);

struct TValue {
  std::complex<double> t;
  double truncation_bound = 0;
};

// t = (eta(tau) eta(6 tau) / (eta(2 tau) eta(3 tau)))^6 by truncated products with `terms`
// factors each. Throws DomainError for Im tau <= 0 or terms < 16.
TValue eval_t(std::complex<double> tau, int terms = 64);

// k(tau) = t + 1/t.
std::complex<double> eval_k(std::complex<double> tau, int terms = 64);

// k(i y) is minimal (= 6) at y = 1/sqrt6 and strictly increasing above it.
constexpr double kInvertLower = 0.4082482904638631;
constexpr double kInvertUpper = 3.0;

// tau = i y with y in [1/sqrt6, 3] and k(i y) = k, by bisection.
// Throws DomainError when k is outside (6, k(3i)].
std::complex<double> invert_k(double k, double tol = 1e-12);

struct PartialL {
  double value = 0;
  double tail_bound = 0;  // (log n_max + 3) / n_max, from |a_n| <= d(n) n
  long n_max = 0;
};

// sum_{n <= n_max} a_n / n^3, n_max >= 100.
PartialL lf3_partial(long n_max);

}  // namespace k3ml::modular
