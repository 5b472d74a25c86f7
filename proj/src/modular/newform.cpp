#include "k3ml/modular/newform.hpp"

#include <cmath>

#include "k3ml/error.hpp"
#include "k3ml/parallel.hpp"

namespace k3ml::modular {

namespace {

constexpr double kPi = 3.141592653589793;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InternalError("newform_coeffs: int64 overflow");
  return r;
}

// In place: series *= prod_{n >= 1} (1 - q^{N n}).
void times_euler_product(std::vector<std::int64_t>& s, long N) {
  std::vector<std::pair<long, int>> terms;  // (exponent, sign), exponent > 0
  const long n = static_cast<long>(s.size());
  for (long k = 1;; ++k) {
    const long e1 = N * (k * (3 * k - 1) / 2), e2 = N * (k * (3 * k + 1) / 2);
    if (e1 >= n) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    terms.push_back({e1, sign});
    if (e2 < n) terms.push_back({e2, sign});
  }
  for (long i = n - 1; i >= 1; --i) {
    std::int64_t acc = s[static_cast<std::size_t>(i)];
    for (const auto& [e, sign] : terms) {
      if (e > i) continue;
      const std::int64_t v = s[static_cast<std::size_t>(i - e)];
      acc = checked_add(acc, sign > 0 ? v : -v);
    }
    s[static_cast<std::size_t>(i)] = acc;
  }
}

std::complex<double> euler_product(std::complex<double> x, int terms) {
  std::complex<double> p = 1.0, xn = 1.0;
  for (int n = 1; n <= terms; ++n) {
    xn *= x;
    p *= 1.0 - xn;
  }
  return p;
}

}  // namespace

std::vector<std::int64_t> newform_coeffs(long n_max) {
  if (n_max < 1) throw DomainError("newform_coeffs: n_max must be >= 1");
  // f = q * prod over eta factors; a_n is the coefficient of q^{n-1} in the product.
  std::vector<std::int64_t> s(static_cast<std::size_t>(n_max), 0);
  s[0] = 1;
  for (long N : {1L, 1L, 2L, 4L, 8L, 8L}) times_euler_product(s, N);
  return s;
}

bool is_prime(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

TraceRecord cm_trace(long p) {
  if (p == 2 || !is_prime(p)) throw DomainError("cm_trace: p must be an odd prime, got " + std::to_string(p));
  TraceRecord r;
  r.p = p;
  const long residue = p % 8;
  if (residue == 1 || residue == 3) {
    for (long b = 0; 2 * b * b <= p; ++b) {
      const long rest = p - 2 * b * b;
      long a = std::lround(std::sqrt(static_cast<double>(rest)));
      while (a * a > rest) --a;
      while ((a + 1) * (a + 1) <= rest) ++a;
      if (a * a == rest) {
        r.representation = std::make_pair(a, b);
        break;
      }
    }
    if (!r.representation) throw InternalError("cm_trace: no representation p = a^2 + 2b^2 for p = " + std::to_string(p));
    const auto [a, b] = *r.representation;
    r.A_p = 2 * (a * a - 2 * b * b);
    r.middle_sign = 1;
  } else {
    r.A_p = 0;
    r.middle_sign = -1;
  }
  return r;
}

TValue eval_t(std::complex<double> tau, int terms) {
  if (!(tau.imag() > 0)) throw DomainError("eval_t: need Im tau > 0");
  if (terms < 16) throw DomainError("eval_t: need terms >= 16");
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> q = std::exp(2.0 * kPi * i * tau);
  const std::complex<double> q2 = q * q, q3 = q2 * q, q6 = q3 * q3;
  // Leading exponent (1 + 6 - 2 - 3)/24 * 6 = 1/2, i.e. exp(pi i tau).
  const std::complex<double> ratio = euler_product(q, terms) * euler_product(q6, terms) /
                                     (euler_product(q2, terms) * euler_product(q3, terms));
  TValue out;
  out.t = std::exp(kPi * i * tau) * std::pow(ratio, 6);
  double eps = 0;
  const double aq = std::abs(q);
  for (int N : {1, 2, 3, 6}) {
    const double x = std::pow(aq, N);
    eps += 2.0 * std::pow(x, terms + 1) / (1.0 - x);
  }
  out.truncation_bound = std::abs(out.t) * std::expm1(6.0 * eps);
  return out;
}

std::complex<double> eval_k(std::complex<double> tau, int terms) {
  const auto t = eval_t(tau, terms).t;
  return t + 1.0 / t;
}

std::complex<double> invert_k(double k, double tol) {
  if (!(tol > 0)) throw DomainError("invert_k: tol must be positive");
  auto kk = [](double y) { return eval_k({0.0, y}).real(); };
  const double k_max = kk(kInvertUpper);
  if (!(k > 6.0) || k > k_max)
    throw DomainError("invert_k: k = " + std::to_string(k) + " outside (6, " + std::to_string(k_max) + "]");
  double lo = kInvertLower, hi = kInvertUpper;
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    const double v = kk(mid);
    if (std::abs(v - k) <= tol) break;
    if (v < k)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 4e-16 * hi) break;
  }
  return {0.0, mid};
}

PartialL lf3_partial(long n_max) {
  if (n_max < 100) throw DomainError("lf3_partial: n_max must be >= 100");
  const auto a = newform_coeffs(n_max);
  CompensatedSum acc;
  for (long n = n_max; n >= 1; --n) {
    const double x = static_cast<double>(n);
    acc.add(static_cast<double>(a[static_cast<std::size_t>(n - 1)]) / (x * x * x));
  }
  PartialL r;
  r.value = acc.value();
  r.n_max = n_max;
  r.tail_bound = (std::log(static_cast<double>(n_max)) + 3.0) / static_cast<double>(n_max);
  return r;
}

}  // namespace k3ml::modular
