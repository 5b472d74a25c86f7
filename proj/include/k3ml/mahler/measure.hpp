#pragma once

#include <cstdint>
#include <string>

#include "k3ml/mahler/laurent.hpp"

namespace k3ml::mahler {

enum class Method { tensor_trapezoid, quasi_monte_carlo, family_reduction, exact };

std::string method_name(Method m);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long long evaluations = 0;
  Method method = Method::exact;
  bool statistical = false;  // error_estimate is a 3-sigma batch estimate, not a bound
  bool converged = true;     // false when the budget ran out before tol
  std::string note;
};

struct MeasureOptions {
  long long max_evaluations = 1LL << 26;
  unsigned threads = 0;  // 0: default_threads()
  std::uint64_t seed = 0x6b336d6cULL;
  int qmc_batches = 16;
  bool allow_fallback = true;
};

// log((|c| + sqrt(c^2 - 4)) / 2) for |c| >= 2, else 0: the Jensen value of z^2 + c z + 1.
double jensen_g(double c);

// m(P) by tensor trapezoid with grid doubling; falls back to randomized
// quasi-Monte-Carlo when P vanishes on the torus or convergence is not geometric.
QuadratureResult mahler_measure(const LaurentPolynomial& p, double tol, const MeasureOptions& opt = {});

// The two engines individually (no fallback between them).
QuadratureResult mahler_trapezoid(const LaurentPolynomial& p, double tol, const MeasureOptions& opt = {});
QuadratureResult mahler_qmc(const LaurentPolynomial& p, double tol, const MeasureOptions& opt = {});

// m(x + 1/x + y + 1/y + z + 1/z - k) by Jensen reduction in z and nested
// tanh-sinh quadrature with breakpoints on |c| = 2.
QuadratureResult mahler_family(double k, double tol, unsigned threads = 0);

// |m(homogeneous quartic form) - m(Laurent form)| for integer k.
struct EquivalenceResult {
  QuadratureResult quartic;
  QuadratureResult laurent;
  double difference = 0.0;
};
EquivalenceResult verify_homogeneous_equivalence(long k, double tol, const MeasureOptions& opt = {});

// One-dimensional tanh-sinh rule on [a, b]; error estimate from the last level change.
struct TanhSinhResult {
  double value = 0.0;
  double error = 0.0;
  long long evaluations = 0;
};
template <class F>
TanhSinhResult tanh_sinh(F&& f, double a, double b, double tol, int max_level = 10);

}  // namespace k3ml::mahler

#include "k3ml/mahler/tanh_sinh_impl.hpp"
