#pragma once

#include <cmath>

namespace k3ml::mahler {

template <class F>
TanhSinhResult tanh_sinh(F&& f, double a, double b, double tol, int max_level) {
  constexpr double kHalfPi = 1.5707963267948966;
  constexpr double kTMax = 3.2;
  TanhSinhResult out;
  if (!(b > a)) return out;
  const double half = 0.5 * (b - a);
  // Node at parameter t; distance to the nearest endpoint is computed without cancellation.
  auto node = [&](double t, double& weight_sum) {
    const double u = kHalfPi * std::sinh(t);
    const double ch = std::cosh(u);
    const double w = kHalfPi * std::cosh(t) / (ch * ch);
    if (w < 1e-300) return 0.0;
    const double e = std::exp(-2.0 * std::abs(u));
    const double gap = half * 2.0 * e / (1.0 + e);  // half * (1 - tanh|u|)
    const double x = t >= 0 ? b - gap : a + gap;
    weight_sum += w;
    ++out.evaluations;
    return w * f(x);
  };
  double ws = 0;
  double h = 1.0;
  double sum = node(0.0, ws);
  for (double t = h; t <= kTMax; t += h) sum += node(t, ws) + node(-t, ws);
  double estimate = sum * h * half;
  out.error = std::abs(estimate);
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    double fresh = 0;
    for (double t = h; t <= kTMax; t += 2 * h) fresh += node(t, ws) + node(-t, ws);
    sum += fresh;
    const double next = sum * h * half;
    out.error = std::abs(next - estimate);
    estimate = next;
    if (level >= 3 && out.error <= tol) break;
  }
  out.value = estimate;
  return out;
}

}  // namespace k3ml::mahler
