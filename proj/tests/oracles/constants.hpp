#pragma once

#include <cmath>

// Independent reference values computed by brute-force series in test code.
namespace oracle {

inline double zeta3() {
  // Direct sum plus Euler-Maclaurin tail 1/(2N^2) + 1/(2N^3) + 1/(4N^4).
  const long n = 100000;
  double s = 0;
  for (long k = n; k >= 1; --k) s += 1.0 / (static_cast<double>(k) * k * k);
  const double N = static_cast<double>(n);
  return s + 1.0 / (2 * N * N) - 1.0 / (2 * N * N * N) + 1.0 / (4 * N * N * N * N);
}

// L(chi_-3, 2) by pairing n = 3j+1 and 3j+2 for j < terms, smallest terms first.
inline double l_chi_m3_2(long terms = 10000000) {
  long double s = 0;
  for (long j = terms - 1; j >= 0; --j) {
    const long double a = 3.0L * j + 1, b = 3.0L * j + 2;
    s += 1.0L / (a * a) - 1.0L / (b * b);
  }
  return static_cast<double>(s);
}

inline double d3_oracle() {
  const double pi = 3.141592653589793;
  return 3.0 * std::sqrt(3.0) / (4.0 * pi) * l_chi_m3_2();
}

}  // namespace oracle
