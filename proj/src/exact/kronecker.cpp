#include "k3ml/exact/kronecker.hpp"

#include <utility>

#include "k3ml/error.hpp"

namespace k3ml::exact {

int kronecker_symbol(std::int64_t a, std::int64_t n) {
  if (n == 0) throw DomainError("kronecker_symbol: n must be nonzero");
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  if (twos > 0) {
    if (a % 2 == 0) return 0;
    const std::int64_t r8 = ((a % 8) + 8) % 8;
    if (twos % 2 == 1 && (r8 == 3 || r8 == 5)) result = -result;
  }
  // Jacobi symbol for odd positive n.
  std::int64_t x = ((a % n) + n) % n;
  std::int64_t m = n;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      const std::int64_t r = m % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(x, m);
    if (x % 4 == 3 && m % 4 == 3) result = -result;
    x %= m;
  }
  return m == 1 ? result : 0;
}

}  // namespace k3ml::exact
