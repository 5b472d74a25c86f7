#include "k3ml/modular/qexpansion.hpp"

#include <algorithm>
#include <sstream>

#include "k3ml/error.hpp"

namespace k3ml::modular {

bool QExpansion::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const BigInt& c) { return c == 0; });
}

QExpansion QExpansion::normalized() const {
  QExpansion out = *this;
  std::size_t shift = 0;
  while (shift < out.coefficients.size() && out.coefficients[shift] == 0) ++shift;
  if (shift == out.coefficients.size()) return out;
  out.coefficients.erase(out.coefficients.begin(), out.coefficients.begin() + static_cast<long>(shift));
  out.leading_exponent += static_cast<long>(shift);
  out.precision -= static_cast<long>(shift);
  return out;
}

std::string QExpansion::to_string(int terms) const {
  std::ostringstream os;
  os << "q^(" << leading_exponent.get_str() << ") * (";
  bool first = true;
  for (std::size_t j = 0; j < coefficients.size() && static_cast<int>(j) < terms; ++j) {
    const BigInt& c = coefficients[j];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (j == 0 || mag != 1) os << mag.get_str();
    if (j > 0) os << (mag != 1 ? "*" : "") << "q" << (j > 1 ? "^" + std::to_string(j) : "");
  }
  if (first) os << "0";
  os << " + O(q^" << precision << "))";
  return os.str();
}

QExpansion operator*(const QExpansion& a, const QExpansion& b) {
  QExpansion out;
  out.leading_exponent = a.leading_exponent + b.leading_exponent;
  out.precision = std::min(a.precision, b.precision);
  const std::size_t n = static_cast<std::size_t>(out.precision);
  out.coefficients.assign(n, 0);
  for (std::size_t i = 0; i < n && i < a.coefficients.size(); ++i) {
    if (a.coefficients[i] == 0) continue;
    for (std::size_t j = 0; i + j < n && j < b.coefficients.size(); ++j) out.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
  }
  return out;
}

QExpansion inverse(const QExpansion& a) {
  if (a.coefficients.empty() || (a.coefficients[0] != 1 && a.coefficients[0] != -1))
    throw DomainError("inverse: leading coefficient must be +-1");
  QExpansion out;
  out.leading_exponent = -a.leading_exponent;
  out.precision = a.precision;
  const std::size_t n = static_cast<std::size_t>(a.precision);
  out.coefficients.assign(n, 0);
  const BigInt c0 = a.coefficients[0];
  out.coefficients[0] = c0;  // 1/c0 = c0 for c0 = +-1
  for (std::size_t k = 1; k < n; ++k) {
    BigInt s = 0;
    for (std::size_t j = 1; j <= k && j < a.coefficients.size(); ++j) s += a.coefficients[j] * out.coefficients[k - j];
    out.coefficients[k] = -s * c0;
  }
  return out;
}

QExpansion power(const QExpansion& a, int e) {
  QExpansion base = e < 0 ? inverse(a) : a;
  unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
  QExpansion out;
  out.precision = a.precision;
  out.coefficients.assign(static_cast<std::size_t>(a.precision), 0);
  if (!out.coefficients.empty()) out.coefficients[0] = 1;
  while (n) {
    if (n & 1u) out = out * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return out;
}

QExpansion eta_q(long N, long precision) {
  if (N < 1 || precision < 1) throw DomainError("eta_q: need N >= 1 and precision >= 1");
  QExpansion out;
  out.leading_exponent = exact::make_rational(N, 24);
  out.precision = precision;
  out.coefficients.assign(static_cast<std::size_t>(precision), 0);
  // prod (1 - x^n) = 1 + sum_{k >= 1} (-1)^k (x^{k(3k-1)/2} + x^{k(3k+1)/2}), x = q^N.
  out.coefficients[0] = 1;
  for (long k = 1; N * (k * (3 * k - 1) / 2) < precision; ++k) {
    const int sign = (k % 2 == 0) ? 1 : -1;
    out.coefficients[static_cast<std::size_t>(N * (k * (3 * k - 1) / 2))] += sign;
    const long e2 = N * (k * (3 * k + 1) / 2);
    if (e2 < precision) out.coefficients[static_cast<std::size_t>(e2)] += sign;
  }
  return out;
}

QExpansion eta_quotient(const std::map<long, int>& exponents, long precision) {
  QExpansion out;
  out.precision = precision;
  out.coefficients.assign(static_cast<std::size_t>(precision), 0);
  if (precision > 0) out.coefficients[0] = 1;
  for (const auto& [N, e] : exponents) out = out * power(eta_q(N, precision), e);
  return out;
}

}  // namespace k3ml::modular
