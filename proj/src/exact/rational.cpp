#include "k3ml/exact/rational.hpp"

#include <cctype>

#include "k3ml/error.hpp"

namespace k3ml::exact {

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw ParseError("empty rational", 0);
  const auto slash = t.find('/');
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(num, true)) throw ParseError("malformed rational '" + text + "'", 0);
  if (!valid_int(den, false)) throw ParseError("malformed rational '" + text + "'", slash);
  if (num[0] == '+') num.erase(0, 1);
  BigInt n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'", slash);
  return make_rational(n, d);
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  const BigInt& n = x.get_num();
  const BigInt& d = x.get_den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0)
    return std::nullopt;
  BigInt rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return make_rational(rn, rd);
}

std::pair<BigInt, BigInt> split_square(const BigInt& n) {
  if (n == 0) return {0, 0};
  BigInt rest = abs(n);
  BigInt root = 1;
  BigInt squarefree = 1;
  for (BigInt p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) squarefree *= p;
  }
  squarefree *= rest;
  if (n < 0) squarefree = -squarefree;
  return {root, squarefree};
}

}  // namespace k3ml::exact
