#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace k3ml::exact {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

// Parses "p" or "p/q" with optional sign.
Rational parse_rational(const std::string& text);

// Square root in Q, if the argument is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& x);

// n = square * squarefree; returns {square root of the square part, squarefree part}.
// The squarefree part keeps the sign of n.
std::pair<BigInt, BigInt> split_square(const BigInt& n);

}  // namespace k3ml::exact
