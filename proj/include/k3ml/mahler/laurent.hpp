#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3ml/exact/rational.hpp"

namespace k3ml::mahler {

using Exponents = std::vector<int>;

// Sparse Laurent polynomial with integer coefficients. Variables are kept in
// sorted order; no zero coefficients are stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::vector<std::string> vars);

  static LaurentPolynomial constant(const exact::BigInt& c, std::vector<std::string> vars = {});
  static LaurentPolynomial variable(const std::string& name);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::map<Exponents, exact::BigInt>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  void add_term(const Exponents& e, const exact::BigInt& c);

  // Re-expresses this polynomial over a superset of its variables.
  LaurentPolynomial over(const std::vector<std::string>& vars) const;

  // x_i -> 1/x_i for the given variable index.
  LaurentPolynomial invert_variable(std::size_t i) const;
  // Reorders variables by the permutation perm (new position k takes old variable perm[k]),
  // keeping the polynomial's sorted-variable invariant by renaming.
  LaurentPolynomial permute_variables(const std::vector<std::size_t>& perm) const;

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial operator-() const;
  LaurentPolynomial pow(int e) const;  // e >= 0; negative only for monomials

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const;

  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  std::map<Exponents, exact::BigInt> terms_;
};

// Grammar: expression := term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := integer | variable ['^' signed-integer] | '1/' variable | '(' expression ')'.
// "x^(-1)" is also accepted, and a leading '-' negates the first term.
// If allowed_vars is given, any other identifier is an error.
LaurentPolynomial parse_laurent(const std::string& text,
                                const std::optional<std::vector<std::string>>& allowed_vars = std::nullopt);

// P_k = x + 1/x + y + 1/y + z + 1/z - k (integer k).
LaurentPolynomial family_laurent(long k);
// Homogeneous quartic x^2yz + xy^2z + xyz^2 + t^2(xy + xz + yz) - k xyzt.
LaurentPolynomial family_quartic(long k);

}  // namespace k3ml::mahler
