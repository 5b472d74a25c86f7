#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "k3ml/error.hpp"
#include "k3ml/exact/field.hpp"

namespace k3ml::exact {

// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

// Dense univariate polynomial over an exact field F, coefficients indexed by
// degree. Trailing zero coefficients are always trimmed, so degree() is exact.
template <class F>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<F> coeffs, std::string var = "s")
      : c_(std::move(coeffs)), var_(std::move(var)) {
    trim();
  }

  static Polynomial constant(F c, std::string var = "s") {
    return Polynomial(std::vector<F>{std::move(c)}, std::move(var));
  }

  static Polynomial monomial(F c, int degree, std::string var = "s") {
    std::vector<F> v(static_cast<std::size_t>(degree) + 1, F(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v), std::move(var));
  }

  static Polynomial variable_poly(std::string var = "s") { return monomial(F(1), 1, std::move(var)); }

  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coefficients() const { return c_; }
  const std::string& variable() const { return var_; }

  F coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return F(0);
    return c_[static_cast<std::size_t>(i)];
  }

  const F& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  Polynomial with_variable(std::string var) const { return Polynomial(c_, std::move(var)); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this * field_inverse(leading());
  }

  Polynomial derivative() const {
    std::vector<F> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * F(static_cast<long>(i)));
    return Polynomial(std::move(d), var_);
  }

  F evaluate(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  // s^n * p(1/s); requires n >= degree().
  Polynomial reciprocal(int n, std::string var) const {
    if (n < degree()) throw DomainError("reciprocal: shift smaller than degree");
    std::vector<F> r(static_cast<std::size_t>(n) + 1, F(0));
    for (int i = 0; i <= degree(); ++i) r[static_cast<std::size_t>(n - i)] = c_[static_cast<std::size_t>(i)];
    return Polynomial(std::move(r), std::move(var));
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(F(1), var_);
    Polynomial base = *this;
    while (e != 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e != 0) base *= base;
    }
    return result;
  }

  Polynomial operator-() const {
    std::vector<F> v;
    v.reserve(c_.size());
    for (const F& x : c_) v.push_back(-x);
    return Polynomial(std::move(v), var_);
  }

  Polynomial& operator+=(const Polynomial& o) {
    var_ = merge_var(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    var_ = merge_var(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) {
    std::string var = merge_var(o);
    if (is_zero() || o.is_zero()) {
      c_.clear();
      var_ = std::move(var);
      return *this;
    }
    std::vector<F> r(c_.size() + o.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (exact::is_zero(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    var_ = std::move(var);
    trim();
    return *this;
  }

  Polynomial& operator*=(const F& k) {
    for (F& x : c_) x *= k;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const F& k) { return a *= k; }
  friend Polynomial operator*(const F& k, Polynomial a) { return a *= k; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

  // Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<Polynomial, Polynomial> divrem(const Polynomial& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    std::string var = merge_var(d);
    Polynomial r = *this;
    r.var_ = var;
    if (r.degree() < d.degree()) return {Polynomial({}, var), r};
    std::vector<F> q(static_cast<std::size_t>(r.degree() - d.degree()) + 1, F(0));
    const F inv_lead = field_inverse(d.leading());
    while (!r.is_zero() && r.degree() >= d.degree()) {
      const int shift = r.degree() - d.degree();
      const F factor = r.leading() * inv_lead;
      q[static_cast<std::size_t>(shift)] = factor;
      for (int i = 0; i <= d.degree(); ++i)
        r.c_[static_cast<std::size_t>(i + shift)] -= factor * d.c_[static_cast<std::size_t>(i)];
      r.trim();
    }
    return {Polynomial(std::move(q), var), r};
  }

  // Exact division; throws if d does not divide *this.
  Polynomial exact_div(const Polynomial& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw DomainError("exact_div: nonzero remainder");
    return q;
  }

  // Monic gcd; gcd(0, 0) = 0.
  friend Polynomial gcd(Polynomial a, Polynomial b) {
    std::string var = a.merge_var(b);
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
      Polynomial r = a.divrem(b).second.monic();
      a = std::move(b);
      b = std::move(r);
    }
    a.var_ = var;
    return a.monic();
  }

  // Multiplicity of the nonconstant factor f in *this; nullopt for the zero polynomial.
  std::optional<int> valuation(const Polynomial& f) const {
    if (f.degree() < 1) throw DomainError("valuation: factor must be nonconstant");
    if (is_zero()) return std::nullopt;
    int v = 0;
    Polynomial p = *this;
    for (;;) {
      auto [q, r] = p.divrem(f);
      if (!r.is_zero()) break;
      p = std::move(q);
      ++v;
    }
    return v;
  }

  // Exact square root if this polynomial is a square in F[var].
  std::optional<Polynomial> sqrt() const {
    if (is_zero()) return *this;
    if (degree() % 2 != 0) return std::nullopt;
    auto lead_root = field_sqrt(leading());
    if (!lead_root) return std::nullopt;
    const int n = degree() / 2;
    std::vector<F> h(static_cast<std::size_t>(n) + 1, F(0));
    h[static_cast<std::size_t>(n)] = *lead_root;
    const F inv_two_lead = field_inverse(F(2) * *lead_root);
    // Match coefficients of h^2 from the top down.
    for (int k = n - 1; k >= 0; --k) {
      F acc = coeff(n + k);
      for (int i = k + 1; i <= n; ++i) {
        const int j = n + k - i;
        if (j > k && j <= n) acc -= h[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(j)];
      }
      h[static_cast<std::size_t>(k)] = acc * inv_two_lead;
    }
    Polynomial root(std::move(h), var_);
    if (!(root * root == *this)) return std::nullopt;
    return root;
  }

  // Canonical order: degree first, then coefficients from the constant term up.
  friend bool canonical_less(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (field_less(a.c_[i], b.c_[i])) return true;
      if (field_less(b.c_[i], a.c_[i])) return false;
    }
    return false;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const F& c = c_[static_cast<std::size_t>(i)];
      if (exact::is_zero(c)) continue;
      if (!first) os << " + ";
      first = false;
      const std::string cs = exact::to_string(c);
      const bool unit = (cs == "1");
      if (i == 0) {
        os << cs;
      } else {
        if (!unit) os << (needs_parens(cs) ? "(" + cs + ")" : cs) << "*";
        os << var_;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  static bool needs_parens(const std::string& s) {
    return s.find_first_of("+", 1) != std::string::npos || s.find('-', 1) != std::string::npos;
  }

  void trim() {
    while (!c_.empty() && exact::is_zero(c_.back())) c_.pop_back();
  }

  std::string merge_var(const Polynomial& o) const {
    if (degree() >= 1 && o.degree() >= 1 && var_ != o.var_)
      throw DomainError("polynomial variable mismatch: " + var_ + " vs " + o.var_);
    return degree() >= 1 ? var_ : o.var_;
  }

  std::vector<F> c_;
  std::string var_ = "s";
};

using PolyQ = Polynomial<Rational>;
using PolyQd = Polynomial<QuadFieldElement>;

// Lifts a polynomial over Q into Q(sqrt d).
PolyQd to_quadratic(const PolyQ& p, long d);

}  // namespace k3ml::exact
