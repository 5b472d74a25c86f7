#include "k3ml/mahler/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <sstream>

#include "k3ml/error.hpp"

namespace k3ml::mahler {

using exact::BigInt;

namespace {

constexpr long kMaxExponent = 1L << 20;

std::vector<std::string> merged_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

int checked_exponent(long e, std::size_t pos) {
  if (e > kMaxExponent || e < -kMaxExponent) throw ParseError("exponent overflow", pos);
  return static_cast<int>(e);
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

LaurentPolynomial LaurentPolynomial::constant(const BigInt& c, std::vector<std::string> vars) {
  LaurentPolynomial p(std::move(vars));
  p.add_term(Exponents(p.nvars(), 0), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(const std::string& name) {
  LaurentPolynomial p({name});
  p.add_term({1}, 1);
  return p;
}

void LaurentPolynomial::add_term(const Exponents& e, const BigInt& c) {
  if (e.size() != vars_.size()) throw DomainError("exponent vector length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::over(const std::vector<std::string>& vars) const {
  LaurentPolynomial out(vars);
  std::vector<std::size_t> where;
  for (const auto& v : vars_) {
    auto it = std::find(out.vars_.begin(), out.vars_.end(), v);
    if (it == out.vars_.end()) throw DomainError("variable " + v + " missing from target variable list");
    where.push_back(static_cast<std::size_t>(it - out.vars_.begin()));
  }
  for (const auto& [e, c] : terms_) {
    Exponents ne(out.nvars(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
    out.add_term(ne, c);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::invert_variable(std::size_t i) const {
  if (i >= nvars()) throw DomainError("invert_variable: index out of range");
  LaurentPolynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    ne[i] = -ne[i];
    out.add_term(ne, c);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::permute_variables(const std::vector<std::size_t>& perm) const {
  if (perm.size() != nvars()) throw DomainError("permute_variables: permutation length mismatch");
  LaurentPolynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents ne(nvars());
    for (std::size_t k = 0; k < nvars(); ++k) ne[k] = e[perm[k]];
    out.add_term(ne, c);
  }
  return out;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  const auto vars = merged_vars(a.vars_, b.vars_);
  LaurentPolynomial out = a.over(vars);
  for (const auto& [e, c] : b.over(vars).terms_) out.add_term(e, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out(vars_);
  for (const auto& [e, c] : terms_) out.add_term(e, -c);
  return out;
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a + (-b); }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  const auto vars = merged_vars(a.vars_, b.vars_);
  const LaurentPolynomial x = a.over(vars), y = b.over(vars);
  LaurentPolynomial out(vars);
  for (const auto& [ea, ca] : x.terms_) {
    for (const auto& [eb, cb] : y.terms_) {
      Exponents e(vars.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        const long s = static_cast<long>(ea[i]) + eb[i];
        e[i] = checked_exponent(s, 0);
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(int e) const {
  if (e < 0) {
    if (!is_monomial() || abs(terms_.begin()->second) != 1)
      throw DomainError("negative power of a non-unit Laurent polynomial");
    LaurentPolynomial inv(vars_);
    Exponents ex = terms_.begin()->first;
    for (int& x : ex) x = -x;
    inv.add_term(ex, terms_.begin()->second);
    return inv.pow(-e);
  }
  LaurentPolynomial result = constant(1, vars_);
  for (int i = 0; i < e; ++i) result = result * *this;
  return result;
}

std::complex<double> LaurentPolynomial::evaluate(const std::vector<std::complex<double>>& point) const {
  if (point.size() != nvars()) throw DomainError("evaluate: point dimension mismatch");
  std::complex<double> acc = 0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] >= 0)
        for (int k = 0; k < e[i]; ++k) t *= point[i];
      else
        for (int k = 0; k < -e[i]; ++k) t /= point[i];
    }
    acc += t;
  }
  return acc;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first for readability; ties by exponent order.
  std::vector<std::pair<Exponents, BigInt>> items(terms_.begin(), terms_.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    long dx = 0, dy = 0;
    for (int v : x.first) dx += v;
    for (int v : y.first) dy += v;
    return dx > dy;
  });
  for (const auto& [e, c] : items) {
    BigInt mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    std::vector<std::string> parts;
    if (mag != 1) parts.push_back(mag.get_str());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] == 1)
        parts.push_back(vars_[i]);
      else if (e[i] == -1)
        parts.push_back("1/" + vars_[i]);
      else
        parts.push_back(vars_[i] + "^" + (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i])));
    }
    if (parts.empty()) parts.push_back("1");
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::optional<std::vector<std::string>>& allowed)
      : s_(text), allowed_(allowed) {}

  LaurentPolynomial parse() {
    LaurentPolynomial p = expression();
    skip();
    if (i_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[i_] + "'", i_);
    return p;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", i_);
    ++i_;
  }

  LaurentPolynomial expression() {
    LaurentPolynomial acc;
    bool negate = false;
    if (peek('-')) {
      ++i_;
      negate = true;
    } else if (peek('+')) {
      ++i_;
    }
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (peek('+')) {
        ++i_;
        acc = acc + term();
      } else if (peek('-')) {
        ++i_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  LaurentPolynomial term() {
    LaurentPolynomial acc = factor();
    while (peek('*')) {
      ++i_;
      acc = acc * factor();
    }
    return acc;
  }

  std::string identifier() {
    skip();
    const std::size_t start = i_;
    if (i_ >= s_.size() || !(std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
      throw ParseError("expected variable", i_);
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    std::string name = s_.substr(start, i_ - start);
    if (allowed_ && std::find(allowed_->begin(), allowed_->end(), name) == allowed_->end())
      throw ParseError("unknown variable '" + name + "'", start);
    return name;
  }

  BigInt integer() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) throw ParseError("expected integer", i_);
    return BigInt(s_.substr(start, i_ - start));
  }

  int signed_exponent() {
    skip();
    const std::size_t start = i_;
    bool paren = false;
    if (peek('(')) {
      ++i_;
      paren = true;
    }
    skip();
    bool neg = false;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) {
      neg = s_[i_] == '-';
      ++i_;
    }
    BigInt v = integer();
    if (paren) expect(')');
    if (!v.fits_slong_p()) throw ParseError("exponent overflow", start);
    const long e = neg ? -v.get_si() : v.get_si();
    return checked_exponent(e, start);
  }

  LaurentPolynomial factor() {
    skip();
    if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      LaurentPolynomial inner = expression();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      BigInt v = integer();
      if (peek('/')) {
        if (v != 1) throw ParseError("only '1/' may precede a variable", start);
        ++i_;
        const std::string name = identifier();
        LaurentPolynomial p({name});
        p.add_term({-1}, 1);
        return p;
      }
      return LaurentPolynomial::constant(v);
    }
    const std::string name = identifier();
    int e = 1;
    if (peek('^')) {
      ++i_;
      e = signed_exponent();
    }
    LaurentPolynomial p({name});
    p.add_term({e}, 1);
    return p;
  }

  const std::string& s_;
  const std::optional<std::vector<std::string>>& allowed_;
  std::size_t i_ = 0;
};

}  // namespace

LaurentPolynomial parse_laurent(const std::string& text, const std::optional<std::vector<std::string>>& allowed_vars) {
  return Parser(text, allowed_vars).parse();
}

LaurentPolynomial family_laurent(long k) {
  return parse_laurent("x + 1/x + y + 1/y + z + 1/z - (" + std::to_string(k) + ")");
}

LaurentPolynomial family_quartic(long k) {
  return parse_laurent("x^2*y*z + x*y^2*z + x*y*z^2 + t^2*(x*y + x*z + y*z) - (" + std::to_string(k) + ")*x*y*z*t");
}

}  // namespace k3ml::mahler
