#include "k3ml/exact/factor.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace k3ml::exact {

namespace {

// Integer polynomial with content removed, same roots as p.
std::vector<BigInt> primitive_integer_coeffs(const PolyQ& p) {
  BigInt l = 1;
  for (const Rational& c : p.coefficients()) l = lcm(l, c.get_den());
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const Rational& c : p.coefficients()) {
    BigInt v = c.get_num() * (l / c.get_den());
    g = gcd(g, v);
    out.push_back(v);
  }
  if (g != 0)
    for (BigInt& v : out) v /= g;
  return out;
}

std::vector<std::pair<BigInt, int>> factor_integer(BigInt n) {
  n = abs(n);
  std::vector<std::pair<BigInt, int>> out;
  for (BigInt p = 2; p * p <= n; ++p) {
    if (p > 2000000) {
      if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
        throw DomainError("rational_roots: coefficient too large to factor");
      break;
    }
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<BigInt> divisors(const BigInt& n) {
  std::vector<BigInt> ds{1};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t base = ds.size();
    BigInt pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}


// Numerical roots of a polynomial by Aberth iteration; used only to propose
// candidate quadratic factors that are then checked exactly.
std::vector<std::complex<long double>> approximate_roots(const PolyQ& p) {
  using C = std::complex<long double>;
  const int n = p.degree();
  std::vector<long double> c;
  const PolyQ m = p.monic();
  for (const Rational& x : m.coefficients()) c.push_back(static_cast<long double>(x.get_d()));
  long double bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[static_cast<std::size_t>(i)]));
  bound += 1;
  std::vector<C> z(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = std::polar(bound * 0.5L, 2.0L * 3.14159265358979L * (i + 0.25L) / n);
  auto eval = [&](C x, C& deriv) {
    C v = 0;
    deriv = 0;
    for (int i = n; i >= 0; --i) {
      deriv = deriv * x + v;
      v = v * x + c[static_cast<std::size_t>(i)];
    }
    return v;
  };
  for (int iter = 0; iter < 500; ++iter) {
    long double change = 0;
    for (int i = 0; i < n; ++i) {
      C d;
      const C v = eval(z[static_cast<std::size_t>(i)], d);
      if (v == C(0)) continue;
      const C ratio = v / d;
      C sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += 1.0L / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
      const C step = ratio / (1.0L - ratio * sum);
      z[static_cast<std::size_t>(i)] -= step;
      change = std::max(change, std::abs(step) / (1 + std::abs(z[static_cast<std::size_t>(i)])));
    }
    if (change < 1e-17L) break;
  }
  return z;
}

BigInt round_to_integer(long double x) { return BigInt(std::to_string(static_cast<long long>(std::llround(x)))); }

// Splits off monic quadratic factors over Q of a squarefree block with no rational roots.
std::vector<PolyQ> quadratic_factors(PolyQ& block) {
  std::vector<PolyQ> found;
  for (bool progress = true; progress && block.degree() >= 4;) {
    progress = false;
    const std::vector<BigInt> z = primitive_integer_coeffs(block);
    const BigInt lead = abs(z.back());
    const long double scale = static_cast<long double>(lead.get_d());
    const auto roots = approximate_roots(block);
    for (std::size_t i = 0; i < roots.size() && !progress; ++i) {
      for (std::size_t j = i + 1; j < roots.size() && !progress; ++j) {
        const auto sum = roots[i] + roots[j];
        const auto prod = roots[i] * roots[j];
        if (std::abs(sum.imag()) > 1e-6L * (1 + std::abs(sum)) || std::abs(prod.imag()) > 1e-6L * (1 + std::abs(prod)))
          continue;
        if (std::abs(sum.real()) * scale > 9e18L || std::abs(prod.real()) * scale > 9e18L) continue;
        // A monic factor of the primitive integer polynomial times its leading coefficient is integral.
        const PolyQ cand(std::vector<Rational>{make_rational(round_to_integer(prod.real() * scale), lead),
                                               make_rational(-round_to_integer(sum.real() * scale), lead), Rational(1)},
                         block.variable());
        auto [q, r] = block.divrem(cand);
        if (r.is_zero()) {
          found.push_back(cand);
          block = q;
          progress = true;
        }
      }
    }
  }
  return found;
}

}  // namespace

std::vector<std::pair<PolyQ, int>> yun_decomposition(const PolyQ& p) {
  if (p.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<PolyQ, int>> out;
  if (p.degree() == 0) return out;
  const PolyQ f = p.monic();
  const PolyQ df = f.derivative();
  PolyQ a = gcd(f, df);
  PolyQ b = f.exact_div(a);
  PolyQ c = df.exact_div(a);
  PolyQ d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    PolyQ g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = b.exact_div(g);
    c = d.exact_div(g);
    d = c - b.derivative();
  }
  return out;
}

std::vector<Rational> rational_roots(const PolyQ& p) {
  if (p.is_zero()) throw DomainError("rational roots of the zero polynomial");
  std::vector<Rational> roots;
  PolyQ q = p;
  if (sgn(q.coeff(0)) == 0) {
    roots.emplace_back(0);
    while (q.degree() > 0 && sgn(q.coeff(0)) == 0) q = q.exact_div(PolyQ::variable_poly(p.variable()));
  }
  if (q.degree() < 1) return roots;
  const std::vector<BigInt> z = primitive_integer_coeffs(q);
  const std::vector<BigInt> num = divisors(z.front());
  const std::vector<BigInt> den = divisors(z.back());
  for (const BigInt& a : num) {
    for (const BigInt& b : den) {
      if (gcd(a, b) != 1) continue;
      for (int sign : {1, -1}) {
        const Rational r = make_rational(a * sign, b);
        if (sgn(q.evaluate(r)) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end())
          roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Factorization squarefree_factor(const PolyQ& p) {
  if (p.is_zero()) throw DomainError("squarefree_factor: zero polynomial");
  Factorization out;
  out.constant = p.leading();
  for (auto& [block, mult] : yun_decomposition(p)) {
    PolyQ rest = block;
    for (const Rational& r : rational_roots(block)) {
      PolyQ lin(std::vector<Rational>{-r, 1}, p.variable());
      rest = rest.exact_div(lin);
      out.factors.push_back({lin, mult, true});
    }
    rest = rest.monic();
    for (const PolyQ& q : quadratic_factors(rest)) out.factors.push_back({q, mult, true});
    // Without linear or quadratic factors, degree <= 5 is irreducible; cubic pairs are not searched.
    if (rest.degree() >= 1) out.factors.push_back({rest.monic(), mult, rest.degree() <= 5});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const PolyFactor& x, const PolyFactor& y) { return canonical_less(x.factor, y.factor); });
  return out;
}

}  // namespace k3ml::exact
