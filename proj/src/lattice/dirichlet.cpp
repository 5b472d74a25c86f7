#include "k3ml/lattice/dirichlet.hpp"

#include <cmath>
#include <numeric>

#include "k3ml/error.hpp"
#include "k3ml/exact/kronecker.hpp"
#include "k3ml/lattice/lattice_sum.hpp"
#include "k3ml/parallel.hpp"

namespace k3ml::lattice {

DirichletChar::DirichletChar(long modulus, std::vector<int> values, std::string name)
    : modulus_(modulus), values_(std::move(values)), name_(std::move(name)) {
  if (modulus_ < 1) throw DomainError("DirichletChar: modulus must be >= 1");
  if (static_cast<long>(values_.size()) != modulus_) throw DomainError("DirichletChar: table length must equal the modulus");
  for (long n = 0; n < modulus_; ++n) {
    const int v = values_[static_cast<std::size_t>(n)];
    if (v < -1 || v > 1) throw DomainError("DirichletChar: values must lie in {-1,0,1}");
    const bool unit = std::gcd(n, modulus_) == 1;
    if (unit != (v != 0)) throw DomainError("DirichletChar: zero exactly at gcd(n, modulus) > 1 violated at n = " + std::to_string(n));
  }
  for (long a = 0; a < modulus_; ++a)
    for (long b = a; b < modulus_; ++b)
      if ((*this)(a * b) != (*this)(a) * (*this)(b))
        throw DomainError("DirichletChar: not multiplicative at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
}

DirichletChar DirichletChar::kronecker(long discriminant) {
  if (discriminant == 0) throw DomainError("DirichletChar::kronecker: zero discriminant");
  const long residue = ((discriminant % 4) + 4) % 4;
  if (residue == 2 || residue == 3)
    throw DomainError("DirichletChar::kronecker: " + std::to_string(discriminant) + " is not 0 or 1 mod 4");
  const long q = std::abs(discriminant);
  std::vector<int> v(static_cast<std::size_t>(q));
  v[0] = q == 1 ? 1 : 0;
  for (long n = 1; n < q; ++n) v[static_cast<std::size_t>(n)] = exact::kronecker_symbol(discriminant, n);
  return DirichletChar(q, std::move(v), "chi_" + std::to_string(discriminant));
}

DirichletChar DirichletChar::trivial() { return DirichletChar(1, {1}, "trivial"); }

int DirichletChar::operator()(long n) const {
  long r = n % modulus_;
  if (r < 0) r += modulus_;
  return values_[static_cast<std::size_t>(r)];
}

bool DirichletChar::principal() const {
  for (long n = 0; n < modulus_; ++n)
    if (std::gcd(n, modulus_) == 1 && (*this)(n) != 1) return false;
  return true;
}

namespace {

// B_{2j} / (2j)! for j = 1..10.
constexpr double kBernoulliOverFactorial[] = {
    1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0, 1.0 / 47900160.0,
    -691.0 / 1307674368000.0, 1.0 / 74724249600.0, -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0, -174611.0 / 802857662698291200000.0};

// sum_{n >= 0} (x + n)^{-s} by Euler-Maclaurin at the start point x (large); also returns
// the size of the last correction term as an error estimate. With drop_pole the constant
// 1/(s-1) is omitted; it cancels across residues of a non-principal character.
double hurwitz_tail(double s, double x, bool drop_pole, double& err) {
  const double lead = s == 1.0 ? -std::log(x) : std::expm1((1.0 - s) * std::log(x)) / (s - 1.0);
  double total = (drop_pole ? lead : lead + 1.0 / (s - 1.0)) + 0.5 * std::pow(x, -s);
  double rising = s;  // s (s+1) ... (s + 2j - 2)
  double xp = std::pow(x, -s - 1.0);
  double last = 0;
  for (int j = 1; j <= 10; ++j) {
    last = kBernoulliOverFactorial[j - 1] * rising * xp;
    total += last;
    rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
    xp /= x * x;
  }
  err = std::abs(last);
  return total;
}

}  // namespace

LValueResult dirichlet_L(const DirichletChar& chi, double s, double tol) {
  if (!(tol > 0)) throw DomainError("dirichlet_L: tol must be positive");
  const bool principal = chi.principal();
  if (!(s > 1.0) && (principal || !(s > 0.0)))
    throw DomainError("dirichlet_L: need s > 1 (or s > 0 for a non-principal character)");
  const long q = chi.modulus();
  for (long periods = 4;; periods *= 2) {
    const long n_max = periods * q;
    CompensatedSum acc;
    for (long n = 1; n <= n_max; ++n) {
      const int c = chi(n);
      if (c != 0) acc.add(c * std::pow(static_cast<double>(n), -s));
    }
    // Tail: sum over residues a of chi(a) q^{-s} zeta_H(s, (n_max + a)/q).
    double err_total = 0;
    CompensatedSum tail;
    for (long a = 1; a <= q; ++a) {
      const int c = chi(a);
      if (c == 0) continue;
      double err = 0;
      const double h = hurwitz_tail(s, static_cast<double>(n_max + a) / static_cast<double>(q), !principal, err);
      tail.add(c * std::pow(static_cast<double>(q), -s) * h);
      err_total += std::pow(static_cast<double>(q), -s) * err;
    }
    if (err_total <= tol) {
      LValueResult r;
      r.value = acc.value() + tail.value();
      r.error_bound = err_total;
      r.periods = periods;
      return r;
    }
    if (n_max > 100000000) throw DomainError("dirichlet_L: tolerance unreachable within the term budget");
  }
}

D3Result d3(long radius, unsigned threads) {
  constexpr double kPi = 3.141592653589793;
  const double sqrt3 = std::sqrt(3.0);
  D3Result r;
  r.character_route = 3.0 * sqrt3 / (4.0 * kPi) * dirichlet_L(DirichletChar::kronecker(-3), 2.0).value;
  LatticeSumSpec spec;
  spec.form = {3, 0, 1};
  spec.numerator = {{0, 0, 1}};
  spec.s = 2;
  spec.radius = radius;
  LatticeOptions opt;
  opt.threads = threads;
  r.lattice_route = 2.0 * sqrt3 / (kPi * kPi * kPi) * lattice_sum(spec, opt).value;
  r.difference = std::abs(r.character_route - r.lattice_route);
  r.value = r.character_route;
  if (r.difference > 1e-8) throw InternalError("d3: character and lattice routes disagree by " + std::to_string(r.difference));
  return r;
}

}  // namespace k3ml::lattice
