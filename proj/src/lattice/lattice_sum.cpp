#include "k3ml/lattice/lattice_sum.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "k3ml/error.hpp"
#include "k3ml/mahler/laurent.hpp"
#include "shells.hpp"

namespace k3ml::lattice {

double QuadForm::min_on_unit_circle() const {
  const double A = static_cast<double>(a), B = static_cast<double>(b), C = static_cast<double>(c);
  return 0.5 * ((A + C) - std::sqrt((A - C) * (A - C) + B * B));
}

std::string QuadForm::to_string() const {
  std::ostringstream os;
  os << a << "*k^2 + " << b << "*k*m + " << c << "*m^2";
  return os.str();
}

std::vector<Monomial> parse_numerator(const std::string& text) {
  const auto p = mahler::parse_laurent(text, std::vector<std::string>{"k", "m"}).over({"k", "m"});
  std::vector<Monomial> out;
  for (const auto& [e, c] : p.terms()) {
    if (e[0] < 0 || e[1] < 0) throw DomainError("numerator must be a polynomial in k and m: " + text);
    if (!c.fits_slong_p()) throw DomainError("numerator coefficient too large: " + text);
    out.push_back({e[0], e[1], c.get_si()});
  }
  return out;
}

std::string numerator_to_string(const std::vector<Monomial>& num) {
  mahler::LaurentPolynomial p(std::vector<std::string>{"k", "m"});
  for (const auto& t : num) p.add_term({t.k_exp, t.m_exp}, exact::BigInt(t.coeff));
  return p.to_string();
}

int numerator_degree(const std::vector<Monomial>& num) {
  int d = 0;
  for (const auto& t : num)
    if (t.coeff != 0) d = std::max(d, t.k_exp + t.m_exp);
  return d;
}

namespace {

void validate(const LatticeSumSpec& spec) {
  if (!spec.form.positive_definite()) throw DomainError("lattice_sum: form " + spec.form.to_string() + " is not positive definite");
  if (spec.radius < 1) throw DomainError("lattice_sum: radius must be >= 1");
  if (!std::isfinite(spec.s)) throw DomainError("lattice_sum: exponent must be finite");
  const int deg = numerator_degree(spec.numerator);
  if (deg > LineSpec::kMaxDegree) throw DomainError("lattice_sum: numerator degree exceeds 8");
  if (!(static_cast<double>(deg) - 2.0 * spec.s < -2.0))
    throw DomainError("lattice_sum: divergent (numerator degree - 2s must be < -2)");
  for (const auto& t : spec.numerator)
    if (t.k_exp < 0 || t.m_exp < 0) throw DomainError("lattice_sum: negative exponent in numerator");
}

int integer_exponent(double s) {
  if (s == std::floor(s) && s >= 1 && s <= 64) return static_cast<int>(s);
  return 0;
}

// Run with one coordinate fixed; t is the other coordinate.
LineSpec make_line(const LatticeSumSpec& spec, bool fixed_is_m, long fixed, long t0, long t1) {
  LineSpec line;
  const double f = static_cast<double>(fixed);
  const QuadForm& q = spec.form;
  if (fixed_is_m) {
    line.q2 = static_cast<double>(q.a);
    line.q1 = static_cast<double>(q.b) * f;
    line.q0 = static_cast<double>(q.c) * f * f;
  } else {
    line.q2 = static_cast<double>(q.c);
    line.q1 = static_cast<double>(q.b) * f;
    line.q0 = static_cast<double>(q.a) * f * f;
  }
  int deg = 0;
  for (const auto& mono : spec.numerator) {
    const int te = fixed_is_m ? mono.k_exp : mono.m_exp;
    const int fe = fixed_is_m ? mono.m_exp : mono.k_exp;
    line.num[0][static_cast<std::size_t>(te)] += static_cast<double>(mono.coeff) * std::pow(f, fe);
    deg = std::max(deg, te);
  }
  line.num_degree = deg;
  line.numerators = 1;
  line.int_exponent = integer_exponent(spec.s);
  line.real_exponent = spec.s;
  line.t_begin = t0;
  line.t_end = t1;
  return line;
}

double tail_correction(const LatticeSumSpec& spec) {
  const QuadForm& q = spec.form;
  double total = 0;
  const double R = static_cast<double>(spec.radius) + 0.5;
  for (const auto& mono : spec.numerator) {
    if (mono.coeff == 0) continue;
    const double d = 2.0 * spec.s - mono.k_exp - mono.m_exp;
    auto f = [&](double k, double m) {
      const double Q = static_cast<double>(q.a) * k * k + static_cast<double>(q.b) * k * m + static_cast<double>(q.c) * m * m;
      return std::pow(k, mono.k_exp) * std::pow(m, mono.m_exp) / std::pow(Q, spec.s);
    };
    total += static_cast<double>(mono.coeff) * detail::exterior_integral(f, d) * std::pow(R, 2.0 - d);
  }
  return total;
}

}  // namespace

double lattice_tail_bound(const LatticeSumSpec& spec) {
  validate(spec);
  const int deg = numerator_degree(spec.numerator);
  double cn = 0;
  for (const auto& t : spec.numerator) cn += std::abs(static_cast<double>(t.coeff)) * std::pow(2.0, 0.5 * (t.k_exp + t.m_exp));
  const double lambda = spec.form.min_on_unit_circle();
  const double expo = deg + 2.0 - 2.0 * spec.s;
  return 8.0 * cn * std::pow(lambda, -spec.s) * std::pow(static_cast<double>(spec.radius), expo) / (-expo);
}

LatticeSumResult lattice_sum(const LatticeSumSpec& spec, const LatticeOptions& opt) {
  validate(spec);
  const auto totals = detail::sum_shells(spec.radius, opt.threads, opt.kernel, [&](long r, std::vector<LineSpec>& lines) {
    lines.push_back(make_line(spec, true, r, -r, r));
    lines.push_back(make_line(spec, true, -r, -r, r));
    lines.push_back(make_line(spec, false, r, -r + 1, r - 1));
    lines.push_back(make_line(spec, false, -r, -r + 1, r - 1));
  });
  LatticeSumResult res;
  res.raw = totals.value[0];
  res.points = totals.points;
  res.tail_correction = opt.tail_correction ? tail_correction(spec) : 0.0;
  res.value = res.raw + res.tail_correction;
  res.tail_bound = lattice_tail_bound(spec);
  return res;
}

}  // namespace k3ml::lattice
