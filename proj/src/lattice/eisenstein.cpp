#include "k3ml/lattice/eisenstein.hpp"

#include <cmath>

#include "k3ml/error.hpp"
#include "shells.hpp"

namespace k3ml::lattice {

namespace {

constexpr double kPi = 3.141592653589793;

// Runs for dilation j: z = m j tau + n, x = Re z, y = Im z.
// Numerator 0 is 3x^2 - y^2 (= |z|^6 (2 Re 1/(z^3 conj z) + 1/|z|^4)),
// numerator 1 is -4xy (the imaginary part of 2/(z^3 conj z) times |z|^6).
LineSpec row_fixed_m(double ja, double jb, long m, long t0, long t1) {
  const double u = ja * static_cast<double>(m), v = jb * static_cast<double>(m);
  LineSpec l;
  l.q2 = 1.0;
  l.q1 = 2.0 * u;
  l.q0 = u * u + v * v;
  l.num[0] = {3.0 * u * u - v * v, 6.0 * u, 3.0};
  l.num[1] = {-4.0 * u * v, -4.0 * v, 0.0};
  l.num_degree = 2;
  l.numerators = 2;
  l.int_exponent = 3;
  l.t_begin = t0;
  l.t_end = t1;
  return l;
}

LineSpec column_fixed_n(double ja, double jb, long n, long t0, long t1) {
  const double f = static_cast<double>(n);
  LineSpec l;
  l.q2 = ja * ja + jb * jb;
  l.q1 = 2.0 * f * ja;
  l.q0 = f * f;
  l.num[0] = {3.0 * f * f, 6.0 * f * ja, 3.0 * ja * ja - jb * jb};
  l.num[1] = {0.0, -4.0 * f * jb, -4.0 * ja * jb};
  l.num_degree = 2;
  l.numerators = 2;
  l.int_exponent = 3;
  l.t_begin = t0;
  l.t_end = t1;
  return l;
}

void check_spec(const EisensteinSpec& spec) {
  if (!(spec.tau.imag() > 0)) throw DomainError("eisenstein_mahler: need Im tau > 0");
  if (spec.radius < 64) throw DomainError("eisenstein_mahler: radius must be >= 64");
}

// Smallest eigenvalue of |m j tau + n|^2 as a form in (m, n).
double dilation_min(double ja, double jb) {
  const double a = ja * ja + jb * jb, b = 2.0 * ja, c = 1.0;
  return 0.5 * ((a + c) - std::sqrt((a - c) * (a - c) + b * b));
}

EisensteinResult eisenstein_impl(const EisensteinSpec& spec, const LatticeOptions& opt, bool half) {
  check_spec(spec);
  const double pref = spec.tau.imag() / (8.0 * kPi * kPi * kPi);
  CompensatedSum real, imag, corr;
  double bound = 0;
  long long points = 0;
  const double R = static_cast<double>(spec.radius) + 0.5;
  for (const auto& [j, w] : spec.dilation_weights) {
    const double ja = j * spec.tau.real(), jb = j * spec.tau.imag();
    const auto t = detail::sum_shells(spec.radius, opt.threads, opt.kernel, [&](long r, std::vector<LineSpec>& lines) {
      lines.push_back(row_fixed_m(ja, jb, r, -r, r));
      if (half) {
        lines.push_back(column_fixed_n(ja, jb, r, 1, r - 1));
        lines.push_back(column_fixed_n(ja, jb, -r, 1, r - 1));
        lines.push_back(row_fixed_m(ja, jb, 0, r, r));
      } else {
        lines.push_back(row_fixed_m(ja, jb, -r, -r, r));
        lines.push_back(column_fixed_n(ja, jb, r, -r + 1, r - 1));
        lines.push_back(column_fixed_n(ja, jb, -r, -r + 1, r - 1));
      }
    });
    real.add(w * t.value[0]);
    imag.add(w * t.value[1]);
    points += t.points;
    const double lam = dilation_min(ja, jb);
    bound += std::abs(static_cast<double>(w)) * 12.0 / (lam * lam * static_cast<double>(spec.radius) * static_cast<double>(spec.radius));
    if (!half && opt.tail_correction) {
      auto f = [&](double m, double n) {
        const double x = n + m * ja, y = m * jb, q = x * x + y * y;
        return (3.0 * x * x - y * y) / (q * q * q);
      };
      corr.add(w * detail::exterior_integral(f, 4.0) / (R * R));
    }
  }
  EisensteinResult res;
  res.raw = pref * real.value();
  res.tail_correction = pref * corr.value();
  res.value = res.raw + res.tail_correction;
  res.imaginary_residue = pref * imag.value();
  res.tail_bound = pref * bound * (half ? 0.5 : 1.0);
  res.points = points;
  if (std::abs(res.imaginary_residue) > 1e-12)
    throw InternalError("eisenstein_mahler: imaginary residue " + std::to_string(res.imaginary_residue) + " exceeds 1e-12");
  return res;
}

}  // namespace

EisensteinResult eisenstein_mahler(const EisensteinSpec& spec, const LatticeOptions& opt) {
  return eisenstein_impl(spec, opt, false);
}

EisensteinResult eisenstein_half_lattice(const EisensteinSpec& spec, const LatticeOptions& opt) {
  return eisenstein_impl(spec, opt, true);
}

EisensteinResult specialized_m10(long radius, const LatticeOptions& opt) {
  if (radius < 64) throw DomainError("specialized_m10: radius must be >= 64");
  // Each dilation contributes w (4k^2/D^3 - 1/D^2) = w c^2 (4 c k^2 - F)/F^3 with D = F/c.
  struct Piece {
    long weight;
    QuadForm form;  // F in (k, m)
    long c;
  };
  const Piece pieces[] = {{-4, {2, 0, 1}, 2}, {16, {1, 0, 2}, 1}, {-36, {2, 0, 9}, 2}, {144, {1, 0, 18}, 1}};
  CompensatedSum raw, corr;
  double bound = 0;
  long long points = 0;
  for (const auto& p : pieces) {
    LatticeSumSpec spec;
    spec.form = p.form;
    // 4 c k^2 - (a k^2 + c_m m^2)
    spec.numerator = {{2, 0, 4 * p.c - p.form.a}, {0, 2, -p.form.c}};
    spec.s = 3;
    spec.radius = radius;
    const auto r = lattice_sum(spec, opt);
    const double scale = static_cast<double>(p.weight * p.c * p.c);
    raw.add(scale * r.raw);
    corr.add(scale * r.tail_correction);
    bound += std::abs(scale) * r.tail_bound;
    points += r.points;
  }
  const double pref = std::sqrt(2.0) / (16.0 * kPi * kPi * kPi);
  EisensteinResult res;
  res.raw = pref * raw.value();
  res.tail_correction = pref * corr.value();
  res.value = res.raw + res.tail_correction;
  res.tail_bound = pref * bound;
  res.points = points;
  return res;
}

LatticeSumResult central_lattice_value(long radius, const LatticeOptions& opt) {
  LatticeSumSpec spec;
  spec.form = {1, 0, 2};
  spec.numerator = {{2, 0, 1}, {0, 2, -2}};
  spec.s = 3;
  spec.radius = radius;
  auto r = lattice_sum(spec, opt);
  r.value *= 0.5;
  r.raw *= 0.5;
  r.tail_correction *= 0.5;
  r.tail_bound *= 0.5;
  return r;
}

}  // namespace k3ml::lattice
