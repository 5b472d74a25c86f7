#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "k3ml/counting/point_count.hpp"
#include "k3ml/exact/int_matrix.hpp"
#include "k3ml/exact/quad_field.hpp"
#include "k3ml/fibration/curve.hpp"
#include "k3ml/fibration/io.hpp"
#include "k3ml/lattice/dirichlet.hpp"
#include "k3ml/lattice/eisenstein.hpp"
#include "k3ml/lattice/zagier.hpp"
#include "k3ml/mahler/laurent.hpp"
#include "k3ml/mahler/measure.hpp"
#include "k3ml/modular/newform.hpp"
#include "k3ml/verify/checks.hpp"
#include "oracles/constants.hpp"

namespace {

using namespace k3ml;
using exact::BigInt;
using exact::Rational;

constexpr double kPi = 3.14159265358979323846;

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

fibration::CurveQ curve(const std::string& name) {
  return fibration::read_curve(fibration::fixture_dir() / "curves" / (name + ".txt"));
}

Outcome gram_determinant() {
  const auto verbatim = exact::read_int_matrix_csv(fibration::fixture_dir() / "ns20.csv");
  const BigInt det = exact::det_exact(verbatim.symmetrized_from_upper());
  const bool ok = det == -2592 && det == -36 * 72;
  return {ok, "det(upper symmetrization) = " + det.get_str() + ", verbatim det = " + exact::det_exact(verbatim).get_str()};
}

Outcome transcendental_lattice() {
  const BigInt det = exact::det_exact(exact::IntMatrix::diagonal({12, 6}));
  const BigInt fixture = exact::det_exact(exact::read_int_matrix_csv(fibration::fixture_dir() / "t2.csv"));
  const auto lhs = exact::QuadFieldElement(Rational(det)) * exact::sqrt_of_integer(det) / exact::QuadFieldElement(Rational(9));
  const bool ok = det == 72 && fixture == 72 && lhs == exact::QuadFieldElement(Rational(0), Rational(48), 2);
  return {ok, "det = " + det.get_str() + ", 72^(3/2)/9 = " + lhs.to_string()};
}

Outcome fiber_table() {
  const auto fibers = fibration::classify_fibers(curve("es"), 2);
  std::map<std::string, std::string> got;
  for (const auto& f : fibers) got[f.place_label()] = f.kodaira + "/" + std::to_string(f.place_degree);
  const std::map<std::string, std::string> want{{"s", "I_12/1"},          {"inf", "I_2/1"},   {"s + -1/10", "I_2/1"},
                                                {"s^2 + -10*s + 1", "I_3/2"}, {"s + -1", "I_1/1"}, {"s + -1/9", "I_1/1"}};
  const int sum = fibration::valuation_sum(fibers);
  return {got == want && sum == 24, std::to_string(fibers.size()) + " singular places, valuation sum " + std::to_string(sum)};
}

Outcome shioda() {
  const auto counts = fibration::component_counts(fibration::classify_fibers(curve("es"), 2));
  const int r = fibration::shioda_rank({20, counts});
  return {r == 1, "r = " + std::to_string(r)};
}

Outcome torsion() {
  const auto e = curve("es");
  const auto sec = fibration::read_section(fibration::fixture_dir() / "sections" / "s6.txt");
  const auto s6 = fibration::to_affine(fibration::rational_part(sec.point));
  const bool six = fibration::multiply(e, s6, 6).infinity;
  const auto two = fibration::multiply(e, s6, 2);
  const exact::PolyQ s4({Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)}, "s");
  const bool two_ok = !two.infinity && two.x == exact::RationalFunction<Rational>(s4);
  const auto three = fibration::multiply(e, s6, 3);
  const bool three_ok = !three.infinity && three.x.is_zero() && three.y.is_zero();
  bool lower_nonzero = true;
  for (long k = 1; k < 6; ++k) lower_nonzero = lower_nonzero && !fibration::multiply(e, s6, k).infinity;
  return {six && two_ok && three_ok && lower_nonzero, "2 s6 has x = " + two.x.to_string() + ", 3 s6 = (0:0:1), 6 s6 = O"};
}

Outcome newform() {
  const std::vector<std::int64_t> displayed{1, -2, -2, 4, 0, 4, 0, -8, -5, 0, 14, -8, 0, 0, 0, 16, 2, 10, -34, 0};
  const auto a20 = modular::newform_coeffs(20);
  const auto a = modular::newform_coeffs(1000);
  long primes = 0, bad = 0;
  for (long p = 3; p <= 1000; ++p) {
    if (!modular::is_prime(p)) continue;
    ++primes;
    bad += a[static_cast<std::size_t>(p - 1)] != modular::cm_trace(p).A_p;
  }
  return {a20 == displayed && bad == 0, "a_1..a_20 match; " + std::to_string(primes) + " odd primes, " + std::to_string(bad) + " mismatches"};
}

Outcome point_counts() {
  long rows = 0;
  bool ok = true;
  for (long p = 5; p <= 50; ++p) {
    if (!modular::is_prime(p)) continue;
    const auto c = counting::count_report(p, 1);
    const auto [cn, ca] = counting::check_congruence(p, 1, c.N_Y10, c.A_q);
    ok = ok && c.A_q == modular::cm_trace(p).A_p && cn && ca;
    ++rows;
  }
  for (long p : {5L, 7L}) {
    const auto c = counting::count_report(p, 2);
    const auto t = modular::cm_trace(p);
    ok = ok && t.middle_sign == -1 && c.A_q == t.A_p * t.A_p + 2 * p * p;
    ++rows;
  }
  return {ok, std::to_string(rows) + " counts"};
}

Outcome zagier() {
  const auto a = lattice::zagier_A(2.0, 4096);
  const double closed = kPi * kPi / (2 * std::sqrt(6.0)) * oracle::l_chi_m3_2();
  const double da = std::abs(a.value - closed);
  const auto b = lattice::zagier_B_identity(3.0, 4096);
  const double S = lattice::central_lattice_value(4096).value;
  const double db = std::abs(b.lhs - 10.0 / 9.0 * 2 * S);
  const long n_max = 100000;
  const auto table = lattice::r_n_table(n_max);
  std::vector<long> divisor_sum(static_cast<std::size_t>(n_max) + 1, 0);
  for (long d = 1; d <= n_max; ++d) {
    // chi_-8(d): 1 for d = 1, 3 mod 8, -1 for d = 5, 7 mod 8, 0 for even d
    const long r = d % 8;
    const int c = (r == 1 || r == 3) ? 1 : (r == 5 || r == 7) ? -1 : 0;
    if (c != 0)
      for (long n = d; n <= n_max; n += d) divisor_sum[static_cast<std::size_t>(n)] += c;
  }
  long bad = 0;
  for (long n = 1; n <= n_max; ++n) bad += table[static_cast<std::size_t>(n)] != divisor_sum[static_cast<std::size_t>(n)];
  return {da < 1e-6 && db < 1e-8 && bad == 0,
          "|A(2) - closed| = " + fmt(da) + ", |B(3) - (10/9) 2S| = " + fmt(db) + ", r_n mismatches " + std::to_string(bad)};
}

Outcome theorem_agreement() {
  verify::RunConfig cfg;
  const auto reports = verify::verify_theorem1(cfg);
  bool routes_ok = true;
  std::map<std::string, double> v;
  for (const auto& r : reports) {
    if (r.check_id == "theorem1.pairwise_agreement" && r.status == verify::Status::pass)
      for (const auto& [name, value] : r.computed["values"].items()) v[name] = value.get<double>();
    if (r.check_id == "theorem1.boyd_route") routes_ok = routes_ok && r.computed["m_P2"]["method"] == "family-reduction";
  }
  if (v.size() != 4) return {false, "a route failed to produce a value"};
  double worst = 0;
  for (const auto& [n1, x] : v)
    for (const auto& [n2, y] : v) worst = std::max(worst, std::abs(x - y));
  const double lattice_diff = std::abs(v["lattice_route"] - v["eisenstein_route"]);
  return {routes_ok && worst < 1e-4 && lattice_diff < 1e-6,
          "m(P_10) = " + std::to_string(v["family_quadrature"]) + ", max pairwise " + fmt(worst) + ", lattice routes " + fmt(lattice_diff)};
}

Outcome lseries() {
  const double S = lattice::central_lattice_value(4096).value;
  const auto partial = modular::lf3_partial(100000);
  const double d = std::abs(S - partial.value);
  return {d < 2e-3, "|S - partial(1e5)| = " + fmt(d)};
}

Outcome smyth() {
  const auto linear = mahler::mahler_measure(mahler::parse_laurent("1 + x + y"), 1e-6);
  const double d1 = std::abs(linear.value - oracle::d3_oracle());
  const auto three = mahler::mahler_qmc(mahler::parse_laurent("1 + x + y + z"), 1e-4);
  const double d2 = std::abs(three.value - 7 * oracle::zeta3() / (2 * kPi * kPi));
  return {d1 < 1e-4 && d2 < 1e-3 && three.statistical,
          "|m(1+x+y) - d3| = " + fmt(d1) + ", |m(1+x+y+z) - 7 zeta(3)/2pi^2| = " + fmt(d2) + " (QMC)"};
}

std::string all_reports(unsigned threads) {
  verify::RunConfig cfg;
  cfg.threads = threads;
  std::vector<verify::Report> all;
  auto add = [&](std::vector<verify::Report> r) { all.insert(all.end(), r.begin(), r.end()); };
  add(verify::verify_theorem1(cfg));
  add(verify::verify_lseries(cfg));
  add(verify::gram_check("ns20", verify::Symmetrize::automatic, true));
  add(verify::gram_check("t2", verify::Symmetrize::automatic, true));
  add(verify::fibration_check("es", 2, true, true));
  add(verify::newform_check(1000));
  add(verify::count_check(7, 2, threads));
  add(verify::traces_check(50, 7, threads));
  add(verify::mahler_check("1 + x + y", 1e-6, verify::MahlerMethod::automatic, threads));
  add(verify::mahler_check("1 + x + y + z", 1e-3, verify::MahlerMethod::qmc, threads));
  add(verify::mahler_family_check(12, 1e-9, threads));
  for (auto kind : {verify::LValueKind::dirichlet, verify::LValueKind::d3, verify::LValueKind::zagier_a, verify::LValueKind::zagier_b,
                    verify::LValueKind::r_n, verify::LValueKind::lattice}) {
    verify::LValueRequest req;
    req.kind = kind;
    if (kind == verify::LValueKind::zagier_b) req.s = 3;
    add(verify::lvalue_check(req, cfg));
  }
  return verify::to_json_text(all, false) + verify::traces_csv(50, 7, threads);
}

Outcome determinism() {
  const std::string one = all_reports(1);
  bool same = true;
  for (unsigned t : {4u, 8u}) same = same && all_reports(t) == one;
  return {same, std::to_string(one.size()) + " bytes of reports compared for 1, 4, 8 threads"};
}

struct Criterion {
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"gram determinant", 1, gram_determinant},
      {"transcendental lattice", 1e-3, transcendental_lattice},
      {"fiber table", 1, fiber_table},
      {"shioda rank", 1, shioda},
      {"torsion", 5, torsion},
      {"newform", 5, newform},
      {"point counts", 60, point_counts},
      {"zagier identities", 30, zagier},
      {"m(P_10) cross-agreement", 120, theorem_agreement},
      {"L-series consistency", 10, lseries},
      {"smyth anchors", 120, smyth},
      {"determinism", 600, determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_s;
    const bool ok = o.ok && in_time;
    failures += !ok;
    std::printf("%s AC%zu %s: %s [%.3f s, budget %g s%s]\n", ok ? "PASS" : "FAIL", i + 1, c.name, o.detail.c_str(), secs, c.budget_s,
                in_time ? "" : ", over budget");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
