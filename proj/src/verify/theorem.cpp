#include <algorithm>
#include <array>
#include <optional>
#include <utility>

#include "common.hpp"
#include "k3ml/counting/point_count.hpp"
#include "k3ml/error.hpp"
#include "k3ml/exact/int_matrix.hpp"
#include "k3ml/exact/quad_field.hpp"
#include "k3ml/fibration/io.hpp"
#include "k3ml/lattice/dirichlet.hpp"
#include "k3ml/lattice/eisenstein.hpp"
#include "k3ml/mahler/measure.hpp"
#include "k3ml/modular/newform.hpp"

namespace k3ml::verify {

using detail::kPi;
using detail::run_check;
using detail::within;

namespace {

constexpr double kPairTolerance = 1e-4;
constexpr double kLatticeTolerance = 1e-6;
constexpr double kSpecializedTolerance = 1e-8;
constexpr double kD3Tolerance = 1e-8;
constexpr double kPartialTolerance = 2e-3;

Json quadrature_json(const mahler::QuadratureResult& q) {
  Json j;
  j["value"] = q.value;
  j["error_estimate"] = q.error_estimate;
  j["method"] = mahler::method_name(q.method);
  j["statistical"] = q.statistical;
  j["converged"] = q.converged;
  j["evaluations"] = q.evaluations;
  return j;
}

std::optional<double> need(const std::optional<double>& v, const char* what) {
  if (!v) throw DomainError(std::string(what) + " unavailable: an earlier check failed");
  return v;
}

}  // namespace

std::vector<Report> verify_theorem1(const RunConfig& cfg) {
  cfg.validate();
  const double tol = cfg.quadrature_tol;
  lattice::LatticeOptions lopt;
  lopt.threads = cfg.threads;
  std::vector<Report> out;
  std::optional<double> family, boyd, lattice_route, eisenstein, d3_value, det_value;

  out.push_back(run_check("theorem1.family_quadrature", {{"k", 10}, {"quadrature_tol", tol}}, tol, [&](Report& r) {
    const auto q = mahler::mahler_family(10, tol, cfg.threads);
    r.computed = quadrature_json(q);
    family = q.value;
    return q.converged && q.error_estimate <= tol;
  }));

  out.push_back(run_check("theorem1.d3", {{"radius", cfg.radius}}, kD3Tolerance, [&](Report& r) {
    const auto d = lattice::d3(cfg.radius, cfg.threads);
    r.computed = {{"character_route", d.character_route}, {"lattice_route", d.lattice_route}, {"difference", d.difference}};
    d3_value = d.value;
    return d.difference <= kD3Tolerance;
  }));

  out.push_back(run_check("theorem1.boyd_route", {{"k", 2}, {"quadrature_tol", tol}}, tol, [&](Report& r) {
    const double d = *need(d3_value, "d3");
    const auto q = mahler::mahler_family(2, tol, cfg.threads);
    boyd = 2 * d + 3 * q.value;
    r.computed = {{"value", *boyd}, {"d3", d}, {"m_P2", quadrature_json(q)}};
    return q.converged && 3 * q.error_estimate <= tol;
  }));

  out.push_back(run_check("theorem1.transcendental_det", {{"fixture", "t2"}}, 0, [&](Report& r) {
    const auto m = exact::read_int_matrix_csv(fibration::fixture_dir() / "t2.csv");
    const exact::BigInt det = exact::det_exact(m);
    r.computed = {{"det", detail::big_to_json(det)}};
    r.expected = detail::expected_entry("t2_det", "det");
    det_value = det.get_d();
    return r.expected["values"]["det"] == r.computed["det"];
  }));

  out.push_back(run_check("theorem1.exact_coefficient", {{"det", 72}}, 0, [&](Report& r) {
    // |det|^{3/2} / 9 in Q(sqrt 2), compared with 48 sqrt 2.
    const exact::BigInt det = 72;
    const auto root = exact::sqrt_of_integer(det);
    const auto lhs = exact::QuadFieldElement(exact::Rational(det)) * root / exact::QuadFieldElement(exact::Rational(9));
    const exact::QuadFieldElement rhs(exact::Rational(0), exact::Rational(48), 2);
    r.computed = {{"rational_part", lhs.a().get_str()}, {"sqrt_part", lhs.b().get_str()}, {"radicand", lhs.d()}};
    return lhs == rhs;
  }));

  out.push_back(run_check("theorem1.lattice_route", {{"radius", cfg.radius}}, 0, [&](Report& r) {
    const double d = *need(d3_value, "d3");
    const double det = std::abs(*need(det_value, "det"));
    const auto S = lattice::central_lattice_value(cfg.radius, lopt);
    const double coefficient = std::pow(det, 1.5) / (9 * kPi * kPi * kPi);
    lattice_route = 2 * d + coefficient * S.value;
    const double bound = coefficient * S.tail_bound + 2 * kD3Tolerance;
    r.computed = {{"value", *lattice_route}, {"d3", d},           {"S", S.value},
                  {"S_tail_bound", S.tail_bound}, {"coefficient", coefficient}, {"error_bound", bound}};
    r.tolerance = bound;
    return std::isfinite(*lattice_route);
  }));

  out.push_back(run_check("theorem1.eisenstein_route", {{"radius", cfg.radius}, {"tau", "i/sqrt(2)"}}, 0,
                          [&](Report& r) {
                            lattice::EisensteinSpec spec;
                            spec.radius = cfg.radius;
                            const auto e = lattice::eisenstein_mahler(spec, lopt);
                            eisenstein = e.value;
                            r.computed = {{"value", e.value},
                                          {"imaginary_residue", e.imaginary_residue},
                                          {"tail_correction", e.tail_correction},
                                          {"tail_bound", e.tail_bound},
                                          {"points", e.points}};
                            r.tolerance = e.tail_bound;
                            return std::isfinite(e.value);
                          }));

  out.push_back(run_check("theorem1.specialized_sum", {{"radius", cfg.radius}}, kSpecializedTolerance, [&](Report& r) {
    const double e = *need(eisenstein, "Eisenstein value");
    const auto sp = lattice::specialized_m10(cfg.radius, lopt);
    r.computed = {{"value", sp.value}, {"eisenstein", e}, {"difference", std::abs(sp.value - e)}, {"tail_bound", sp.tail_bound}};
    return within(sp.value, e, kSpecializedTolerance);
  }));

  out.push_back(run_check("theorem1.lattice_routes_agree", {{"radius", cfg.radius}}, kLatticeTolerance, [&](Report& r) {
    const double a = *need(lattice_route, "lattice route");
    const double b = *need(eisenstein, "Eisenstein route");
    r.computed = {{"lattice_route", a}, {"eisenstein_route", b}, {"difference", std::abs(a - b)}};
    return within(a, b, kLatticeTolerance);
  }));

  out.push_back(run_check("theorem1.pairwise_agreement", {{"radius", cfg.radius}, {"quadrature_tol", tol}}, kPairTolerance,
                          [&](Report& r) {
                            const std::array<std::pair<const char*, std::optional<double>>, 4> routes{
                                {{"family_quadrature", family},
                                 {"boyd_route", boyd},
                                 {"lattice_route", lattice_route},
                                 {"eisenstein_route", eisenstein}}};
                            Json values = Json::object();
                            for (const auto& [name, v] : routes) values[name] = *need(v, name);
                            double worst = 0;
                            std::string worst_pair;
                            for (std::size_t i = 0; i < routes.size(); ++i)
                              for (std::size_t j = i + 1; j < routes.size(); ++j) {
                                const double diff = std::abs(*routes[i].second - *routes[j].second);
                                if (diff >= worst) {
                                  worst = diff;
                                  worst_pair = std::string(routes[i].first) + "/" + routes[j].first;
                                }
                              }
                            r.computed = {{"values", values}, {"max_difference", worst}, {"worst_pair", worst_pair}};
                            return std::isfinite(worst) && worst <= kPairTolerance;
                          }));
  return out;
}

std::vector<Report> verify_lseries(const RunConfig& cfg) {
  cfg.validate();
  lattice::LatticeOptions lopt;
  lopt.threads = cfg.threads;
  std::vector<Report> out;
  std::optional<double> S;

  out.push_back(run_check("lseries.lattice_value", {{"radius", cfg.radius}}, 0, [&](Report& r) {
    const auto full = lattice::central_lattice_value(cfg.radius, lopt);
    const auto half = lattice::central_lattice_value(std::max(1L, cfg.radius / 2), lopt);
    S = full.value;
    r.tolerance = half.tail_bound;
    r.computed = {{"S", full.value},
                  {"tail_bound", full.tail_bound},
                  {"half_radius_value", half.value},
                  {"difference", std::abs(full.value - half.value)}};
    return within(full.value, half.value, half.tail_bound);
  }));

  out.push_back(run_check("lseries.partial_sum", {{"n_max", cfg.n_max}}, kPartialTolerance, [&](Report& r) {
    const double s = *need(S, "S");
    const auto p = modular::lf3_partial(cfg.n_max);
    r.computed = {{"partial_sum", p.value}, {"S", s}, {"difference", std::abs(p.value - s)}, {"tail_bound", p.tail_bound}};
    return within(p.value, s, kPartialTolerance);
  }));

  out.push_back(run_check("lseries.newform_cm_traces", {{"p_max", std::min(cfg.n_max, 1000L)}}, 0, [&](Report& r) {
    const long bound = std::min(cfg.n_max, 1000L);
    const auto a = modular::newform_coeffs(bound);
    long checked = 0;
    Json mismatches = Json::array();
    for (long p = 3; p <= bound; ++p) {
      if (!modular::is_prime(p)) continue;
      ++checked;
      const long ap = static_cast<long>(a[static_cast<std::size_t>(p - 1)]);
      const long cm = modular::cm_trace(p).A_p;
      if (ap != cm) mismatches.push_back({{"p", p}, {"a_p", ap}, {"cm", cm}});
    }
    r.computed = {{"primes_checked", checked}, {"mismatches", mismatches}};
    return mismatches.empty();
  }));

  out.push_back(run_check("lseries.trace_table", Json::object(), 0, [&](Report& r) {
    r.expected = detail::expected_entry("traces", "A_p");
    Json counted = Json::object();
    bool ok = true;
    for (const auto& [key, want] : r.expected["values"]["A_p"].items()) {
      const long p = std::stol(key);
      const auto c = counting::count_report(p, 1, cfg.threads);
      counted[key] = c.A_q;
      ok = ok && want.get<long>() == c.A_q;
    }
    r.computed = {{"A_p", counted}};
    return ok;
  }));

  std::optional<counting::DichotomyReport> dichotomy;
  out.push_back(run_check("lseries.dichotomy", {{"p_max", cfg.p_max}, {"r2_max", 7}}, 0, [&](Report& r) {
    dichotomy = counting::verify_dichotomy(cfg.p_max, 7, cfg.threads);
    Json rows = Json::array();
    for (const auto& row : dichotomy->rows)
      rows.push_back({{"p", row.count.p}, {"r", row.count.r}, {"A_q", row.count.A_q}, {"cm_A", row.cm_A}, {"match", row.match}});
    Json failures = Json::array();
    for (const auto& f : dichotomy->failures) failures.push_back(f);
    r.computed = {{"rows", rows}, {"failures", failures}};
    bool matched = true;
    for (const auto& row : dichotomy->rows) matched = matched && row.match;
    return matched;
  }));

  out.push_back(run_check("lseries.congruences", {{"p_max", cfg.p_max}, {"r2_max", 7}}, 0, [&](Report& r) {
    if (!dichotomy) throw DomainError("point counts unavailable: an earlier check failed");
    long checked = 0;
    Json failing = Json::array();
    for (const auto& row : dichotomy->rows) {
      ++checked;
      if (!row.cong_N || !row.cong_A)
        failing.push_back({{"p", row.count.p}, {"r", row.count.r}, {"cong_N", row.cong_N}, {"cong_A", row.cong_A}});
    }
    r.computed = {{"rows_checked", checked}, {"failing", failing}};
    return failing.empty();
  }));
  return out;
}

}  // namespace k3ml::verify
