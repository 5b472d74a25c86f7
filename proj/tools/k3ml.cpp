#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "k3ml/error.hpp"
#include "k3ml/parallel.hpp"
#include "k3ml/verify/checks.hpp"

namespace {

using namespace k3ml::verify;

struct ExpectFlags {
  double value = 0;
  double tolerance = 1e-6;
  CLI::Option* option = nullptr;

  std::optional<ExpectedValue> get() const {
    if (option == nullptr || option->count() == 0) return std::nullopt;
    return ExpectedValue{value, tolerance};
  }
};

void add_expect(CLI::App* cmd, ExpectFlags& e) {
  e.option = cmd->add_option("--expect", e.value, "reference value to compare against");
  cmd->add_option("--expect-tol", e.tolerance, "tolerance for --expect")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification harness for the quartic K3 family: Mahler measures, lattice sums, L-values and point counts"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  cfg.threads = k3ml::default_threads();
  bool no_timing = false;
  app.add_option("--radius", cfg.radius, "lattice truncation radius")->check(CLI::PositiveNumber);
  app.add_option("--quadrature-tol", cfg.quadrature_tol, "quadrature tolerance")->check(CLI::PositiveNumber);
  app.add_option("--n-max", cfg.n_max, "number of Dirichlet coefficients")->check(CLI::PositiveNumber);
  app.add_option("--p-max", cfg.p_max, "largest prime for point counts")->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "worker threads (K3ML_THREADS overrides)")->check(CLI::PositiveNumber);
  const std::map<std::string, Output> outputs{{"json", Output::json}, {"csv", Output::csv}, {"text", Output::text}};
  app.add_option("--output", cfg.output, "json, csv or text")->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case));
  app.add_flag("--no-timing", no_timing, "write runtime_ms as 0");

  auto* theorem = app.add_subcommand("verify-theorem1", "m(P_10) by four independent routes");
  auto* lseries = app.add_subcommand("verify-lseries", "lattice value, newform partial sums and trace identification");

  auto* mahler = app.add_subcommand("mahler", "Mahler measure of a Laurent polynomial");
  std::string poly;
  double mahler_tol = 1e-6;
  MahlerMethod method = MahlerMethod::automatic;
  ExpectFlags mahler_expect;
  mahler->add_option("polynomial", poly, "e.g. \"1 + x + y\"")->required();
  mahler->add_option("--tol", mahler_tol, "target error")->check(CLI::PositiveNumber);
  const std::map<std::string, MahlerMethod> methods{
      {"auto", MahlerMethod::automatic}, {"trapezoid", MahlerMethod::trapezoid}, {"qmc", MahlerMethod::qmc}};
  mahler->add_option("--method", method, "auto, trapezoid or qmc")->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  add_expect(mahler, mahler_expect);

  auto* family = app.add_subcommand("mahler-family", "m(x + 1/x + y + 1/y + z + 1/z - k)");
  double family_k = 10;
  double family_tol = 1e-9;
  ExpectFlags family_expect;
  family->add_option("--k", family_k, "family parameter")->required();
  family->add_option("--tol", family_tol, "target error")->check(CLI::PositiveNumber);
  add_expect(family, family_expect);

  auto* lvalue = app.add_subcommand("lvalue", "Dirichlet L-values and lattice sums");
  LValueRequest lreq;
  const std::map<std::string, LValueKind> kinds{{"dirichlet", LValueKind::dirichlet}, {"d3", LValueKind::d3},
                                                {"zagier-a", LValueKind::zagier_a},   {"zagier-b", LValueKind::zagier_b},
                                                {"r-n", LValueKind::r_n},             {"lattice", LValueKind::lattice}};
  lvalue->add_option("--kind", lreq.kind, "dirichlet, d3, zagier-a, zagier-b, r-n or lattice")
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
  lvalue->add_option("--char", lreq.discriminant, "discriminant D = 0 or 1 mod 4 of the character (1 for trivial)");
  lvalue->add_option("--s", lreq.s, "exponent");
  lvalue->add_option("--form", lreq.form, "a,b,c for a k^2 + b k m + c m^2");
  lvalue->add_option("--numerator", lreq.numerator, "polynomial in k and m");

  auto* newform = app.add_subcommand("newform", "coefficients of the weight 3 level 8 eta product");

  auto* count = app.add_subcommand("count", "points of the quartic over F_{p^r}");
  long count_p = 5;
  int count_r = 1;
  count->add_option("--p", count_p, "prime >= 5")->required();
  count->add_option("--r", count_r, "extension degree, 1 or 2");

  auto* traces = app.add_subcommand("traces", "counted traces against the CM formula for all primes up to --p-max");
  long r2_max = 7;
  traces->add_option("--r2-max", r2_max, "largest p counted over F_{p^2}")->check(CLI::NonNegativeNumber);

  auto* fib = app.add_subcommand("fibration", "singular fibers, Shioda rank and torsion");
  std::string model = "es";
  int weight = 2;
  bool classify = false, torsion = false;
  fib->add_option("--model", model, "curve name in fixtures/curves");
  fib->add_option("--weight", weight, "weight of the Weierstrass model")->check(CLI::PositiveNumber);
  fib->add_flag("--classify", classify, "fiber table and Shioda rank");
  fib->add_flag("--torsion", torsion, "multiples of the torsion section");

  auto* gram = app.add_subcommand("gram", "exact Gram determinants");
  std::string fixture = "ns20";
  bool det = false;
  Symmetrize sym = Symmetrize::automatic;
  gram->add_option("--fixture", fixture, "ns20, t2 or a CSV path");
  gram->add_flag("--det", det, "compute the determinant");
  const std::map<std::string, Symmetrize> syms{
      {"auto", Symmetrize::automatic}, {"upper", Symmetrize::upper}, {"lower", Symmetrize::lower}, {"none", Symmetrize::none}};
  gram->add_option("--symmetrize", sym, "auto, upper, lower or none")->transform(CLI::CheckedTransformer(syms, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg = apply_environment(cfg);
  std::vector<Report> reports;
  try {
    cfg.validate();
    if (*theorem) reports = verify_theorem1(cfg);
    if (*lseries) reports = verify_lseries(cfg);
    if (*mahler) reports = mahler_check(poly, mahler_tol, method, cfg.threads, mahler_expect.get());
    if (*family) reports = mahler_family_check(family_k, family_tol, cfg.threads, family_expect.get());
    if (*lvalue) reports = lvalue_check(lreq, cfg);
    if (*newform) reports = newform_check(cfg.n_max);
    if (*count) reports = count_check(count_p, count_r, cfg.threads);
    if (*traces) {
      if (cfg.output == Output::csv) {
        bool ok = false;
        std::cout << traces_csv(cfg.p_max, r2_max, cfg.threads, &ok);
        return ok ? 0 : 1;
      }
      reports = traces_check(cfg.p_max, r2_max, cfg.threads);
    }
    if (*fib) {
      if (!classify && !torsion) classify = true;
      reports = fibration_check(model, weight, classify, torsion);
    }
    if (*gram) reports = gram_check(fixture, sym, det);
  } catch (const k3ml::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (no_timing)
    for (auto& r : reports) r.runtime_ms = 0;
  switch (cfg.output) {
    case Output::json: std::cout << to_json_text(reports); break;
    case Output::csv: std::cout << to_csv(reports); break;
    case Output::text: std::cout << to_text(reports); break;
  }
  return all_pass(reports) ? 0 : 1;
}
