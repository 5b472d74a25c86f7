#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3ml/verify/report.hpp"

namespace k3ml::verify {

enum class Output { json, csv, text };

struct RunConfig {
  long radius = 4096;
  double quadrature_tol = 1e-6;
  long n_max = 100000;
  long p_max = 50;
  unsigned threads = 1;
  Output output = Output::json;

  // Throws DomainError unless every field is positive.
  void validate() const;
};

// K3ML_THREADS, when set to a positive integer, replaces cfg.threads.
RunConfig apply_environment(RunConfig cfg);

// Expected values with provenance strings, from fixtures/reference_values.json.
const Json& reference_values();

// m(P_10) by four routes plus their sub-checks; the last report is the pairwise agreement.
std::vector<Report> verify_theorem1(const RunConfig& cfg);

// Lattice value S, partial sums of the newform L-series, and the trace identification.
std::vector<Report> verify_lseries(const RunConfig& cfg);

enum class Symmetrize { automatic, upper, lower, none };
// `fixture` is "ns20", "t2" or a path to a CSV matrix. automatic copies the upper
// triangle when the matrix is not symmetric.
std::vector<Report> gram_check(const std::string& fixture, Symmetrize mode, bool determinant);

// `model` names a curve file in fixtures/curves.
std::vector<Report> fibration_check(const std::string& model, int weight, bool classify, bool torsion);

std::vector<Report> newform_check(long n_max);

std::vector<Report> count_check(long p, int r, unsigned threads);

std::vector<Report> traces_check(long p_max, long r2_max, unsigned threads);
// CSV rows of the same run; *ok receives whether every row matched.
std::string traces_csv(long p_max, long r2_max, unsigned threads, bool* ok = nullptr);

enum class MahlerMethod { automatic, trapezoid, qmc };
struct ExpectedValue {
  double value = 0;
  double tolerance = 0;
};
std::vector<Report> mahler_check(const std::string& polynomial, double tol, MahlerMethod method, unsigned threads,
                                 std::optional<ExpectedValue> expect = std::nullopt);
std::vector<Report> mahler_family_check(double k, double tol, unsigned threads,
                                        std::optional<ExpectedValue> expect = std::nullopt);

enum class LValueKind { dirichlet, d3, zagier_a, zagier_b, r_n, lattice };
struct LValueRequest {
  LValueKind kind = LValueKind::dirichlet;
  long discriminant = -3;
  double s = 2.0;
  std::string form = "1,0,1";  // a,b,c of a k^2 + b k m + c m^2
  std::string numerator = "1";
};
std::vector<Report> lvalue_check(const LValueRequest& req, const RunConfig& cfg);

}  // namespace k3ml::verify
