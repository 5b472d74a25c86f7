#include "k3ml/mahler/measure.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "k3ml/error.hpp"
#include "k3ml/parallel.hpp"

namespace k3ml::mahler {

namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr double kPi = 3.141592653589793;

struct Term {
  double coeff;
  std::vector<int> exps;
};

std::vector<Term> flatten(const LaurentPolynomial& p) {
  std::vector<Term> out;
  for (const auto& [e, c] : p.terms()) out.push_back({c.get_d(), e});
  return out;
}

QuadratureResult exact_result(double v, const std::string& note) {
  QuadratureResult r;
  r.value = v;
  r.method = Method::exact;
  r.evaluations = 1;
  r.note = note;
  return r;
}

// Trivial cases handled by Jensen's formula directly.
std::optional<QuadratureResult> trivial_measure(const LaurentPolynomial& p) {
  if (p.is_zero()) throw DomainError("Mahler measure of the zero polynomial");
  if (p.is_monomial()) {
    const double c = std::abs(p.terms().begin()->second.get_d());
    return exact_result(std::log(c), "monomial");
  }
  return std::nullopt;
}

// Average of log|P| on the N^n grid of roots of unity. Returns nullopt if P hits 0 on the grid.
std::optional<double> grid_average(const std::vector<Term>& terms, std::size_t nvars, long n, unsigned threads,
                                   long long& evals) {
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
  for (long j = 0; j < n; ++j) roots[static_cast<std::size_t>(j)] = std::polar(1.0, kTwoPi * static_cast<double>(j) / static_cast<double>(n));
  const std::size_t rows = static_cast<std::size_t>(n);
  long long inner = 1;
  for (std::size_t v = 1; v < nvars; ++v) inner *= n;
  std::vector<double> partial(rows, 0.0);
  std::vector<char> hit_zero(rows, 0);
  // Residues of exponents mod n, so that the monomial index is a sum of residues.
  std::vector<std::vector<long>> res(terms.size());
  for (std::size_t t = 0; t < terms.size(); ++t)
    for (int e : terms[t].exps) res[t].push_back(((e % n) + n) % n);
  parallel_for(rows, threads, [&](std::size_t row) {
    CompensatedSum acc;
    std::vector<long> idx(nvars, 0);
    if (nvars > 0) idx[0] = static_cast<long>(row);
    std::vector<long> base(terms.size());
    for (long long it = 0; it < inner; ++it) {
      std::complex<double> val = 0;
      for (std::size_t t = 0; t < terms.size(); ++t) {
        long k = 0;
        for (std::size_t v = 0; v < nvars; ++v) k += res[t][v] * idx[v];
        val += terms[t].coeff * roots[static_cast<std::size_t>(k % n)];
      }
      const double nrm = std::norm(val);
      if (nrm == 0.0) {
        hit_zero[row] = 1;
        return;
      }
      acc.add(0.5 * std::log(nrm));
      for (std::size_t v = nvars; v-- > 1;) {
        if (++idx[v] < n) break;
        idx[v] = 0;
      }
    }
    partial[row] = acc.value();
  });
  evals += static_cast<long long>(rows) * inner;
  for (char z : hit_zero)
    if (z) return std::nullopt;
  double total = ordered_sum(partial);
  for (std::size_t v = 0; v < nvars; ++v) total /= static_cast<double>(n);
  return total;
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::tensor_trapezoid: return "tensor-trapezoid";
    case Method::quasi_monte_carlo: return "quasi-monte-carlo";
    case Method::family_reduction: return "family-reduction";
    case Method::exact: return "exact";
  }
  return "unknown";
}

double jensen_g(double c) {
  const double a = std::abs(c);
  if (a <= 2.0) return 0.0;
  return std::acosh(0.5 * a);
}

QuadratureResult mahler_trapezoid(const LaurentPolynomial& p, double tol, const MeasureOptions& opt) {
  if (!(tol > 0)) throw DomainError("mahler_measure: tol must be positive");
  if (auto t = trivial_measure(p)) return *t;
  const auto terms = flatten(p);
  const std::size_t nvars = p.nvars();
  QuadratureResult r;
  r.method = Method::tensor_trapezoid;
  std::optional<double> prev;
  double prev_err = -1;
  int slow = 0;
  for (long n = 4;; n *= 2) {
    long long cost = 1;
    for (std::size_t v = 0; v < nvars; ++v) cost *= n;
    if (r.evaluations + cost > opt.max_evaluations) {
      r.converged = false;
      r.note = "evaluation budget exhausted";
      return r;
    }
    auto avg = grid_average(terms, nvars, n, opt.threads, r.evaluations);
    if (!avg) {
      r.converged = false;
      r.note = "integrand vanishes on the torus grid";
      return r;
    }
    if (prev) {
      const double err = std::abs(*avg - *prev);
      r.value = *avg;
      r.error_estimate = err;
      if (err <= tol && n >= 16) return r;
      if (n >= 32 && prev_err > 0 && err > 0.25 * prev_err) {
        if (++slow >= 2) {
          r.converged = false;
          r.note = "convergence not geometric (integrand likely vanishes on the torus)";
          return r;
        }
      } else {
        slow = 0;
      }
      prev_err = err;
    }
    prev = avg;
    r.value = *avg;
  }
}

namespace {

// Integrand on [0,1)^d for the QMC engine: either log|P| or the Jensen-reduced form.
class QmcIntegrand {
 public:
  explicit QmcIntegrand(const LaurentPolynomial& p) {
    // Pick the variable with the smallest positive degree span, if it is at most 2.
    int best = -1, best_span = 3;
    for (std::size_t v = 0; v < p.nvars(); ++v) {
      int lo = INT32_MAX, hi = INT32_MIN;
      for (const auto& [e, c] : p.terms()) {
        lo = std::min(lo, e[v]);
        hi = std::max(hi, e[v]);
      }
      const int span = hi - lo;
      if (span >= 1 && span < best_span) {
        best_span = span;
        best = static_cast<int>(v);
        reduce_low_ = lo;
      }
    }
    reduced_var_ = best;
    for (std::size_t v = 0; v < p.nvars(); ++v)
      if (static_cast<int>(v) != reduced_var_) dims_.push_back(v);
    for (const auto& [e, c] : p.terms()) {
      Term t{c.get_d(), {}};
      for (std::size_t v : dims_) t.exps.push_back(e[v]);
      const int slot = reduced_var_ < 0 ? 0 : e[static_cast<std::size_t>(reduced_var_)] - reduce_low_;
      parts_[static_cast<std::size_t>(slot)].push_back(std::move(t));
    }
    for (const auto& part : parts_)
      for (const auto& t : part)
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
          if (lo_.size() < t.exps.size()) {
            lo_.assign(t.exps.size(), 0);
            hi_.assign(t.exps.size(), 0);
          }
          lo_[i] = std::min(lo_[i], t.exps[i]);
          hi_[i] = std::max(hi_[i], t.exps[i]);
        }
    lo_.resize(dims_.size(), 0);
    hi_.resize(dims_.size(), 0);
    for (std::size_t i = 0; i < dims_.size(); ++i)
      if (lo_[i] < -31 || hi_[i] > 32) throw DomainError("mahler_measure: exponents outside [-31, 32] for the QMC engine");
  }

  std::size_t dimension() const { return dims_.size(); }
  bool reduced() const { return reduced_var_ >= 0; }

  double operator()(const double* u) const {
    // Powers z_v^e for e in [lo, hi].
    std::array<std::array<std::complex<double>, 64>, 8> pw{};
    const std::size_t d = dims_.size();
    for (std::size_t i = 0; i < d; ++i) {
      const std::complex<double> z = std::polar(1.0, kTwoPi * u[i]);
      const std::complex<double> zi = std::conj(z);
      auto& row = pw[i];
      const int off = -lo_[i];
      row[static_cast<std::size_t>(off)] = 1.0;
      for (int e = 1; e <= hi_[i]; ++e) row[static_cast<std::size_t>(off + e)] = row[static_cast<std::size_t>(off + e - 1)] * z;
      for (int e = -1; e >= lo_[i]; --e) row[static_cast<std::size_t>(off + e)] = row[static_cast<std::size_t>(off + e + 1)] * zi;
    }
    std::array<std::complex<double>, 3> c{};
    for (std::size_t s = 0; s < 3; ++s)
      for (const auto& t : parts_[s]) {
        std::complex<double> m = t.coeff;
        for (std::size_t i = 0; i < d; ++i) m *= pw[i][static_cast<std::size_t>(t.exps[i] - lo_[i])];
        c[s] += m;
      }
    if (!reduced()) return 0.5 * std::log(std::norm(c[0]));
    if (std::norm(c[2]) == 0.0) {
      // Linear in the reduced variable: log max(|c0|, |c1|).
      return 0.5 * std::log(std::max(std::norm(c[0]), std::norm(c[1])));
    }
    // c2 (z - r1)(z - r2): log|c2| + log+|r1| + log+|r2|.
    const std::complex<double> disc = std::sqrt(c[1] * c[1] - 4.0 * c[2] * c[0]);
    std::complex<double> q = -0.5 * (c[1] + (std::real(std::conj(c[1]) * disc) >= 0 ? disc : -disc));
    std::complex<double> r1, r2;
    if (std::norm(q) == 0.0) {
      r1 = r2 = 0.0;
    } else {
      r1 = q / c[2];
      r2 = c[0] / q;
    }
    auto logplus = [](std::complex<double> r) { return std::max(0.0, 0.5 * std::log(std::norm(r))); };
    return 0.5 * std::log(std::norm(c[2])) + logplus(r1) + logplus(r2);
  }

 private:
  int reduced_var_ = -1;
  int reduce_low_ = 0;
  std::vector<std::size_t> dims_;
  std::array<std::vector<Term>, 3> parts_;
  std::vector<int> lo_, hi_;
};

// R_d additive recurrence: alpha_i = phi_d^-(i+1) with phi_d the root of x^(d+1) = x + 1.
std::vector<long double> rd_alphas(std::size_t d) {
  long double phi = 2.0L;
  for (int i = 0; i < 60; ++i) phi = std::pow(1.0L + phi, 1.0L / static_cast<long double>(d + 1));
  std::vector<long double> a(d);
  long double x = 1.0L;
  for (std::size_t i = 0; i < d; ++i) {
    x /= phi;
    a[i] = x;
  }
  return a;
}

}  // namespace

QuadratureResult mahler_qmc(const LaurentPolynomial& p, double tol, const MeasureOptions& opt) {
  if (!(tol > 0)) throw DomainError("mahler_measure: tol must be positive");
  if (auto t = trivial_measure(p)) return *t;
  const QmcIntegrand f(p);
  QuadratureResult r;
  r.method = Method::quasi_monte_carlo;
  r.statistical = true;
  const std::size_t d = f.dimension();
  if (d > 7) throw DomainError("mahler_measure: too many variables for the QMC engine");
  if (d == 0) {
    r.value = f(nullptr);
    r.evaluations = 1;
    r.statistical = false;
    r.method = Method::exact;
    r.note = "Jensen reduction to a constant";
    return r;
  }
  const auto alpha = rd_alphas(d);
  const int batches = std::max(2, opt.qmc_batches);
  std::mt19937_64 eng(opt.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<double>> shifts(static_cast<std::size_t>(batches), std::vector<double>(d));
  for (auto& s : shifts)
    for (double& x : s) x = unit(eng);

  constexpr long long kChunk = 4096;
  std::vector<CompensatedSum> batch_sum(static_cast<std::size_t>(batches));
  long long done = 0;  // points per batch evaluated so far
  for (long long target = 1LL << 12;; target *= 2) {
    const long long fresh = target - done;
    const long long chunks_per_batch = fresh / kChunk;
    const std::size_t jobs = static_cast<std::size_t>(chunks_per_batch * batches);
    std::vector<double> part(jobs, 0.0);
    parallel_for(jobs, opt.threads, [&](std::size_t job) {
      const std::size_t b = job / static_cast<std::size_t>(chunks_per_batch);
      const long long c = static_cast<long long>(job % static_cast<std::size_t>(chunks_per_batch));
      const long long start = done + c * kChunk;
      CompensatedSum acc;
      std::array<double, 8> u{};
      for (long long j = start; j < start + kChunk; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
          long double x = shifts[b][i] + static_cast<long double>(j + 1) * alpha[i];
          u[i] = static_cast<double>(x - std::floor(x));
        }
        acc.add(f(u.data()));
      }
      part[job] = acc.value();
    });
    for (std::size_t job = 0; job < jobs; ++job) batch_sum[job / static_cast<std::size_t>(chunks_per_batch)].add(part[job]);
    done = target;
    r.evaluations = done * batches;
    std::vector<double> means;
    for (const auto& s : batch_sum) means.push_back(s.value() / static_cast<double>(done));
    const double mean = ordered_sum(means) / batches;
    CompensatedSum var;
    for (double m : means) var.add((m - mean) * (m - mean));
    const double stderr_ = std::sqrt(var.value() / (batches - 1) / batches);
    r.value = mean;
    r.error_estimate = 3.0 * stderr_;
    if (r.error_estimate <= tol) break;
    if (2 * r.evaluations > opt.max_evaluations) {
      r.converged = false;
      r.note = "evaluation budget exhausted";
      break;
    }
  }
  if (f.reduced() && r.note.empty()) r.note = "Jensen-reduced in one variable";
  return r;
}

QuadratureResult mahler_measure(const LaurentPolynomial& p, double tol, const MeasureOptions& opt) {
  QuadratureResult r = mahler_trapezoid(p, tol, opt);
  if (r.converged || !opt.allow_fallback) return r;
  QuadratureResult q = mahler_qmc(p, tol, opt);
  q.evaluations += r.evaluations;
  q.note = "fallback from tensor-trapezoid (" + r.note + ")" + (q.note.empty() ? "" : "; " + q.note);
  return q;
}

QuadratureResult mahler_family(double k, double tol, unsigned threads) {
  if (!(tol > 0)) throw DomainError("mahler_family: tol must be positive");
  // m = (1/pi^2) int_0^pi int_0^pi g(2 cos a + 2 cos b - k) db da.
  const double inner_tol = tol * 0.1;
  auto breakpoints = [](std::vector<double> cuts) {
    std::vector<double> pts{0.0};
    std::vector<double> inside;
    for (double c : cuts)
      if (c > -1.0 && c < 1.0) inside.push_back(std::acos(c));
    std::sort(inside.begin(), inside.end());
    for (double x : inside)
      if (x - pts.back() > 1e-14) pts.push_back(x);
    if (kPi - pts.back() > 1e-14) pts.push_back(kPi); else pts.back() = kPi;
    return pts;
  };
  auto inner = [&](double a, long long& evals, double& err) {
    const double u = 2.0 * std::cos(a) - k;
    const auto pts = breakpoints({(2.0 - u) / 2.0, (-2.0 - u) / 2.0});
    double total = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      auto res = tanh_sinh([u](double b) { return jensen_g(u + 2.0 * std::cos(b)); }, pts[i], pts[i + 1], inner_tol);
      total += res.value;
      evals += res.evaluations;
      err = std::max(err, res.error);
    }
    return total;
  };
  const auto outer_pts = breakpoints({(-4.0 + k) / 2.0, k / 2.0, (4.0 + k) / 2.0});
  QuadratureResult r;
  r.method = Method::family_reduction;
  double inner_err = 0;
  CompensatedSum total;
  double outer_err = 0;
  (void)threads;
  for (std::size_t i = 0; i + 1 < outer_pts.size(); ++i) {
    auto res = tanh_sinh([&](double a) { return inner(a, r.evaluations, inner_err); }, outer_pts[i], outer_pts[i + 1],
                         tol * kPi * kPi * 0.5);
    total.add(res.value);
    outer_err += res.error;
  }
  r.value = total.value() / (kPi * kPi);
  r.error_estimate = (outer_err + kPi * inner_err) / (kPi * kPi);
  r.converged = r.error_estimate <= tol;
  if (!r.converged) r.note = "tolerance not reached at maximum tanh-sinh level";
  return r;
}

EquivalenceResult verify_homogeneous_equivalence(long k, double tol, const MeasureOptions& opt) {
  EquivalenceResult out;
  out.quartic = mahler_measure(family_quartic(k), tol, opt);
  out.laurent = mahler_measure(family_laurent(k), tol, opt);
  out.difference = std::abs(out.quartic.value - out.laurent.value);
  return out;
}

}  // namespace k3ml::mahler
