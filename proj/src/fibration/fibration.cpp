#include <numeric>

#include "k3ml/fibration/curve.hpp"

namespace k3ml::fibration {

using exact::PolyQ;
using exact::Rational;

std::string FiberReport::place_label() const {
  if (!place) return "inf";
  return place->to_string();
}

Curve<Rational> at_infinity(const Curve<Rational>& e, int weight, const std::string& var) {
  if (weight < 1) throw DomainError("classify_fibers: weight must be >= 1");
  const std::pair<const PolyQ*, int> parts[] = {{&e.a1, 1}, {&e.a2, 2}, {&e.a3, 3}, {&e.a4, 4}, {&e.a6, 6}};
  for (const auto& [p, i] : parts)
    if (p->degree() > i * weight)
      throw DomainError("classify_fibers: deg a" + std::to_string(i) + " = " + std::to_string(p->degree()) +
                        " exceeds " + std::to_string(i) + " * weight");
  Curve<Rational> out;
  out.name = e.name + "@inf";
  out.a1 = e.a1.reciprocal(weight, var);
  out.a2 = e.a2.reciprocal(2 * weight, var);
  out.a3 = e.a3.reciprocal(3 * weight, var);
  out.a4 = e.a4.reciprocal(4 * weight, var);
  out.a6 = e.a6.reciprocal(6 * weight, var);
  return out;
}

namespace {

FiberReport make_report(std::optional<PolyQ> place, int place_degree, int dv, std::optional<int> cv, bool irreducible) {
  FiberReport r;
  r.place = std::move(place);
  r.place_degree = place_degree;
  r.delta_valuation = dv;
  r.c4_valuation = cv;
  r.irreducible_place = irreducible;
  r.kodaira = r.multiplicative() ? "I_" + std::to_string(dv) : "additive (not classified)";
  return r;
}

}  // namespace

std::vector<FiberReport> classify_fibers(const Curve<Rational>& e, int weight) {
  const Curve<Rational> inf = at_infinity(e, weight);
  const auto inv = invariants(e);
  std::vector<FiberReport> out;
  for (const auto& f : exact::squarefree_factor(inv.delta).factors) {
    const std::optional<int> cv = inv.c4.valuation(f.factor);
    out.push_back(make_report(f.factor, f.factor.degree(), f.multiplicity, cv, f.irreducible));
  }
  const auto inv_inf = invariants(inf);
  const PolyQ sigma = PolyQ::variable_poly("sigma");
  const int dv = *inv_inf.delta.valuation(sigma);
  if (dv >= 1) out.push_back(make_report(std::nullopt, 1, dv, inv_inf.c4.valuation(sigma), true));
  return out;
}

int valuation_sum(const std::vector<FiberReport>& fibers) {
  int total = 0;
  for (const auto& f : fibers) total += f.delta_valuation * f.place_degree;
  return total;
}

std::vector<int> component_counts(const std::vector<FiberReport>& fibers) {
  std::vector<int> m;
  for (const auto& f : fibers) {
    if (!f.multiplicative()) throw DomainError("component_counts: additive fiber at " + f.place_label());
    for (int i = 0; i < f.place_degree; ++i) m.push_back(f.delta_valuation);
  }
  return m;
}

int shioda_rank(const ShiodaInput& in) {
  if (in.rho < 2) throw DomainError("shioda_rank: Picard number must be >= 2");
  int defect = 0;
  for (int m : in.fiber_component_counts) {
    if (m < 1) throw DomainError("shioda_rank: component count must be >= 1");
    defect += m - 1;
  }
  const int r = in.rho - 2 - defect;
  if (r < 0)
    throw DomainError("shioda_rank: inconsistent data, rho = " + std::to_string(in.rho) +
                      " gives negative rank " + std::to_string(r));
  return r;
}

}  // namespace k3ml::fibration
