#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "k3ml/lattice/kernel.hpp"
#include "k3ml/mahler/measure.hpp"
#include "k3ml/parallel.hpp"

namespace k3ml::lattice::detail {

struct ShellTotals {
  std::array<double, LineSpec::kMaxNumerators> value{};
  long long points = 0;
};

// make(r, lines) appends the runs covering shell r. Each shell is summed on its own
// and the shells are reduced in ascending order, so the result is independent of threads.
template <class MakeLines>
ShellTotals sum_shells(long radius, unsigned threads, Kernel kernel, MakeLines&& make) {
  const Kernel k = resolve_kernel(kernel);
  const std::size_t shells = static_cast<std::size_t>(radius);
  std::vector<std::array<double, LineSpec::kMaxNumerators>> partial(shells);
  std::vector<long long> counts(shells, 0);
  parallel_for(shells, threads, [&](std::size_t i) {
    const long r = static_cast<long>(i) + 1;
    std::vector<LineSpec> lines;
    make(r, lines);
    std::array<CompensatedSum, LineSpec::kMaxNumerators> acc;
    for (const auto& line : lines) {
      const LineSum s = line_sum(line, k);
      for (int j = 0; j < line.numerators; ++j) acc[static_cast<std::size_t>(j)].add(s.value[static_cast<std::size_t>(j)]);
      counts[i] += line.t_end - line.t_begin + 1;
    }
    for (std::size_t j = 0; j < acc.size(); ++j) partial[i][j] = acc[j].value();
  });
  ShellTotals out;
  for (std::size_t j = 0; j < LineSpec::kMaxNumerators; ++j) {
    CompensatedSum acc;
    for (const auto& p : partial) acc.add(p[j]);
    out.value[j] = acc.value();
  }
  for (long long c : counts) out.points += c;
  return out;
}

// Integral of a function homogeneous of degree -d over the exterior of [-1,1]^2:
// (1/(d-2)) times its integral along the boundary of the square.
inline double exterior_integral(const std::function<double(double, double)>& f, double d) {
  auto edge = [&](auto g) { return mahler::tanh_sinh(g, -1.0, 1.0, 1e-14).value; };
  const double boundary = edge([&](double t) { return f(1.0, t); }) + edge([&](double t) { return f(-1.0, t); }) +
                          edge([&](double t) { return f(t, 1.0); }) + edge([&](double t) { return f(t, -1.0); });
  return boundary / (d - 2.0);
}

}  // namespace k3ml::lattice::detail
