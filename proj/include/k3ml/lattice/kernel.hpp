#pragma once

#include <array>
#include <string>

namespace k3ml::lattice {

// One straight run of lattice points, parametrized by an integer t in [t_begin, t_end].
// Along the run the denominator is q(t) = q2 t^2 + q1 t + q0 > 0 and each numerator
// is a polynomial in t (ascending coefficients). The kernel returns, per numerator,
// sum_t num_i(t) / q(t)^s.
struct LineSpec {
  static constexpr int kMaxDegree = 8;
  static constexpr int kMaxNumerators = 2;
  std::array<std::array<double, kMaxDegree + 1>, kMaxNumerators> num{};
  int num_degree = 0;
  int numerators = 1;
  double q2 = 0, q1 = 0, q0 = 0;
  int int_exponent = 0;  // > 0 selects the repeated-multiplication path
  double real_exponent = 0;  // used when int_exponent == 0
  long t_begin = 0, t_end = -1;
};

struct LineSum {
  std::array<double, LineSpec::kMaxNumerators> value{};
};

enum class Kernel { automatic, scalar, avx2 };

// True when the binary carries the AVX2 kernel and the CPU supports AVX2 and FMA.
bool avx2_available();

// Kernel used for Kernel::automatic: AVX2 when available, unless K3ML_SIMD=scalar.
Kernel resolve_kernel(Kernel requested);
std::string kernel_name(Kernel k);

LineSum line_sum_scalar(const LineSpec& spec);
// Throws DomainError when AVX2 is unavailable.
LineSum line_sum_avx2(const LineSpec& spec);
LineSum line_sum(const LineSpec& spec, Kernel k);

}  // namespace k3ml::lattice
