#include "k3ml/lattice/kernel.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

#include "k3ml/error.hpp"
#include "k3ml/parallel.hpp"

namespace k3ml::lattice {

#ifdef K3ML_HAVE_AVX2
LineSum line_sum_avx2_impl(const LineSpec& spec);
#endif

bool avx2_available() {
#if defined(K3ML_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

Kernel resolve_kernel(Kernel requested) {
  if (requested != Kernel::automatic) return requested;
  const char* env = std::getenv("K3ML_SIMD");
  if (env && std::strcmp(env, "scalar") == 0) return Kernel::scalar;
  return avx2_available() ? Kernel::avx2 : Kernel::scalar;
}

std::string kernel_name(Kernel k) {
  switch (k) {
    case Kernel::automatic: return "automatic";
    case Kernel::scalar: return "scalar";
    case Kernel::avx2: return "avx2";
  }
  return "unknown";
}

LineSum line_sum_scalar(const LineSpec& spec) {
  std::array<CompensatedSum, LineSpec::kMaxNumerators> acc;
  for (long it = spec.t_begin; it <= spec.t_end; ++it) {
    const double t = static_cast<double>(it);
    const double q = (spec.q2 * t + spec.q1) * t + spec.q0;
    double qs;
    if (spec.int_exponent > 0) {
      qs = q;
      for (int e = 1; e < spec.int_exponent; ++e) qs *= q;
    } else {
      qs = std::pow(q, spec.real_exponent);
    }
    const double inv = 1.0 / qs;
    for (int i = 0; i < spec.numerators; ++i) {
      const auto& c = spec.num[static_cast<std::size_t>(i)];
      double p = c[static_cast<std::size_t>(spec.num_degree)];
      for (int d = spec.num_degree; d-- > 0;) p = p * t + c[static_cast<std::size_t>(d)];
      acc[static_cast<std::size_t>(i)].add(p * inv);
    }
  }
  LineSum out;
  for (int i = 0; i < spec.numerators; ++i) out.value[static_cast<std::size_t>(i)] = acc[static_cast<std::size_t>(i)].value();
  return out;
}

LineSum line_sum_avx2(const LineSpec& spec) {
#ifdef K3ML_HAVE_AVX2
  if (avx2_available()) return line_sum_avx2_impl(spec);
#endif
  (void)spec;
  throw DomainError("AVX2 kernel not available on this machine");
}

LineSum line_sum(const LineSpec& spec, Kernel k) {
  return resolve_kernel(k) == Kernel::avx2 ? line_sum_avx2(spec) : line_sum_scalar(spec);
}

}  // namespace k3ml::lattice
