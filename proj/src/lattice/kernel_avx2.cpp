#include <immintrin.h>

#include <cmath>

#include "k3ml/lattice/kernel.hpp"
#include "k3ml/parallel.hpp"

namespace k3ml::lattice {

namespace {

inline __m256d abs_pd(__m256d x) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x); }

// Lane-wise Neumaier step.
inline void neumaier(__m256d& sum, __m256d& comp, __m256d x) {
  const __m256d t = _mm256_add_pd(sum, x);
  const __m256d big = _mm256_cmp_pd(abs_pd(sum), abs_pd(x), _CMP_GE_OQ);
  const __m256d a = _mm256_add_pd(_mm256_sub_pd(sum, t), x);
  const __m256d b = _mm256_add_pd(_mm256_sub_pd(x, t), sum);
  comp = _mm256_add_pd(comp, _mm256_blendv_pd(b, a, big));
  sum = t;
}

}  // namespace

LineSum line_sum_avx2_impl(const LineSpec& spec) {
  const long n = spec.t_end - spec.t_begin + 1;
  const long blocks = n > 0 ? n / 4 : 0;
  __m256d sum[LineSpec::kMaxNumerators], comp[LineSpec::kMaxNumerators];
  for (int i = 0; i < LineSpec::kMaxNumerators; ++i) {
    sum[i] = _mm256_setzero_pd();
    comp[i] = _mm256_setzero_pd();
  }
  const __m256d q2 = _mm256_set1_pd(spec.q2), q1 = _mm256_set1_pd(spec.q1), q0 = _mm256_set1_pd(spec.q0);
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d t = _mm256_setr_pd(static_cast<double>(spec.t_begin), static_cast<double>(spec.t_begin + 1),
                             static_cast<double>(spec.t_begin + 2), static_cast<double>(spec.t_begin + 3));
  const __m256d step = _mm256_set1_pd(4.0);
  for (long b = 0; b < blocks; ++b) {
    const __m256d q = _mm256_add_pd(_mm256_mul_pd(_mm256_add_pd(_mm256_mul_pd(q2, t), q1), t), q0);
    __m256d qs;
    if (spec.int_exponent > 0) {
      qs = q;
      for (int e = 1; e < spec.int_exponent; ++e) qs = _mm256_mul_pd(qs, q);
    } else {
      alignas(32) double lanes[4];
      _mm256_store_pd(lanes, q);
      for (double& x : lanes) x = std::pow(x, spec.real_exponent);
      qs = _mm256_load_pd(lanes);
    }
    const __m256d inv = _mm256_div_pd(one, qs);
    for (int i = 0; i < spec.numerators; ++i) {
      const auto& c = spec.num[static_cast<std::size_t>(i)];
      __m256d p = _mm256_set1_pd(c[static_cast<std::size_t>(spec.num_degree)]);
      for (int d = spec.num_degree; d-- > 0;)
        p = _mm256_add_pd(_mm256_mul_pd(p, t), _mm256_set1_pd(c[static_cast<std::size_t>(d)]));
      neumaier(sum[i], comp[i], _mm256_mul_pd(p, inv));
    }
    t = _mm256_add_pd(t, step);
  }
  LineSpec rest = spec;
  rest.t_begin = spec.t_begin + 4 * blocks;
  const LineSum tail = line_sum_scalar(rest);
  LineSum out;
  for (int i = 0; i < spec.numerators; ++i) {
    alignas(32) double s[4], c[4];
    _mm256_store_pd(s, sum[i]);
    _mm256_store_pd(c, comp[i]);
    CompensatedSum acc;
    for (int l = 0; l < 4; ++l) acc.add(s[l]);
    for (int l = 0; l < 4; ++l) acc.add(c[l]);
    acc.add(tail.value[static_cast<std::size_t>(i)]);
    out.value[static_cast<std::size_t>(i)] = acc.value();
  }
  return out;
}

}  // namespace k3ml::lattice
