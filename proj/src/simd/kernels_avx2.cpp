// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <cmath>

#include "udngc/simd/kernels.hpp"

namespace udngc::simd {

namespace {

void squared_distances_avx2(const double* xs, const double* ys, std::size_t n, double qx,
                            double qy, double* out) {
  const __m256d vqx = _mm256_set1_pd(qx);
  const __m256d vqy = _mm256_set1_pd(qy);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vqx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vqy);
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
  }
  for (; i < n; ++i) {
    const double dx = xs[i] - qx;
    const double dy = ys[i] - qy;
    out[i] = dx * dx + dy * dy;
  }
}

// r2^(-k) for small positive integer k by repeated multiplication.
inline __m256d inverse_power(__m256d r2, int k) {
  const __m256d inv = _mm256_div_pd(_mm256_set1_pd(1.0), r2);
  __m256d acc = inv;
  for (int j = 1; j < k; ++j) acc = _mm256_mul_pd(acc, inv);
  return acc;
}

double interference_sum_avx2(const double* r2, const double* gains, std::size_t n, double scale,
                             double eta) {
  const double half = 0.5 * eta;
  const int k = static_cast<int>(half);
  // Non-integer eta/2 needs pow(); not worth a vector implementation.
  if (static_cast<double>(k) != half || k < 1 || k > 8) {
    return scalar_kernels().interference_sum(r2, gains, n, scale, eta);
  }
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d term = _mm256_mul_pd(_mm256_loadu_pd(gains + i),
                                       inverse_power(_mm256_loadu_pd(r2 + i), k));
    acc = _mm256_add_pd(acc, term);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) {
    double p = 1.0 / r2[i];
    double term = p;
    for (int j = 1; j < k; ++j) term *= p;
    sum += gains[i] * term;
  }
  return scale * sum;
}

std::size_t count_within_avx2(const double* d2, std::size_t n, double radius2) {
  const __m256d vr = _mm256_set1_pd(radius2);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const int mask = _mm256_movemask_pd(_mm256_cmp_pd(_mm256_loadu_pd(d2 + i), vr, _CMP_LE_OQ));
    count += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask)));
  }
  for (; i < n; ++i) count += d2[i] <= radius2 ? 1 : 0;
  return count;
}

std::size_t select_within_avx2(const double* d2, std::size_t n, double radius2,
                               std::uint32_t* out) {
  const __m256d vr = _mm256_set1_pd(radius2);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    unsigned mask = static_cast<unsigned>(
        _mm256_movemask_pd(_mm256_cmp_pd(_mm256_loadu_pd(d2 + i), vr, _CMP_LE_OQ)));
    while (mask != 0) {
      const int lane = __builtin_ctz(mask);
      out[count++] = static_cast<std::uint32_t>(i + static_cast<std::size_t>(lane));
      mask &= mask - 1;
    }
  }
  for (; i < n; ++i) {
    if (d2[i] <= radius2) out[count++] = static_cast<std::uint32_t>(i);
  }
  return count;
}

}  // namespace

const KernelTable& avx2_kernel_table() {
  static const KernelTable table{Backend::avx2,          "avx2",
                                 squared_distances_avx2, interference_sum_avx2,
                                 count_within_avx2,      select_within_avx2};
  return table;
}

}  // namespace udngc::simd
