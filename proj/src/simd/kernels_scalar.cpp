#include <cmath>

#include "udngc/simd/kernels.hpp"

namespace udngc::simd {

namespace {

void squared_distances_scalar(const double* xs, const double* ys, std::size_t n, double qx,
                              double qy, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - qx;
    const double dy = ys[i] - qy;
    out[i] = dx * dx + dy * dy;
  }
}

double interference_sum_scalar(const double* r2, const double* gains, std::size_t n, double scale,
                               double eta) {
  const double half = -0.5 * eta;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += gains[i] * std::pow(r2[i], half);
  return scale * sum;
}

std::size_t count_within_scalar(const double* d2, std::size_t n, double radius2) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += d2[i] <= radius2 ? 1 : 0;
  return count;
}

std::size_t select_within_scalar(const double* d2, std::size_t n, double radius2,
                                 std::uint32_t* out) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d2[i] <= radius2) out[count++] = static_cast<std::uint32_t>(i);
  }
  return count;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Backend::scalar,           "scalar",
                                 squared_distances_scalar,  interference_sum_scalar,
                                 count_within_scalar,       select_within_scalar};
  return table;
}

}  // namespace udngc::simd
