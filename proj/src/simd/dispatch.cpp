#include <cstdlib>
#include <string_view>

#include "udngc/simd/kernels.hpp"

namespace udngc::simd {

#if defined(UDNGC_HAVE_AVX2)
const KernelTable& avx2_kernel_table();
#endif

const KernelTable* avx2_kernels() {
#if defined(UDNGC_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const KernelTable& select_backend() {
  const char* forced = std::getenv("UDNGC_SIMD");
  if (forced != nullptr && std::string_view(forced) == "scalar") return scalar_kernels();
  if (const KernelTable* avx2 = avx2_kernels()) return *avx2;
  return scalar_kernels();
}

}  // namespace

const KernelTable& active_kernels() {
  static const KernelTable& table = select_backend();
  return table;
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::scalar};
  if (avx2_kernels() != nullptr) out.push_back(Backend::avx2);
  return out;
}

void squared_distances(std::span<const double> xs, std::span<const double> ys, double qx,
                       double qy, std::span<double> out) {
  active_kernels().squared_distances(xs.data(), ys.data(), xs.size(), qx, qy, out.data());
}

double interference_sum(std::span<const double> r2, std::span<const double> gains, double scale,
                        double eta) {
  return active_kernels().interference_sum(r2.data(), gains.data(), r2.size(), scale, eta);
}

std::size_t count_within(std::span<const double> d2, double radius2) {
  return active_kernels().count_within(d2.data(), d2.size(), radius2);
}

void select_within(std::span<const double> d2, double radius2, std::vector<std::uint32_t>& out) {
  const std::size_t base = out.size();
  out.resize(base + d2.size());
  const std::size_t n =
      active_kernels().select_within(d2.data(), d2.size(), radius2, out.data() + base);
  out.resize(base + n);
}

}  // namespace udngc::simd
