#pragma once

// Data-parallel inner loops of the simulator. Each kernel has a scalar
// reference implementation and, where the CPU supports it, an AVX2 variant.
// The active backend is chosen once at first use; UDNGC_SIMD=scalar|avx2
// forces a specific one.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace udngc::simd {

enum class Backend { scalar, avx2 };

struct KernelTable {
  Backend backend;
  std::string_view name;

  // out[i] = (xs[i] - qx)^2 + (ys[i] - qy)^2. Results are bit-identical
  // across backends (no fused multiply-add).
  void (*squared_distances)(const double* xs, const double* ys, std::size_t n, double qx,
                            double qy, double* out);

  // sum_i scale * gains[i] * r2[i]^(-eta/2). Backends agree to rounding.
  double (*interference_sum)(const double* r2, const double* gains, std::size_t n,
                             double scale, double eta);

  // Number of entries with d2[i] <= radius2.
  std::size_t (*count_within)(const double* d2, std::size_t n, double radius2);

  // Appends the indices i with d2[i] <= radius2 in ascending order; returns
  // the number appended.
  std::size_t (*select_within)(const double* d2, std::size_t n, double radius2,
                               std::uint32_t* out);
};

const KernelTable& scalar_kernels();
// Null when the build or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

const KernelTable& active_kernels();
std::vector<Backend> available_backends();

// Convenience wrappers over the active backend.
void squared_distances(std::span<const double> xs, std::span<const double> ys, double qx,
                       double qy, std::span<double> out);
double interference_sum(std::span<const double> r2, std::span<const double> gains, double scale,
                        double eta);
std::size_t count_within(std::span<const double> d2, double radius2);
void select_within(std::span<const double> d2, double radius2, std::vector<std::uint32_t>& out);

}  // namespace udngc::simd
