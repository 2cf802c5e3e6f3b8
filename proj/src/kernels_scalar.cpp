#include <algorithm>
#include <bit>

#include "qpas/kernels.hpp"

namespace qpas::kernels {

std::int64_t dot_i32_scalar(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i)
    acc += static_cast<std::int64_t>(a[i]) * static_cast<std::int64_t>(b[i]);
  return acc;
}

double dot_f64_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b,
                                  std::size_t words) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words; ++i) acc += std::popcount(a[i] & b[i]);
  return acc;
}

void joint_class_histogram_scalar(const std::uint8_t* a, const std::uint8_t* b,
                                  std::size_t n, int nc, std::uint32_t* out) {
  std::fill(out, out + static_cast<std::size_t>(nc) * nc, 0u);
  for (std::size_t z = 0; z < n; ++z)
    out[static_cast<std::size_t>(a[z]) * nc + b[z]] += 1;
}

}  // namespace qpas::kernels
