#include "qpas/kernels.hpp"

namespace qpas::kernels {

#if QPAS_HAVE_AVX2_TU

static bool detect_avx2() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

bool avx2_available() {
  static const bool ok = detect_avx2();
  return ok;
}

#else

// No AVX2 translation unit in this build; forward the names to scalar so the
// symbols always exist.
bool avx2_available() { return false; }

std::int64_t dot_i32_avx2(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  return dot_i32_scalar(a, b, n);
}
double dot_f64_avx2(const double* a, const double* b, std::size_t n) {
  return dot_f64_scalar(a, b, n);
}
std::uint64_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t words) {
  return and_popcount_scalar(a, b, words);
}

#endif

const char* active_isa() { return avx2_available() ? "avx2" : "scalar"; }

std::int64_t dot_i32(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  return avx2_available() ? dot_i32_avx2(a, b, n) : dot_i32_scalar(a, b, n);
}

double dot_f64(const double* a, const double* b, std::size_t n) {
  return avx2_available() ? dot_f64_avx2(a, b, n) : dot_f64_scalar(a, b, n);
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t words) {
  return avx2_available() ? and_popcount_avx2(a, b, words) : and_popcount_scalar(a, b, words);
}

}  // namespace qpas::kernels
