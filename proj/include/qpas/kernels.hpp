#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel inner loops behind the Gram assembly and the cubic
// triple-count verification. Each kernel has a scalar reference
// implementation and an AVX2 variant; the unsuffixed entry points dispatch
// at runtime and the two variants are equivalence-tested against each other.

namespace qpas::kernels {

/// True when the AVX2 variants are compiled in and the CPU supports them.
bool avx2_available();

/// "avx2" or "scalar" depending on what the dispatched entry points use.
const char* active_isa();

std::int64_t dot_i32_scalar(const std::int32_t* a, const std::int32_t* b, std::size_t n);
double dot_f64_scalar(const double* a, const double* b, std::size_t n);
std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);

/// out[a[z]*nc + b[z]] += 1 over z < n; out has nc*nc slots and is zeroed here.
void joint_class_histogram_scalar(const std::uint8_t* a, const std::uint8_t* b,
                                  std::size_t n, int nc, std::uint32_t* out);

// AVX2 variants. When the build lacks an AVX2 translation unit these forward
// to the scalar implementations (and avx2_available() reports false).
std::int64_t dot_i32_avx2(const std::int32_t* a, const std::int32_t* b, std::size_t n);
double dot_f64_avx2(const double* a, const double* b, std::size_t n);
std::uint64_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);

// Runtime-dispatched entry points.
std::int64_t dot_i32(const std::int32_t* a, const std::int32_t* b, std::size_t n);
double dot_f64(const double* a, const double* b, std::size_t n);
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);

}  // namespace qpas::kernels
