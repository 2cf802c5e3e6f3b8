#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <vector>

#include "qpas/kernels.hpp"
#include "test_util.hpp"

namespace k = qpas::kernels;

TEST_CASE("int32 dot: scalar and AVX2 agree exactly") {
  testutil::lcg rng;
  for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{7}, std::size_t{8},
                        std::size_t{31}, std::size_t{100}, std::size_t{1031}}) {
    std::vector<std::int32_t> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = static_cast<std::int32_t>(rng.below(2000001) - 1000000);
      b[i] = static_cast<std::int32_t>(rng.below(2000001) - 1000000);
    }
    const std::int64_t ref = k::dot_i32_scalar(a.data(), b.data(), n);
    CHECK(k::dot_i32(a.data(), b.data(), n) == ref);
    if (k::avx2_available()) CHECK(k::dot_i32_avx2(a.data(), b.data(), n) == ref);
  }
}

TEST_CASE("f64 dot: variants agree to rounding") {
  testutil::lcg rng;
  for (std::size_t n : {std::size_t{0}, std::size_t{3}, std::size_t{4}, std::size_t{17},
                        std::size_t{256}, std::size_t{999}}) {
    std::vector<double> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = (rng.below(2001) - 1000) / 997.0;
      b[i] = (rng.below(2001) - 1000) / 991.0;
    }
    const double ref = k::dot_f64_scalar(a.data(), b.data(), n);
    const double got = k::dot_f64(a.data(), b.data(), n);
    CHECK(std::abs(got - ref) <= 1e-9 * std::max(1.0, std::abs(ref)));
    if (k::avx2_available()) {
      const double v = k::dot_f64_avx2(a.data(), b.data(), n);
      CHECK(std::abs(v - ref) <= 1e-9 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("and-popcount: variants agree with a naive loop") {
  testutil::lcg rng;
  for (std::size_t words : {std::size_t{0}, std::size_t{1}, std::size_t{3}, std::size_t{4},
                            std::size_t{5}, std::size_t{64}, std::size_t{257}}) {
    std::vector<std::uint64_t> a(words), b(words);
    for (std::size_t i = 0; i < words; ++i) {
      a[i] = rng.next() | (rng.next() << 31);
      b[i] = rng.next() | (rng.next() << 31);
    }
    std::uint64_t naive = 0;
    for (std::size_t i = 0; i < words; ++i) naive += std::popcount(a[i] & b[i]);
    CHECK(k::and_popcount_scalar(a.data(), b.data(), words) == naive);
    CHECK(k::and_popcount(a.data(), b.data(), words) == naive);
    if (k::avx2_available()) CHECK(k::and_popcount_avx2(a.data(), b.data(), words) == naive);
  }
}

TEST_CASE("joint class histogram equals mask-popcount counting") {
  testutil::lcg rng;
  const int nc = 5;
  for (std::size_t n : {std::size_t{1}, std::size_t{37}, std::size_t{288}}) {
    std::vector<std::uint8_t> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = static_cast<std::uint8_t>(rng.below(nc));
      b[i] = static_cast<std::uint8_t>(rng.below(nc));
    }
    std::vector<std::uint32_t> hist(nc * nc);
    k::joint_class_histogram_scalar(a.data(), b.data(), n, nc, hist.data());

    // The bit-row route the production triple counter uses.
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(nc) * 2 * words, 0);
    for (std::size_t z = 0; z < n; ++z) {
      rows[(a[z] * 2 + 0) * words + z / 64] |= std::uint64_t{1} << (z % 64);
      rows[(b[z] * 2 + 1) * words + z / 64] |= std::uint64_t{1} << (z % 64);
    }
    for (int i = 0; i < nc; ++i)
      for (int j = 0; j < nc; ++j) {
        const std::uint64_t c = k::and_popcount(&rows[(i * 2 + 0) * words],
                                                &rows[(j * 2 + 1) * words], words);
        CHECK(c == hist[static_cast<std::size_t>(i) * nc + j]);
      }
  }
}

TEST_CASE("dispatch reports a coherent ISA") {
  const char* isa = k::active_isa();
  if (k::avx2_available())
    CHECK(std::string(isa) == "avx2");
  else
    CHECK(std::string(isa) == "scalar");
}
