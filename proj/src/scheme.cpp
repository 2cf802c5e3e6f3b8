#include "qpas/scheme.hpp"

#include <algorithm>

#include "qpas/kernels.hpp"
#include "qpas/parallel.hpp"

namespace qpas {

namespace {

// Per-class bit rows: bit z of row(c, x) is set when class(x, z) = c.
struct class_bitrows {
  int n = 0;
  int classes = 0;
  int words = 0;
  std::vector<std::uint64_t> bits;

  const std::uint64_t* row(int c, int x) const {
    return bits.data() + (static_cast<std::size_t>(c) * n + x) * words;
  }
};

class_bitrows build_bitrows(const class_matrix& cm) {
  class_bitrows br;
  br.n = cm.n;
  br.classes = cm.s + 1;
  br.words = (cm.n + 63) / 64;
  br.bits.assign(static_cast<std::size_t>(br.classes) * br.n * br.words, 0);
  for (int x = 0; x < cm.n; ++x)
    for (int z = 0; z < cm.n; ++z) {
      const int c = cm.at(x, z);
      br.bits[(static_cast<std::size_t>(c) * br.n + x) * br.words +
              static_cast<std::size_t>(z) / 64] |= std::uint64_t{1} << (z % 64);
    }
  return br;
}

}  // namespace

association_scheme intersection_numbers(const class_matrix& cm, int threads) {
  const int n = cm.n;
  const int s = cm.s;
  const int m = s + 1;
  const class_bitrows br = build_bitrows(cm);

  association_scheme sch;
  sch.s = s;
  sch.x_size = n;
  sch.p.assign(static_cast<std::size_t>(m) * m * m, 0);

  // Reference pair per class: the first (x, y) in row-major order.
  std::vector<std::pair<int, int>> ref(static_cast<std::size_t>(m), {-1, -1});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int k = cm.at(x, y);
      if (ref[static_cast<std::size_t>(k)].first < 0) ref[static_cast<std::size_t>(k)] = {x, y};
    }
  for (int k = 0; k < m; ++k)
    if (ref[static_cast<std::size_t>(k)].first < 0)
      throw not_a_scheme({-1, -1, -1, -1, 0, 0, 0, 0});  // empty class cannot happen

  for (int k = 0; k < m; ++k) {
    const auto [rx, ry] = ref[static_cast<std::size_t>(k)];
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        sch.p[(static_cast<std::size_t>(i) * m + j) * m + k] = static_cast<long long>(
            kernels::and_popcount(br.row(i, rx), br.row(j, ry),
                                  static_cast<std::size_t>(br.words)));
  }

  // Exhaustive verification of every ordered pair against its class table.
  std::vector<scheme_violation> found(static_cast<std::size_t>((n + 15) / 16));
  std::vector<char> has_violation(found.size(), 0);
  parallel_blocks(n, 16, threads, [&](std::int64_t lo, std::int64_t hi) {
    const std::size_t slot = static_cast<std::size_t>(lo / 16);
    for (std::int64_t x = lo; x < hi && !has_violation[slot]; ++x)
      for (int y = 0; y < n && !has_violation[slot]; ++y) {
        const int k = cm.at(static_cast<int>(x), y);
        for (int i = 0; i < m && !has_violation[slot]; ++i)
          for (int j = 0; j < m; ++j) {
            const long long c = static_cast<long long>(
                kernels::and_popcount(br.row(i, static_cast<int>(x)), br.row(j, y),
                                      static_cast<std::size_t>(br.words)));
            if (c != sch.p[(static_cast<std::size_t>(i) * m + j) * m + k]) {
              found[slot] = {static_cast<int>(x), y, ref[static_cast<std::size_t>(k)].first,
                             ref[static_cast<std::size_t>(k)].second, i, j, c,
                             sch.p[(static_cast<std::size_t>(i) * m + j) * m + k]};
              has_violation[slot] = 1;
              break;
            }
          }
      }
  });
  for (std::size_t b = 0; b < found.size(); ++b)
    if (has_violation[b]) throw not_a_scheme(found[b]);

  sch.valencies.assign(static_cast<std::size_t>(m), 0);
  for (int y = 0; y < n; ++y) sch.valencies[cm.at(0, y)] += 1;
  long long total = 0;
  for (long long k : sch.valencies) total += k;
  if (total != n) throw not_a_scheme({0, 0, 0, 0, 0, 0, total, n});

  // Verified-scheme bookkeeping identities.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        const long long v = sch.pval(i, j, k);
        if (sch.pval(j, i, k) != v) throw not_a_scheme({0, 0, 0, 0, i, j, v, sch.pval(j, i, k)});
        if (sch.valencies[static_cast<std::size_t>(k)] * v !=
            sch.valencies[static_cast<std::size_t>(i)] * sch.pval(k, j, i))
          throw not_a_scheme({0, 0, 0, 0, i, j, v, sch.pval(k, j, i)});
      }

  return sch;
}

std::vector<std::vector<long long>> intersection_matrix(const association_scheme& sch, int i) {
  const int m = sch.s + 1;
  std::vector<std::vector<long long>> b(static_cast<std::size_t>(m),
                                        std::vector<long long>(static_cast<std::size_t>(m), 0));
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < m; ++j)
      b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = sch.pval(i, k, j);
  return b;
}

}  // namespace qpas
