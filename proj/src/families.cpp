#include "qpas/families.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

namespace qpas {

point_set<Rat> cross_polytope(int n, tolerance_policy tol) {
  if (n < 2) throw construction_unavailable("cross-polytope needs n >= 2");
  std::vector<std::vector<Rat>> pts;
  pts.reserve(static_cast<std::size_t>(2) * n);
  for (int i = 0; i < n; ++i)
    for (int sign : {1, -1}) {
      std::vector<Rat> p(static_cast<std::size_t>(n), Rat(0));
      p[static_cast<std::size_t>(i)] = Rat(sign);
      pts.push_back(std::move(p));
    }
  return point_set<Rat>(n, std::move(pts), tol);
}

point_set<double> icosahedron(tolerance_policy tol) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double norm = std::sqrt(1.0 + phi * phi);
  std::vector<std::vector<double>> pts;
  for (int sa : {1, -1})
    for (int sb : {1, -1}) {
      pts.push_back({0.0, sa / norm, sb * phi / norm});
      pts.push_back({sa / norm, sb * phi / norm, 0.0});
      pts.push_back({sa * phi / norm, 0.0, sb / norm});
    }
  return point_set<double>(3, std::move(pts), tol);
}

point_set<double> simplex(int n, tolerance_policy tol) {
  if (n < 1) throw construction_unavailable("simplex needs n >= 1");
  const double scale = std::sqrt((n + 1.0) / n);
  std::vector<std::vector<double>> pts;
  for (int i = 0; i <= n; ++i) {
    std::vector<double> p(static_cast<std::size_t>(n) + 1, -scale / (n + 1.0));
    p[static_cast<std::size_t>(i)] += scale;
    pts.push_back(std::move(p));
  }
  return point_set<double>(n + 1, std::move(pts), tol);
}

namespace {

// Alternating k x k matrices over F_2 encoded as bitmasks of the strict
// upper triangle, index (i, j), i < j.
int triu_bit(int k, int i, int j) {
  int idx = 0;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      if (a == i && b == j) return idx;
      ++idx;
    }
  return -1;
}

bool alt_invertible(unsigned mask, int k) {
  // Row bitmasks of the symmetric matrix, then Gaussian elimination.
  std::vector<unsigned> rows(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (mask >> triu_bit(k, i, j) & 1u) {
        rows[static_cast<std::size_t>(i)] |= 1u << j;
        rows[static_cast<std::size_t>(j)] |= 1u << i;
      }
  int rank = 0;
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    for (int r = rank; r < k; ++r)
      if (rows[static_cast<std::size_t>(r)] >> col & 1u) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
    for (int r = 0; r < k; ++r)
      if (r != rank && (rows[static_cast<std::size_t>(r)] >> col & 1u))
        rows[static_cast<std::size_t>(r)] ^= rows[static_cast<std::size_t>(rank)];
    ++rank;
  }
  return rank == k;
}

// Deterministic backtracking for 2^{k-1} alternating matrices containing 0
// whose pairwise differences are all invertible (an orthogonal spread seed).
bool extend_spread(const std::vector<unsigned>& candidates, std::vector<unsigned>& chosen,
                   std::size_t want, std::size_t from, int k) {
  if (chosen.size() == want) return true;
  for (std::size_t c = from; c < candidates.size(); ++c) {
    const unsigned cand = candidates[c];
    bool ok = true;
    for (unsigned prev : chosen)
      if (prev != 0 && !alt_invertible(prev ^ cand, k)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(cand);
    if (extend_spread(candidates, chosen, want, c + 1, k)) return true;
    chosen.pop_back();
  }
  return false;
}

std::vector<unsigned> kerdock_masks(int k) {
  std::vector<unsigned> candidates;
  const unsigned total = 1u << (k * (k - 1) / 2);
  for (unsigned m = 1; m < total; ++m)
    if (alt_invertible(m, k)) candidates.push_back(m);
  std::vector<unsigned> chosen = {0u};
  const std::size_t want = static_cast<std::size_t>(1) << (k - 1);
  if (!extend_spread(candidates, chosen, want, 0, k))
    throw construction_unavailable("no alternating matrix spread found for k = " +
                                   std::to_string(k));
  return chosen;
}

int quad_form(unsigned mask, unsigned x, int k) {
  int acc = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if ((mask >> triu_bit(k, i, j) & 1u) && (x >> i & 1u) && (x >> j & 1u)) acc ^= 1;
  return acc;
}

}  // namespace

point_set<Rat> mub_from_bases(int dim, const std::vector<std::vector<std::vector<Rat>>>& bases,
                              tolerance_policy tol) {
  if (bases.empty()) throw construction_unavailable("no bases supplied");
  const Rat unbiased_sq = make_rat(1, dim);
  for (std::size_t b = 0; b < bases.size(); ++b) {
    if (static_cast<int>(bases[b].size()) != dim)
      throw construction_unavailable("basis " + std::to_string(b) + " has " +
                                     std::to_string(bases[b].size()) + " vectors, expected " +
                                     std::to_string(dim));
    for (const auto& v : bases[b])
      if (static_cast<int>(v.size()) != dim)
        throw construction_unavailable("basis " + std::to_string(b) +
                                       " has a vector of wrong dimension");
  }
  auto dot = [dim](const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat acc(0);
    for (int i = 0; i < dim; ++i)
      acc += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
    return acc;
  };
  for (std::size_t b = 0; b < bases.size(); ++b)
    for (int u = 0; u < dim; ++u)
      for (int v = u; v < dim; ++v) {
        const Rat ip = dot(bases[b][static_cast<std::size_t>(u)],
                           bases[b][static_cast<std::size_t>(v)]);
        if (ip != (u == v ? Rat(1) : Rat(0)))
          throw construction_unavailable("basis " + std::to_string(b) +
                                         " is not orthonormal");
      }
  for (std::size_t a = 0; a < bases.size(); ++a)
    for (std::size_t b = a + 1; b < bases.size(); ++b)
      for (int u = 0; u < dim; ++u)
        for (int v = 0; v < dim; ++v) {
          const Rat ip = dot(bases[a][static_cast<std::size_t>(u)],
                             bases[b][static_cast<std::size_t>(v)]);
          if (ip * ip != unbiased_sq)
            throw construction_unavailable("bases " + std::to_string(a) + " and " +
                                           std::to_string(b) + " are not unbiased");
        }

  std::vector<std::vector<Rat>> pts;
  pts.reserve(bases.size() * static_cast<std::size_t>(dim) * 2);
  for (const auto& basis : bases)
    for (const auto& v : basis) {
      pts.push_back(v);
      std::vector<Rat> neg(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
      pts.push_back(std::move(neg));
    }
  return point_set<Rat>(dim, std::move(pts), tol);
}

point_set<Rat> real_mub_design(int r, tolerance_policy tol) {
  if (r < 1) throw construction_unavailable("r must be >= 1");
  if (r > 2) throw construction_unavailable("real MUB construction implemented for r <= 2");
  const int k = 2 * r;
  const int dim = 1 << k;
  const Rat scale = make_rat(1, 1L << r);

  std::vector<std::vector<std::vector<Rat>>> bases;
  std::vector<std::vector<Rat>> standard;
  for (int x = 0; x < dim; ++x) {
    std::vector<Rat> e(static_cast<std::size_t>(dim), Rat(0));
    e[static_cast<std::size_t>(x)] = Rat(1);
    standard.push_back(std::move(e));
  }
  bases.push_back(std::move(standard));

  for (unsigned mask : kerdock_masks(k)) {
    std::vector<std::vector<Rat>> basis;
    for (unsigned a = 0; a < static_cast<unsigned>(dim); ++a) {
      std::vector<Rat> v(static_cast<std::size_t>(dim));
      for (unsigned x = 0; x < static_cast<unsigned>(dim); ++x) {
        const int sign_bit =
            quad_form(mask, x, k) ^ (std::popcount(a & x) & 1);
        v[static_cast<std::size_t>(x)] = sign_bit ? -scale : scale;
      }
      basis.push_back(std::move(v));
    }
    bases.push_back(std::move(basis));
  }
  return mub_from_bases(dim, bases, tol);
}

}  // namespace qpas
