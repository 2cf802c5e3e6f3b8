#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpas/cluster.hpp"
#include "qpas/errors.hpp"
#include "qpas/gegenbauer.hpp"
#include "qpas/kernels.hpp"
#include "qpas/parallel.hpp"
#include "qpas/scalar.hpp"

namespace qpas {

/// Finite subset of the unit sphere S^{n-1}. Points are validated to unit
/// norm on construction (literal on the exact backend, within tol.zero on
/// the float backend) and are immutable afterwards.
template <class S>
class point_set {
 public:
  point_set(int dim, std::vector<std::vector<S>> pts, tolerance_policy tol = {})
      : dim_(dim), tol_(tol) {
    if (dim < 1) throw invalid_point_set("dimension must be positive");
    if (pts.empty()) throw invalid_point_set("no points");
    coords_.reserve(pts.size() * static_cast<std::size_t>(dim));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (static_cast<int>(pts[i].size()) != dim)
        throw invalid_point_set("point " + std::to_string(i) + " has " +
                                std::to_string(pts[i].size()) + " coordinates, expected " +
                                std::to_string(dim));
      S norm2 = S(0);
      for (const S& c : pts[i]) {
        S sq = c * c;
        norm2 += sq;
      }
      S dev = norm2 - S(1);
      if (!is_zero_within(dev, tol_.zero))
        throw invalid_point_set("point " + std::to_string(i) + " is not unit-norm");
      for (S& c : pts[i]) coords_.push_back(std::move(c));
    }
    count_ = static_cast<int>(pts.size());
  }

  int dim() const { return dim_; }
  int size() const { return count_; }
  const tolerance_policy& tol() const { return tol_; }

  const S* point(int i) const {
    return coords_.data() + static_cast<std::size_t>(i) * dim_;
  }
  S coord(int i, int k) const {
    return coords_[static_cast<std::size_t>(i) * dim_ + k];
  }

 private:
  int dim_;
  int count_ = 0;
  tolerance_policy tol_;
  std::vector<S> coords_;  // row-major
};

template <class S>
struct gram_matrix {
  int count = 0;
  std::vector<S> g;  // row-major count x count
  const S& at(int x, int y) const {
    return g[static_cast<std::size_t>(x) * count + y];
  }
};

namespace detail {

inline gram_matrix<double> compute_gram_impl(const point_set<double>& ps, int threads) {
  gram_matrix<double> gm;
  const int n = ps.size();
  const int d = ps.dim();
  gm.count = n;
  gm.g.assign(static_cast<std::size_t>(n) * n, 0.0);
  parallel_blocks(n, 16, threads, [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t x = lo; x < hi; ++x)
      for (std::int64_t y = 0; y <= x; ++y) {
        const double v =
            kernels::dot_f64(ps.point(static_cast<int>(x)), ps.point(static_cast<int>(y)),
                             static_cast<std::size_t>(d));
        gm.g[static_cast<std::size_t>(x) * n + y] = v;
        gm.g[static_cast<std::size_t>(y) * n + x] = v;
      }
  });
  return gm;
}

// Exact Gram. When every coordinate fits a common denominator small enough
// for 64-bit dot products, the inner loop runs on int32 lanes; otherwise it
// falls back to rational dots.
inline gram_matrix<Rat> compute_gram_impl(const point_set<Rat>& ps, int threads) {
  gram_matrix<Rat> gm;
  const int n = ps.size();
  const int d = ps.dim();
  gm.count = n;
  gm.g.assign(static_cast<std::size_t>(n) * n, Rat(0));

  Int den(1);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < d; ++k) {
      Int dk = ps.coord(i, k).get_den();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), dk.get_mpz_t());
    }

  bool fits = mpz_fits_slong_p(den.get_mpz_t()) && den.get_si() <= (1 << 20);
  std::vector<std::int32_t> scaled;
  if (fits) {
    scaled.resize(static_cast<std::size_t>(n) * d);
    for (int i = 0; i < n && fits; ++i)
      for (int k = 0; k < d; ++k) {
        Rat s = ps.coord(i, k) * Rat(den);
        Int num = s.get_num();
        if (s.get_den() != 1 || !mpz_fits_slong_p(num.get_mpz_t()) ||
            std::abs(num.get_si()) > (1 << 20)) {
          fits = false;
          break;
        }
        scaled[static_cast<std::size_t>(i) * d + k] = static_cast<std::int32_t>(num.get_si());
      }
  }

  if (fits) {
    const Rat den2 = make_rat(Int(1), den * den);
    parallel_blocks(n, 16, threads, [&](std::int64_t lo, std::int64_t hi) {
      for (std::int64_t x = lo; x < hi; ++x)
        for (std::int64_t y = 0; y <= x; ++y) {
          const std::int64_t dot =
              kernels::dot_i32(scaled.data() + static_cast<std::size_t>(x) * d,
                               scaled.data() + static_cast<std::size_t>(y) * d,
                               static_cast<std::size_t>(d));
          Rat v = Rat(static_cast<long>(dot)) * den2;
          gm.g[static_cast<std::size_t>(x) * n + y] = v;
          gm.g[static_cast<std::size_t>(y) * n + x] = std::move(v);
        }
    });
  } else {
    parallel_blocks(n, 16, threads, [&](std::int64_t lo, std::int64_t hi) {
      for (std::int64_t x = lo; x < hi; ++x)
        for (std::int64_t y = 0; y <= x; ++y) {
          Rat acc(0);
          for (int k = 0; k < d; ++k)
            acc += ps.coord(static_cast<int>(x), k) * ps.coord(static_cast<int>(y), k);
          gm.g[static_cast<std::size_t>(x) * n + y] = acc;
          gm.g[static_cast<std::size_t>(y) * n + x] = std::move(acc);
        }
    });
  }
  return gm;
}

}  // namespace detail

template <class S>
gram_matrix<S> compute_gram(const point_set<S>& ps, int threads = 1) {
  return detail::compute_gram_impl(ps, threads);
}

/// A(X) before any ordering: the distinct off-diagonal inner products
/// (ascending) plus, per ordered pair, the index of its value.
template <class S>
struct spectrum_info {
  std::vector<S> values;               // ascending, size s
  std::vector<std::uint8_t> which;     // count*count; diagonal = 0xFF
  std::vector<long long> pair_counts;  // ordered pairs per value
  int count = 0;
  int degree() const { return static_cast<int>(values.size()); }
};

template <class S>
spectrum_info<S> spectrum(const point_set<S>& ps, const gram_matrix<S>& gm) {
  const int n = gm.count;
  std::vector<S> offdiag;
  offdiag.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) offdiag.push_back(gm.at(x, y));

  cluster_result<S> cl = cluster_values(offdiag, ps.tol().snap);
  if (cl.representatives.size() > 250)
    throw invalid_point_set("more than 250 distinct inner products");

  spectrum_info<S> out;
  out.count = n;
  out.values = cl.representatives;
  out.pair_counts.assign(out.values.size(), 0);
  out.which.assign(static_cast<std::size_t>(n) * n, 0xFF);
  std::size_t k = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) {
        const std::size_t rep = cl.assignment[k++];
        out.which[static_cast<std::size_t>(x) * n + y] = static_cast<std::uint8_t>(rep);
        out.pair_counts[rep] += 1;
      }

  // An off-diagonal value at 1 means two coincident points slipped through.
  if (!out.values.empty()) {
    S dev = out.values.back() - S(1);
    if (is_zero_within(dev, ps.tol().snap))
      throw invalid_point_set("duplicate points (off-diagonal inner product 1)");
  }
  return out;
}

struct antipodal_info {
  bool antipodal = false;
  std::vector<int> pair;  // pair[x] = index of -x, or -1
};

/// Detects the antipode of each point through the Gram matrix: for unit
/// vectors x.y = -1 exactly when y = -x.
template <class S>
antipodal_info is_antipodal(const gram_matrix<S>& gm, const tolerance_policy& tol) {
  const int n = gm.count;
  antipodal_info out;
  out.pair.assign(n, -1);
  out.antipodal = true;
  for (int x = 0; x < n; ++x) {
    int found = -1;
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      S dev = gm.at(x, y) + S(1);
      if (is_zero_within(dev, tol.snap)) {
        found = y;
        break;
      }
    }
    out.pair[x] = found;
    if (found < 0) out.antipodal = false;
  }
  if (out.antipodal)
    for (int x = 0; x < n; ++x)
      if (out.pair[out.pair[x]] != x) out.antipodal = false;
  return out;
}

/// A'(X) in the canonical order: alpha_0 = 1, alpha_1 = -1, then each
/// nonzero sign pair as (-beta, +beta) with the betas strictly decreasing
/// across pairs, and 0 last when present (s even).
template <class S>
struct inner_product_spectrum {
  std::vector<S> alpha;
  int s() const { return static_cast<int>(alpha.size()) - 1; }
};

template <class S>
struct canonical_spectrum {
  inner_product_spectrum<S> spec;
  std::vector<int> class_of_value;  // spectrum_info value index -> class 1..s
};

template <class S>
canonical_spectrum<S> canonical_ordering(const std::vector<S>& a_of_x, bool antipodal,
                                         const tolerance_policy& tol) {
  if (!antipodal) throw not_antipodal_spectrum("point set is not antipodal");
  const int s = static_cast<int>(a_of_x.size());
  canonical_spectrum<S> out;
  out.class_of_value.assign(a_of_x.size(), -1);

  int minus_one = -1, zero = -1;
  for (int i = 0; i < s; ++i) {
    S dplus = a_of_x[static_cast<std::size_t>(i)] + S(1);
    if (is_zero_within(dplus, tol.snap)) minus_one = i;
    if (is_zero_within(a_of_x[static_cast<std::size_t>(i)], tol.snap)) zero = i;
  }
  if (minus_one < 0) throw not_antipodal_spectrum("-1 is not an inner product");

  // Match the remaining values into sign pairs.
  std::vector<std::pair<int, int>> pairs;  // (negative index, positive index)
  std::vector<bool> used(a_of_x.size(), false);
  used[static_cast<std::size_t>(minus_one)] = true;
  if (zero >= 0) used[static_cast<std::size_t>(zero)] = true;
  for (int i = 0; i < s; ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    if (!(a_of_x[static_cast<std::size_t>(i)] < S(0))) continue;
    int mate = -1;
    for (int j = 0; j < s; ++j) {
      if (used[static_cast<std::size_t>(j)] || j == i) continue;
      S dev = a_of_x[static_cast<std::size_t>(i)] + a_of_x[static_cast<std::size_t>(j)];
      if (is_zero_within(dev, 2 * tol.snap)) {
        mate = j;
        break;
      }
    }
    if (mate < 0) throw not_antipodal_spectrum("inner products are not closed under negation");
    used[static_cast<std::size_t>(i)] = true;
    used[static_cast<std::size_t>(mate)] = true;
    pairs.emplace_back(i, mate);
  }
  for (int i = 0; i < s; ++i)
    if (!used[static_cast<std::size_t>(i)])
      throw not_antipodal_spectrum("inner products are not closed under negation");

  // values are ascending, so pairs came out with the most negative member
  // first: that orders the betas strictly decreasing already.
  std::vector<S>& alpha = out.spec.alpha;
  alpha.push_back(S(1));
  alpha.push_back(S(-1));
  out.class_of_value[static_cast<std::size_t>(minus_one)] = 1;
  int next = 2;
  for (auto [ni, pi] : pairs) {
    // Symmetrize so the pair invariant alpha_{2i+1} = -alpha_{2i} is literal.
    S beta = (a_of_x[static_cast<std::size_t>(pi)] - a_of_x[static_cast<std::size_t>(ni)]) / 2;
    alpha.push_back(-beta);
    alpha.push_back(beta);
    out.class_of_value[static_cast<std::size_t>(ni)] = next++;
    out.class_of_value[static_cast<std::size_t>(pi)] = next++;
  }
  if (zero >= 0) {
    alpha.push_back(S(0));
    out.class_of_value[static_cast<std::size_t>(zero)] = next++;
  }
  return out;
}

/// Largest t <= t_max for which every Gegenbauer moment sum
/// sum_{x,y} P_k(x.y), 1 <= k <= t, vanishes. The sums are assembled from
/// the spectrum's pair counts, so the test is exact on the exact backend.
template <class S>
int strength(const spectrum_info<S>& sp, const gegenbauer_basis& basis, int t_max,
             const tolerance_policy& tol) {
  if (t_max > basis.cap()) throw cap_exceeded(t_max, basis.cap());
  const long npts = sp.count;
  for (int k = 1; k <= t_max; ++k) {
    // Diagonal contributes |X| * P_k(1) = |X| * harm_dim.
    S total = from_rat<S>(Rat(harm_dim(basis.dim(), k)) * Rat(npts));
    for (std::size_t i = 0; i < sp.values.size(); ++i) {
      S term = basis.eval(k, sp.values[i]) * from_int<S>(sp.pair_counts[i]);
      total += term;
    }
    const double threshold =
        tol.zero * static_cast<double>(npts) * static_cast<double>(npts) *
        to_double(Rat(harm_dim(basis.dim(), k)));
    if (!is_zero_within(total, threshold)) return k - 1;
  }
  return t_max;
}

struct distance_distribution_result {
  std::vector<std::vector<long long>> per_point;  // count x (s+1)
  bool invariant = false;
};

/// Per-point distribution over spectrum classes (class 0 = the point itself).
template <class S>
distance_distribution_result distance_distribution(const spectrum_info<S>& sp,
                                                   const canonical_spectrum<S>& canon) {
  const int n = sp.count;
  const int s = static_cast<int>(canon.spec.alpha.size()) - 1;
  distance_distribution_result out;
  out.per_point.assign(static_cast<std::size_t>(n),
                       std::vector<long long>(static_cast<std::size_t>(s) + 1, 0));
  for (int x = 0; x < n; ++x) {
    out.per_point[static_cast<std::size_t>(x)][0] = 1;
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const std::uint8_t w = sp.which[static_cast<std::size_t>(x) * n + y];
      const int cls = canon.class_of_value[w];
      if (cls < 0) throw unclassified_pair(x, y, "value index " + std::to_string(w));
      out.per_point[static_cast<std::size_t>(x)][static_cast<std::size_t>(cls)] += 1;
    }
  }
  out.invariant = true;
  for (int x = 1; x < n; ++x)
    if (out.per_point[static_cast<std::size_t>(x)] != out.per_point[0]) {
      out.invariant = false;
      break;
    }
  return out;
}

}  // namespace qpas
