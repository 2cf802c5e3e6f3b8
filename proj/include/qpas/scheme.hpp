#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpas/errors.hpp"
#include "qpas/pointset.hpp"

namespace qpas {

/// Pair-class table: entry (x, y) is the spectrum class of x.y, with the
/// diagonal in class 0.
struct class_matrix {
  int n = 0;
  int s = 0;
  std::vector<std::uint8_t> idx;
  std::uint8_t at(int x, int y) const {
    return idx[static_cast<std::size_t>(x) * n + y];
  }
};

template <class S>
class_matrix build_classes(const spectrum_info<S>& sp, const canonical_spectrum<S>& canon) {
  class_matrix cm;
  cm.n = sp.count;
  cm.s = static_cast<int>(canon.spec.alpha.size()) - 1;
  cm.idx.assign(static_cast<std::size_t>(cm.n) * cm.n, 0);
  for (int x = 0; x < cm.n; ++x)
    for (int y = 0; y < cm.n; ++y) {
      if (x == y) continue;
      const std::uint8_t w = sp.which[static_cast<std::size_t>(x) * cm.n + y];
      if (w == 0xFF || w >= canon.class_of_value.size())
        throw unclassified_pair(x, y, "no spectrum assignment");
      const int cls = canon.class_of_value[w];
      if (cls < 1 || cls > cm.s)
        throw unclassified_pair(x, y, "value index " + std::to_string(w));
      cm.idx[static_cast<std::size_t>(x) * cm.n + y] = static_cast<std::uint8_t>(cls);
    }
  return cm;
}

/// Verified symmetric association scheme: valencies and the full table of
/// intersection numbers p_{ij}^k.
struct association_scheme {
  int s = 0;
  long long x_size = 0;
  std::vector<long long> valencies;  // size s+1
  std::vector<long long> p;          // (s+1)^3

  long long pval(int i, int j, int k) const {
    const std::size_t m = static_cast<std::size_t>(s) + 1;
    return p[(static_cast<std::size_t>(i) * m + static_cast<std::size_t>(j)) * m +
             static_cast<std::size_t>(k)];
  }
};

/// Exhaustive O(|X|^3) triple counting. Every ordered pair is checked against
/// the reference pair of its class; the first disagreement (row-major order)
/// is thrown as a not_a_scheme witness.
association_scheme intersection_numbers(const class_matrix& cm, int threads = 1);

/// B_i(k, j) = p_{i,k}^j.
std::vector<std::vector<long long>> intersection_matrix(const association_scheme& sch, int i);

// ---------------------------------------------------------------------------
// Bose-Mesner algebra in the D-basis: an element is its coefficient vector
// (a_0, ..., a_s) meaning sum_i a_i D_i.

template <class S>
std::vector<S> bm_multiply(const association_scheme& sch, const std::vector<S>& a,
                           const std::vector<S>& b) {
  const int m = sch.s + 1;
  std::vector<S> out(static_cast<std::size_t>(m), S(0));
  for (int i = 0; i < m; ++i) {
    if (a[static_cast<std::size_t>(i)] == S(0)) continue;
    for (int j = 0; j < m; ++j) {
      if (b[static_cast<std::size_t>(j)] == S(0)) continue;
      S prod = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
      for (int k = 0; k < m; ++k) {
        const long long pv = sch.pval(i, j, k);
        if (pv == 0) continue;
        S term = prod * from_int<S>(static_cast<long>(pv));
        out[static_cast<std::size_t>(k)] += term;
      }
    }
  }
  return out;
}

template <class S>
struct idempotent_basis {
  std::vector<std::vector<S>> coef;  // coef[i] = E_i over the D-basis
  std::vector<long long> ranks;      // multiplicities m_i
  std::string ordering;              // "p1_sign" or "rank_fallback"
};

namespace detail {

template <class S>
bool vec_is_zero(const std::vector<S>& v, double tol) {
  for (const S& x : v)
    if (!is_zero_within(x, tol)) return false;
  return true;
}

template <class S>
std::vector<S> vec_sub(const std::vector<S>& a, const std::vector<S>& b) {
  std::vector<S> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

/// trace(sum a_i D_i) = |X| * a_0; multiplicities come out as near-integers.
template <class S>
long long integer_rank(const S& coef0, long long xsize, double tol) {
  if constexpr (is_exact_v<S>) {
    Rat m = coef0 * Rat(static_cast<long>(xsize));
    if (m.get_den() != 1) throw split_failure("idempotent trace is not an integer");
    return static_cast<long long>(m.get_num().get_si());
  } else {
    const double m = coef0 * static_cast<double>(xsize);
    const double r = std::round(m);
    if (std::abs(m - r) > std::max(tol * xsize, 1e-6))
      throw split_failure("idempotent trace is far from an integer");
    return static_cast<long long>(r);
  }
}

}  // namespace detail

/// Primitive idempotents as coefficient vectors over the D-basis. E_i for
/// i <= s-2 comes straight from the degree-i polynomial values at the alphas;
/// the residual I - sum E_i is split by diagonalizing a deterministic generic
/// element of the algebra restricted to the 2-dimensional leftover, and the
/// two pieces are ordered so D_1's eigenvalue on E_{s-1} is (-1)^{s-1}.
template <class S>
idempotent_basis<S> idempotents(const association_scheme& sch,
                                const inner_product_spectrum<S>& spec,
                                const gegenbauer_basis& basis,
                                const tolerance_policy& tol) {
  const int s = sch.s;
  const int m = s + 1;
  const long long xsize = sch.x_size;
  const Rat inv_x = make_rat(1, static_cast<long>(xsize));

  idempotent_basis<S> out;
  out.coef.assign(static_cast<std::size_t>(m), std::vector<S>());
  out.ranks.assign(static_cast<std::size_t>(m), 0);
  out.ordering = "p1_sign";

  if (s == 0) {
    out.coef[0] = {S(1)};
    out.ranks[0] = 1;
    return out;
  }

  for (int i = 0; i <= s - 2; ++i) {
    std::vector<S> e(static_cast<std::size_t>(m));
    for (int j = 0; j <= s; ++j) {
      S v = basis.eval(i, spec.alpha[static_cast<std::size_t>(j)]) * from_rat<S>(inv_x);
      e[static_cast<std::size_t>(j)] = std::move(v);
    }
    out.coef[static_cast<std::size_t>(i)] = std::move(e);
  }

  for (int i = 0; i <= s - 2; ++i) {
    std::vector<S> sq = bm_multiply(sch, out.coef[static_cast<std::size_t>(i)],
                                    out.coef[static_cast<std::size_t>(i)]);
    if (!detail::vec_is_zero(detail::vec_sub(sq, out.coef[static_cast<std::size_t>(i)]),
                             tol.zero))
      throw split_failure("E_" + std::to_string(i) +
                          " is not idempotent (design hypotheses do not hold)");
    for (int j = 0; j < i; ++j) {
      std::vector<S> pr = bm_multiply(sch, out.coef[static_cast<std::size_t>(i)],
                                      out.coef[static_cast<std::size_t>(j)]);
      if (!detail::vec_is_zero(pr, tol.zero))
        throw split_failure("E_" + std::to_string(i) + " E_" + std::to_string(j) +
                            " is not zero");
    }
  }

  // Residual = I - sum of the known idempotents.
  std::vector<S> residual(static_cast<std::size_t>(m), S(0));
  residual[0] = S(1);
  for (int i = 0; i <= s - 2; ++i)
    residual = detail::vec_sub(residual, out.coef[static_cast<std::size_t>(i)]);
  if (detail::vec_is_zero(residual, tol.zero))
    throw split_failure("residual projector vanishes");

  // Deterministic generic coefficients (small LCG), retried on degeneracy.
  std::uint64_t lcg = 0x9e3779b97f4a7c15ull;
  auto next_coef = [&lcg]() {
    lcg = lcg * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<long>((lcg >> 33) % 997 + 1);
  };

  std::vector<S> ea, eb;
  bool split_done = false;
  std::string last_reason = "no attempt";
  for (int attempt = 0; attempt < 8 && !split_done; ++attempt) {
    std::vector<S> generic(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) generic[static_cast<std::size_t>(i)] = from_int<S>(next_coef());
    std::vector<S> u = bm_multiply(sch, generic, residual);
    std::vector<S> u2 = bm_multiply(sch, generic, u);

    // Solve u2 = a*u + b*residual on the best-conditioned coordinate pair.
    int t1 = -1, t2 = -1;
    if constexpr (is_exact_v<S>) {
      for (int c1 = 0; c1 < m && t1 < 0; ++c1)
        for (int c2 = c1 + 1; c2 < m; ++c2) {
          Rat det = u[static_cast<std::size_t>(c1)] * residual[static_cast<std::size_t>(c2)] -
                    u[static_cast<std::size_t>(c2)] * residual[static_cast<std::size_t>(c1)];
          if (det != 0) {
            t1 = c1;
            t2 = c2;
            break;
          }
        }
    } else {
      double best = 0;
      for (int c1 = 0; c1 < m; ++c1)
        for (int c2 = c1 + 1; c2 < m; ++c2) {
          const double det =
              std::abs(u[static_cast<std::size_t>(c1)] * residual[static_cast<std::size_t>(c2)] -
                       u[static_cast<std::size_t>(c2)] * residual[static_cast<std::size_t>(c1)]);
          if (det > best) {
            best = det;
            t1 = c1;
            t2 = c2;
          }
        }
      if (best <= tol.zero) t1 = -1;
    }
    if (t1 < 0) {
      last_reason = "generic element acts as a scalar on the residual";
      continue;
    }

    const S det = u[static_cast<std::size_t>(t1)] * residual[static_cast<std::size_t>(t2)] -
                  u[static_cast<std::size_t>(t2)] * residual[static_cast<std::size_t>(t1)];
    const S a = (u2[static_cast<std::size_t>(t1)] * residual[static_cast<std::size_t>(t2)] -
                 u2[static_cast<std::size_t>(t2)] * residual[static_cast<std::size_t>(t1)]) /
                det;
    const S b = (u[static_cast<std::size_t>(t1)] * u2[static_cast<std::size_t>(t2)] -
                 u[static_cast<std::size_t>(t2)] * u2[static_cast<std::size_t>(t1)]) /
                det;

    // Eigenvalues of the generic element on the residual: roots of
    // z^2 - a z - b.
    S disc = a * a + S(4) * b;
    S root = S(0);
    if constexpr (is_exact_v<S>) {
      auto r = is_rational_square(disc);
      if (!r)
        throw split_failure(
            "residual eigenvalues are irrational on the exact backend; rerun on the float "
            "backend");
      root = *r;
      if (root == 0) {
        last_reason = "repeated eigenvalue";
        continue;
      }
    } else {
      if (disc < -tol.zero) throw split_failure("complex residual eigenvalues");
      root = std::sqrt(std::max(0.0, disc));
      if (root <= tol.zero) {
        last_reason = "repeated eigenvalue";
        continue;
      }
    }
    const S theta1 = (a + root) / 2;
    const S theta2 = (a - root) / 2;

    // Projector onto the theta1 eigenspace inside the residual.
    std::vector<S> cand(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c)
      cand[static_cast<std::size_t>(c)] =
          (u[static_cast<std::size_t>(c)] - theta2 * residual[static_cast<std::size_t>(c)]) /
          (theta1 - theta2);
    std::vector<S> cand2 = detail::vec_sub(residual, cand);

    std::vector<S> sq = bm_multiply(sch, cand, cand);
    if (!detail::vec_is_zero(detail::vec_sub(sq, cand), tol.zero)) {
      last_reason = "split candidate is not idempotent";
      continue;
    }
    std::vector<S> cross = bm_multiply(sch, cand, cand2);
    if (!detail::vec_is_zero(cross, tol.zero)) {
      last_reason = "split candidates are not orthogonal";
      continue;
    }
    if (detail::vec_is_zero(cand, tol.zero) || detail::vec_is_zero(cand2, tol.zero)) {
      last_reason = "split produced a zero idempotent";
      continue;
    }
    ea = std::move(cand);
    eb = std::move(cand2);
    split_done = true;
  }
  if (!split_done) throw split_failure(last_reason);

  // D_1 eigenvalue on each piece decides which is E_{s-1}.
  auto d1_sign = [&](const std::vector<S>& e) -> int {
    std::vector<S> e1(static_cast<std::size_t>(m), S(0));
    e1[1] = S(1);
    std::vector<S> prod = bm_multiply(sch, e1, e);
    const S lam = prod[0] / e[0];
    if (scalar_eq(lam, S(1), 0.5)) return 1;
    if (scalar_eq(lam, S(-1), 0.5)) return -1;
    return 0;
  };
  const int want = (s - 1) % 2 == 0 ? 1 : -1;
  const int sa = s >= 1 ? d1_sign(ea) : 0;
  const int sb = s >= 1 ? d1_sign(eb) : 0;
  bool a_first;
  if (sa == want && sb == -want) {
    a_first = true;
  } else if (sb == want && sa == -want) {
    a_first = false;
  } else {
    // Signs cannot disambiguate; fall back to descending rank.
    out.ordering = "rank_fallback";
    a_first = !(ea[0] < eb[0]);
  }
  out.coef[static_cast<std::size_t>(s - 1)] = a_first ? std::move(ea) : std::move(eb);
  out.coef[static_cast<std::size_t>(s)] = a_first ? std::move(eb) : std::move(ea);

  for (int i = 0; i <= s; ++i)
    out.ranks[static_cast<std::size_t>(i)] =
        detail::integer_rank(out.coef[static_cast<std::size_t>(i)][0], xsize, tol.zero);
  long long total = 0;
  for (long long r : out.ranks) {
    if (r <= 0) throw split_failure("nonpositive multiplicity");
    total += r;
  }
  if (total != xsize) throw split_failure("multiplicities do not sum to |X|");
  return out;
}

template <class S>
struct eigenmatrices_result {
  std::vector<std::vector<S>> P, Q;  // P[i][j] = P_j(i), Q[i][j] = Q_j(i)
  std::vector<S> multiplicities;
};

template <class S>
eigenmatrices_result<S> eigenmatrices(const association_scheme& sch,
                                      const idempotent_basis<S>& idem,
                                      const tolerance_policy& tol) {
  const int s = sch.s;
  const int m = s + 1;
  const long long xsize = sch.x_size;

  eigenmatrices_result<S> out;
  out.P.assign(static_cast<std::size_t>(m), std::vector<S>(static_cast<std::size_t>(m), S(0)));
  out.Q = out.P;
  out.multiplicities.resize(static_cast<std::size_t>(m));

  for (int j = 0; j < m; ++j)
    out.multiplicities[static_cast<std::size_t>(j)] =
        from_int<S>(static_cast<long>(idem.ranks[static_cast<std::size_t>(j)]));

  // Q_j(i) = |X| * (D_i coefficient of E_j).
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      S v = idem.coef[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] *
            from_int<S>(static_cast<long>(xsize));
      out.Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(v);
    }

  // P_j(i) = k_j * Q_i(j) / m_i  (the eigenvalue of D_j on E_i's eigenspace).
  for (int i = 0; i < m; ++i) {
    const S& mi = out.multiplicities[static_cast<std::size_t>(i)];
    if (is_zero_within(mi, tol.zero)) throw non_diagonalizable("zero multiplicity");
    for (int j = 0; j < m; ++j) {
      S v = from_int<S>(static_cast<long>(sch.valencies[static_cast<std::size_t>(j)])) *
            out.Q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] / mi;
      out.P[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(v);
    }
  }

  // P Q = |X| I.
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      S acc = S(0);
      for (int j = 0; j < m; ++j)
        acc += out.P[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
               out.Q[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      S expect = i == k ? from_int<S>(static_cast<long>(xsize)) : S(0);
      if (!is_zero_within<S>(acc - expect, tol.zero * static_cast<double>(xsize)))
        throw non_diagonalizable("PQ != |X| I");
    }

  // Row recurrence sum_l p_{1j}^l P_l(mu) = P_j(mu) P_1(mu).
  for (int mu = 0; mu < m; ++mu)
    for (int j = 0; j < m; ++j) {
      S acc = S(0);
      for (int l = 0; l < m; ++l) {
        const long long pv = sch.pval(1, j, l);
        if (pv == 0) continue;
        acc += from_int<S>(static_cast<long>(pv)) *
               out.P[static_cast<std::size_t>(mu)][static_cast<std::size_t>(l)];
      }
      S rhs = out.P[static_cast<std::size_t>(mu)][static_cast<std::size_t>(j)] *
              out.P[static_cast<std::size_t>(mu)][1];
      if (!is_zero_within<S>(acc - rhs, tol.zero * static_cast<double>(xsize)))
        throw non_diagonalizable("B_1 eigen relation violated");
    }

  return out;
}

template <class S>
struct krein_result {
  int s = 0;
  std::vector<S> q;  // (s+1)^3, q_{ij}^k
  S min_entry = S(0);

  const S& at(int i, int j, int k) const {
    const std::size_t m = static_cast<std::size_t>(s) + 1;
    return q[(static_cast<std::size_t>(i) * m + static_cast<std::size_t>(j)) * m +
             static_cast<std::size_t>(k)];
  }
};

/// Structure constants of the entrywise product of idempotents, via
/// q_{ij}^mu = (1/|X|) sum_l P_mu(l) Q_i(l) Q_j(l). Throws negative_krein
/// when an entry is below -tol.
template <class S>
krein_result<S> krein_numbers(const std::vector<std::vector<S>>& P,
                              const std::vector<std::vector<S>>& Q, long long xsize,
                              const tolerance_policy& tol) {
  const int m = static_cast<int>(P.size());
  const int s = m - 1;
  krein_result<S> out;
  out.s = s;
  out.q.assign(static_cast<std::size_t>(m) * m * m, S(0));
  bool first = true;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      for (int mu = 0; mu < m; ++mu) {
        S acc = S(0);
        for (int l = 0; l < m; ++l)
          acc += P[static_cast<std::size_t>(mu)][static_cast<std::size_t>(l)] *
                 Q[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)] *
                 Q[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
        S v = acc / from_int<S>(static_cast<long>(xsize));
        if (first || v < out.min_entry) {
          out.min_entry = v;
          first = false;
        }
        out.q[(static_cast<std::size_t>(i) * m + static_cast<std::size_t>(j)) * m +
              static_cast<std::size_t>(mu)] = v;
        out.q[(static_cast<std::size_t>(j) * m + static_cast<std::size_t>(i)) * m +
              static_cast<std::size_t>(mu)] = std::move(v);
      }
    }
  if constexpr (is_exact_v<S>) {
    if (out.min_entry < 0) {
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          for (int k = 0; k < m; ++k)
            if (out.at(i, j, k) < 0)
              throw negative_krein({i, j, k, rat_str(out.at(i, j, k))});
    }
  } else {
    if (out.min_entry < -tol.zero) {
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          for (int k = 0; k < m; ++k)
            if (out.at(i, j, k) < -tol.zero)
              throw negative_krein({i, j, k, std::to_string(out.at(i, j, k))});
    }
  }
  return out;
}

/// B_1*(k, j) = q_{1,k}^j.
template <class S>
std::vector<std::vector<S>> dual_intersection_matrix(const krein_result<S>& kr) {
  const int m = kr.s + 1;
  std::vector<std::vector<S>> b(static_cast<std::size_t>(m),
                                std::vector<S>(static_cast<std::size_t>(m), S(0)));
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < m; ++j)
      b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = kr.at(1, k, j);
  return b;
}

template <class S>
bool is_tridiagonal(const std::vector<std::vector<S>>& mat, const tolerance_policy& tol) {
  const int m = static_cast<int>(mat.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (std::abs(i - j) > 1 &&
          !is_zero_within(mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                          tol.zero))
        return false;
  return true;
}

template <class S>
struct scheme_parameters {
  int s = 0;
  long long x_size = 0;
  std::vector<long long> valencies;
  std::vector<std::vector<S>> P, Q;
  std::vector<S> multiplicities;
  krein_result<S> krein;
  std::vector<std::vector<std::vector<long long>>> b_matrices;  // B_0..B_s
  std::vector<std::vector<S>> b1_star;
  bool q_polynomial = false;
  std::string idempotent_ordering;
};

/// Full parameter extraction for a verified scheme.
template <class S>
scheme_parameters<S> compute_parameters(const association_scheme& sch,
                                        const inner_product_spectrum<S>& spec,
                                        const gegenbauer_basis& basis,
                                        const tolerance_policy& tol) {
  scheme_parameters<S> out;
  out.s = sch.s;
  out.x_size = sch.x_size;
  out.valencies = sch.valencies;
  idempotent_basis<S> idem = idempotents(sch, spec, basis, tol);
  out.idempotent_ordering = idem.ordering;
  eigenmatrices_result<S> em = eigenmatrices(sch, idem, tol);
  out.P = std::move(em.P);
  out.Q = std::move(em.Q);
  out.multiplicities = std::move(em.multiplicities);
  out.krein = krein_numbers(out.P, out.Q, out.x_size, tol);
  for (int i = 0; i <= sch.s; ++i) out.b_matrices.push_back(intersection_matrix(sch, i));
  out.b1_star = dual_intersection_matrix(out.krein);
  out.q_polynomial = is_tridiagonal(out.b1_star, tol);
  return out;
}

}  // namespace qpas
