#pragma once

#include <string>
#include <vector>

#include "qpas/gegenbauer.hpp"
#include "qpas/scheme.hpp"

namespace qpas {

struct hypothesis_record {
  int s = 0;
  int t = 0;
  bool antipodal = false;
  bool strength_ok = false;  // t >= 2s - 3
  bool applicable = false;
};

hypothesis_record check_applicability(int s, int t, bool antipodal);

/// Expected tri-diagonal band of the dual intersection matrix:
/// super[e] = entry (e, e+1), sub[e] = entry (e+1, e), e = 0..s-1.
/// Empty vectors signal that the closed forms degenerate (division by zero).
struct b1star_band {
  std::vector<Rat> super;
  std::vector<Rat> sub;
  bool valid = false;
};

b1star_band expected_b1star_band(int n, int s, long long x_size);

/// Closed-form multiplicities: harm_dim(n, i) for i <= s-2, then
/// |X|/2 - C(n+s-4, s-3) and |X|/2 - C(n+s-3, s-2).
std::vector<Rat> expected_multiplicities(int n, int s, long long x_size);

template <class S>
struct clause_result {
  bool pass = true;
  S deviation = S(0);
  std::string witness;

  void record(const S& dev, double tol, const std::string& where) {
    S a = abs_value(dev);
    if (a > deviation) deviation = a;
    if (!is_zero_within(dev, tol) && pass) {
      pass = false;
      witness = where;
    }
  }
};

/// P_1(i) = (-1)^i for every i.
template <class S>
clause_result<S> check_p1_signs(const scheme_parameters<S>& pr, const tolerance_policy& tol) {
  clause_result<S> out;
  for (int i = 0; i <= pr.s; ++i) {
    S expect = from_int<S>(i % 2 == 0 ? 1 : -1);
    S dev = pr.P[static_cast<std::size_t>(i)][1] - expect;
    out.record(dev, tol.zero, "P_1(" + std::to_string(i) + ")");
  }
  return out;
}

/// Q_j(2i+1) = (-1)^j Q_j(2i); for even s additionally Q_j(s) = 0 for odd j.
template <class S>
clause_result<S> check_q_parity(const scheme_parameters<S>& pr, const tolerance_policy& tol) {
  clause_result<S> out;
  for (int i = 0; 2 * i + 1 <= pr.s; ++i)
    for (int j = 0; j <= pr.s; ++j) {
      S expect = pr.Q[static_cast<std::size_t>(2 * i)][static_cast<std::size_t>(j)];
      if (j % 2 == 1) expect = -expect;
      S dev = pr.Q[static_cast<std::size_t>(2 * i + 1)][static_cast<std::size_t>(j)] - expect;
      out.record(dev, tol.zero,
                 "Q_" + std::to_string(j) + "(" + std::to_string(2 * i + 1) + ")");
    }
  if (pr.s % 2 == 0 && pr.s >= 2)
    for (int j = 1; j <= pr.s - 1; j += 2) {
      S dev = pr.Q[static_cast<std::size_t>(pr.s)][static_cast<std::size_t>(j)];
      out.record(dev, tol.zero, "Q_" + std::to_string(j) + "(s)");
    }
  return out;
}

template <class S>
clause_result<S> check_multiplicities(const scheme_parameters<S>& pr, int n,
                                      const tolerance_policy& tol) {
  clause_result<S> out;
  const std::vector<Rat> expect = expected_multiplicities(n, pr.s, pr.x_size);
  for (int i = 0; i <= pr.s; ++i) {
    S dev = pr.multiplicities[static_cast<std::size_t>(i)] -
            from_rat<S>(expect[static_cast<std::size_t>(i)]);
    out.record(dev, tol.zero, "m_" + std::to_string(i));
  }
  return out;
}

/// q_{ij}^mu = 0 whenever i + j + mu is odd.
template <class S>
clause_result<S> check_krein_parity(const scheme_parameters<S>& pr,
                                    const tolerance_policy& tol) {
  clause_result<S> out;
  for (int i = 0; i <= pr.s; ++i)
    for (int j = 0; j <= pr.s; ++j)
      for (int mu = 0; mu <= pr.s; ++mu) {
        if ((i + j + mu) % 2 == 0) continue;
        out.record(pr.krein.at(i, j, mu), tol.zero,
                   "q_{" + std::to_string(i) + "," + std::to_string(j) + "}^" +
                       std::to_string(mu));
      }
  return out;
}

/// Tri-diagonality of B_1* plus every closed-form band entry.
template <class S>
clause_result<S> check_b1star(const scheme_parameters<S>& pr, int n,
                              const tolerance_policy& tol) {
  clause_result<S> out;
  const int s = pr.s;
  if (s < 1) return out;
  for (int i = 0; i <= s; ++i)
    for (int j = 0; j <= s; ++j) {
      if (std::abs(i - j) > 1) {
        out.record(pr.b1_star[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                   tol.zero,
                   "B1*(" + std::to_string(i) + "," + std::to_string(j) + ") off band");
      } else if (i == j) {
        out.record(pr.b1_star[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                   tol.zero, "B1* diagonal (" + std::to_string(i) + ")");
      }
    }
  const b1star_band band = expected_b1star_band(n, s, pr.x_size);
  if (!band.valid) {
    out.pass = false;
    out.witness = "closed forms degenerate for these parameters";
    return out;
  }
  for (int e = 0; e < s; ++e) {
    S dev = pr.b1_star[static_cast<std::size_t>(e)][static_cast<std::size_t>(e) + 1] -
            from_rat<S>(band.super[static_cast<std::size_t>(e)]);
    out.record(dev, tol.zero, "B1*(" + std::to_string(e) + "," + std::to_string(e + 1) + ")");
    dev = pr.b1_star[static_cast<std::size_t>(e) + 1][static_cast<std::size_t>(e)] -
          from_rat<S>(band.sub[static_cast<std::size_t>(e)]);
    out.record(dev, tol.zero, "B1*(" + std::to_string(e + 1) + "," + std::to_string(e) + ")");
  }
  return out;
}

template <class S>
struct theorem_report {
  hypothesis_record hypotheses;
  clause_result<S> p1_signs;
  clause_result<S> q_parity;
  clause_result<S> multiplicities;
  clause_result<S> krein_parity;
  clause_result<S> b1_star;
  bool all_pass = false;
};

template <class S>
theorem_report<S> check_theorem(const scheme_parameters<S>& pr, int n,
                                const hypothesis_record& hyp, const tolerance_policy& tol) {
  theorem_report<S> rep;
  rep.hypotheses = hyp;
  rep.p1_signs = check_p1_signs(pr, tol);
  rep.q_parity = check_q_parity(pr, tol);
  rep.multiplicities = check_multiplicities(pr, n, tol);
  rep.krein_parity = check_krein_parity(pr, tol);
  rep.b1_star = check_b1star(pr, n, tol);
  rep.all_pass = rep.p1_signs.pass && rep.q_parity.pass && rep.multiplicities.pass &&
                 rep.krein_parity.pass && rep.b1_star.pass;
  return rep;
}

}  // namespace qpas
