#include "qpas/appendix.hpp"

#include "qpas/errors.hpp"

namespace qpas {

namespace {

quad_expr q_rat(Rat u) { return {std::move(u), Rat(0)}; }
quad_expr q_rad(Rat v) { return {Rat(0), std::move(v)}; }

quad_expr operator+(const quad_expr& a, const quad_expr& b) { return {a.u + b.u, a.v + b.v}; }
quad_expr operator-(const quad_expr& a, const quad_expr& b) { return {a.u - b.u, a.v - b.v}; }
quad_expr operator-(const quad_expr& a) { return {-a.u, -a.v}; }

quad_expr mul(const quad_expr& a, const quad_expr& b, const Rat& alpha_sq) {
  return {a.u * b.u + a.v * b.v * alpha_sq, a.u * b.v + a.v * b.u};
}

Rat ll_rat(long long v) {
  Rat r;
  mpz_set_si(mpq_numref(r.get_mpq_t()), static_cast<long>(v));
  mpz_set_ui(mpq_denref(r.get_mpq_t()), 1);
  return r;
}

}  // namespace

std::optional<rat_matrix> appendix1_parameters::rationalized(const quad_matrix& m) const {
  rat_matrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].resize(m[i].size());
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      const quad_expr& e = m[i][j];
      if (e.v == 0) {
        out[i][j] = e.u;
      } else if (alpha) {
        out[i][j] = e.u + e.v * *alpha;
      } else {
        return std::nullopt;
      }
    }
  }
  return out;
}

appendix1_parameters appendix1(int n, long long N) {
  if (n < 3) throw parameter_out_of_range("appendix 1 requires n >= 3");
  const Rat nn = Rat(n);
  const Rat bign = ll_rat(N);
  // n(n+1)/2 < N <= n(n+1)(n+2)/6
  if (!(Rat(n) * Rat(n + 1) / 2 < bign && bign <= Rat(n) * Rat(n + 1) * Rat(n + 2) / 6))
    throw parameter_out_of_range("N outside (n(n+1)/2, n(n+1)(n+2)/6]");

  appendix1_parameters out;
  out.n = n;
  out.N = N;

  const Rat g = 3 * bign - nn * nn - 2 * nn;  // positive in range
  const Rat w = bign - nn;
  out.alpha_sq = g / ((nn + 2) * w);
  out.alpha = is_rational_square(out.alpha_sq);

  const Rat k2 = w * w * (nn + 2) / (nn * g);
  const Rat k4 = 2 * (nn - 1) * bign * (2 * bign - nn * nn - nn) / (nn * g);
  const Rat big_r = w *
                    (bign * bign * nn + 8 * bign * bign - 9 * nn * nn * bign -
                     18 * nn * bign + 2 * nn * nn * nn * nn + 8 * nn * nn * nn +
                     8 * nn * nn) /
                    (2 * nn * g * g);
  // (N-2n)/(2n) * sqrt((n+2)w/g) expressed as a multiple of alpha.
  const Rat s_coeff = (bign - 2 * nn) * (nn + 2) * w / (2 * nn * g);
  const Rat t_val = bign * w * w * (nn + 2) / (2 * nn * g * g);
  const Rat u_val = bign * bign * (nn - 1) * (2 * bign - nn * nn - nn) / (nn * g * g);
  const Rat v_val = w * w * (nn + 2) * (2 * bign - nn * nn - 2 * nn) / (nn * g * g);
  const Rat w2_val = 2 * bign * (nn - 1) * (2 * bign - nn * nn - nn) *
                     (2 * bign - nn * nn - 2 * nn) / (nn * g * g);
  const Rat y_val = 2 * bign *
                    (4 * bign * bign * nn - 4 * nn * nn * nn * bign + 6 * nn * nn * bign +
                     nn * nn * nn * nn * nn - 5 * nn * nn * nn - 10 * bign * bign +
                     10 * nn * bign - 2 * nn * nn) /
                    (nn * g * g);
  const Rat inv_alpha_coeff = (nn + 2) * w / g;  // 1/alpha = inv_alpha_coeff * alpha

  auto Z = [] { return q_rat(Rat(0)); };
  auto R1 = [] { return q_rat(Rat(1)); };

  out.B[0] = quad_matrix(5, std::vector<quad_expr>(5, Z()));
  for (int i = 0; i < 5; ++i) out.B[0][static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = R1();

  out.B[1] = quad_matrix(5, std::vector<quad_expr>(5, Z()));
  out.B[1][0][1] = R1();
  out.B[1][1][0] = R1();
  out.B[1][2][3] = R1();
  out.B[1][3][2] = R1();
  out.B[1][4][4] = R1();

  const quad_expr rm = q_rat(big_r) - q_rad(s_coeff);  // R - S
  const quad_expr rp = q_rat(big_r) + q_rad(s_coeff);  // R + S
  out.B[2] = {{Z(), Z(), R1(), Z(), Z()},
              {Z(), Z(), Z(), R1(), Z()},
              {q_rat(k2), Z(), rm, rp, q_rat(t_val)},
              {Z(), q_rat(k2), rp, rm, q_rat(t_val)},
              {Z(), Z(), q_rat(u_val), q_rat(u_val), q_rat(v_val)}};
  out.B[3] = {{Z(), Z(), Z(), R1(), Z()},
              {Z(), Z(), R1(), Z(), Z()},
              {Z(), q_rat(k2), rp, rm, q_rat(t_val)},
              {q_rat(k2), Z(), rm, rp, q_rat(t_val)},
              {Z(), Z(), q_rat(u_val), q_rat(u_val), q_rat(v_val)}};
  out.B[4] = {{Z(), Z(), Z(), Z(), R1()},
              {Z(), Z(), Z(), Z(), R1()},
              {Z(), Z(), q_rat(u_val), q_rat(u_val), q_rat(v_val)},
              {Z(), Z(), q_rat(u_val), q_rat(u_val), q_rat(v_val)},
              {q_rat(k4), q_rat(k4), q_rat(w2_val), q_rat(w2_val), q_rat(y_val)}};

  const quad_expr inv_alpha = q_rad(inv_alpha_coeff);
  const quad_expr w_over_n_inv_alpha = q_rad(w / nn * inv_alpha_coeff);
  const Rat p2_mid = w * (2 * bign - nn * nn - 2 * nn) / (nn * g);
  const Rat p2_last = -2 * bign * (2 * bign - nn * nn - nn) / (nn * g);
  const Rat p4_mid = -(nn + 2) * w / g;
  const Rat p4_last = 2 * (nn - 1) * bign / g;
  out.P = {{R1(), R1(), q_rat(k2), q_rat(k2), q_rat(k4)},
           {R1(), q_rat(Rat(-1)), -w_over_n_inv_alpha, w_over_n_inv_alpha, Z()},
           {R1(), R1(), q_rat(p2_mid), q_rat(p2_mid), q_rat(p2_last)},
           {R1(), q_rat(Rat(-1)), inv_alpha, -inv_alpha, Z()},
           {R1(), R1(), q_rat(p4_mid), q_rat(p4_mid), q_rat(p4_last)}};

  const Rat q_m2 = (nn + 2) * (nn - 1) / 2;
  const Rat q_m4 = (2 * bign - nn * nn - nn) / 2;
  const Rat q2_mid = (nn - 1) * (2 * bign - nn * nn - 2 * nn) / (2 * w);
  const Rat q2_last = -(2 * bign - nn * nn - nn) * nn / (2 * w);
  const quad_expr n_alpha = q_rad(nn);
  out.Q = {{R1(), q_rat(nn), q_rat(q_m2), q_rat(w), q_rat(q_m4)},
           {R1(), q_rat(-nn), q_rat(q_m2), q_rat(-w), q_rat(q_m4)},
           {R1(), -n_alpha, q_rat(q2_mid), n_alpha, q_rat(q2_last)},
           {R1(), n_alpha, q_rat(q2_mid), -n_alpha, q_rat(q2_last)},
           {R1(), Z(), q_rat(-(nn + 2) / 2), Z(), q_rat(nn / 2)}};

  out.B1_star = {{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)},
                 {nn, Rat(0), 2 * nn / (nn + 2), Rat(0), Rat(0)},
                 {Rat(0), nn - 1, Rat(0), (nn - 1) * nn * nn / (2 * w), Rat(0)},
                 {Rat(0), Rat(0), nn * nn / (nn + 2), Rat(0), nn},
                 {Rat(0), Rat(0), Rat(0), (2 * bign - nn * nn - nn) * nn / (2 * w), Rat(0)}};
  return out;
}

void validate_appendix1(const appendix1_parameters& ap) {
  const Rat two_n = ll_rat(2 * ap.N);
  // P Q = |X| I.
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < 5; ++k) {
      quad_expr acc = q_rat(Rat(0));
      for (int j = 0; j < 5; ++j)
        acc = acc + mul(ap.P[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                        ap.Q[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)],
                        ap.alpha_sq);
      const Rat expect = i == k ? two_n : Rat(0);
      if (acc.u != expect || acc.v != 0)
        throw parameter_out_of_range("appendix tables violate PQ = |X| I at (" +
                                     std::to_string(i) + "," + std::to_string(k) + ")");
    }
  // Multiplicities (Q row 0) are rational and sum to |X|.
  Rat msum(0);
  for (int j = 0; j < 5; ++j) {
    const quad_expr& e = ap.Q[0][static_cast<std::size_t>(j)];
    if (e.v != 0) throw parameter_out_of_range("irrational multiplicity");
    msum += e.u;
  }
  if (msum != two_n) throw parameter_out_of_range("multiplicities do not sum to |X|");
  // Column sums of each B_i equal the valency P(0, i).
  for (int i = 0; i < 5; ++i) {
    const quad_expr& val = ap.P[0][static_cast<std::size_t>(i)];
    for (int j = 0; j < 5; ++j) {
      quad_expr acc = q_rat(Rat(0));
      for (int k = 0; k < 5; ++k)
        acc = acc + ap.B[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]
                        [static_cast<std::size_t>(j)];
      if (acc.u != val.u || acc.v != val.v)
        throw parameter_out_of_range("B_" + std::to_string(i) +
                                     " column sum differs from the valency");
    }
  }
}

appendix2_parameters appendix2(int r) {
  if (r < 1) throw parameter_out_of_range("appendix 2 requires r >= 1");
  if (r > 14) throw parameter_out_of_range("r too large for 64-bit |X|");
  appendix2_parameters out;
  out.r = r;
  out.n = 1 << (2 * r);
  out.N = (1LL << (4 * r - 1)) + (1LL << (2 * r));

  auto p2 = [](int e) { return Rat(Int(1) << e); };
  const Rat n = p2(2 * r);
  const Rat z(0), one(1);

  out.B[0] = rat_matrix(5, std::vector<Rat>(5, z));
  for (int i = 0; i < 5; ++i) out.B[0][static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = one;

  out.B[1] = {{z, one, z, z, z},
              {one, z, z, z, z},
              {z, z, z, one, z},
              {z, z, one, z, z},
              {z, z, z, z, one}};

  // 2^{r-2}(2^{2r}-2)(2^r -+ 1); fractional prefactor at r = 1 cancels.
  const Rat a_minus = Rat(Int(1) << r) / 4 * (n - 2) * (p2(r) - 1);
  const Rat a_plus = Rat(Int(1) << r) / 4 * (n - 2) * (p2(r) + 1);
  const Rat k2 = p2(4 * r - 1);
  const Rat t_val = p2(4 * r - 2);
  const Rat u_val = n - 1;
  out.B[2] = {{z, z, one, z, z},
              {z, z, z, one, z},
              {k2, z, a_minus, a_plus, t_val},
              {z, k2, a_plus, a_minus, t_val},
              {z, z, u_val, u_val, z}};
  out.B[3] = {{z, z, z, one, z},
              {z, z, one, z, z},
              {z, k2, a_plus, a_minus, t_val},
              {k2, z, a_minus, a_plus, t_val},
              {z, z, u_val, u_val, z}};
  out.B[4] = {{z, z, z, z, one},
              {z, z, z, z, one},
              {z, z, u_val, u_val, z},
              {z, z, u_val, u_val, z},
              {2 * (n - 1), 2 * (n - 1), z, z, 2 * (n - 2)}};

  out.P = {{one, one, k2, k2, 2 * (n - 1)},
           {one, -one, -p2(3 * r - 1), p2(3 * r - 1), z},
           {one, one, z, z, Rat(-2)},
           {one, -one, p2(r), -p2(r), z},
           {one, one, -n, -n, 2 * (n - 1)}};

  const Rat m2 = (n - 1) * (p2(2 * r - 1) + 1);
  out.Q = {{one, n, m2, p2(4 * r - 1), p2(2 * r - 1)},
           {one, -n, m2, -p2(4 * r - 1), p2(2 * r - 1)},
           {one, -p2(r), z, p2(r), -one},
           {one, p2(r), z, -p2(r), -one},
           {one, z, -p2(2 * r - 1) - 1, z, p2(2 * r - 1)}};

  out.B1_star = {{z, one, z, z, z},
                 {n, z, n / (p2(2 * r - 1) + 1), z, z},
                 {z, n - 1, z, n - 1, z},
                 {z, z, p2(4 * r) / (n + 2), z, n},
                 {z, z, z, one, z}};
  return out;
}

std::vector<feasibility_candidate> feasibility_scan(int n_max, long long m_min,
                                                    long long m_max) {
  std::vector<feasibility_candidate> out;
  for (long long m = std::max(1LL, m_min); m <= m_max; ++m)
    for (int n = 3; n <= n_max; ++n) {
      // alpha^2 = 1/m^2 solves to N = n(n+2)(m^2-1) / (3m^2 - n - 2).
      const long long den = 3 * m * m - n - 2;
      if (den <= 0) break;  // larger n only makes it worse for this m
      const long long num = static_cast<long long>(n) * (n + 2) * (m * m - 1);
      if (num <= 0 || num % den != 0) continue;
      const long long N = num / den;
      const Rat bign = Rat(static_cast<long>(N));
      if (!(Rat(n) * Rat(n + 1) / 2 < bign && bign <= Rat(n) * Rat(n + 1) * Rat(n + 2) / 6))
        continue;

      appendix1_parameters ap = appendix1(n, N);
      validate_appendix1(ap);

      feasibility_candidate cand;
      cand.n = n;
      cand.N = N;
      cand.m = m;
      cand.rational_ok = ap.alpha.has_value() && *ap.alpha == make_rat(1, static_cast<long>(m));

      cand.integral_ok = true;
      Int msum(0);
      for (int j = 0; j < 5; ++j) {
        const Rat& mult = ap.Q[0][static_cast<std::size_t>(j)].u;
        if (mult.get_den() != 1 || mult <= 0) cand.integral_ok = false;
        cand.multiplicities.push_back(mult.get_num());
        msum += mult.get_num();
      }
      if (msum != Int(2) * Int(static_cast<long>(N))) cand.integral_ok = false;

      bool first = true;
      cand.nonnegative_ok = true;
      for (const auto& row : ap.B1_star)
        for (const Rat& v : row) {
          if (first || v < cand.krein_min) {
            cand.krein_min = v;
            first = false;
          }
          if (v < 0) cand.nonnegative_ok = false;
        }

      if (cand.rational_ok && cand.integral_ok && cand.nonnegative_ok)
        out.push_back(std::move(cand));
    }
  return out;
}

}  // namespace qpas
