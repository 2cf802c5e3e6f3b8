#include "qpas/theorems.hpp"

namespace qpas {

hypothesis_record check_applicability(int s, int t, bool antipodal) {
  hypothesis_record h;
  h.s = s;
  h.t = t;
  h.antipodal = antipodal;
  h.strength_ok = t >= 2 * s - 3;
  h.applicable = antipodal && h.strength_ok;
  return h;
}

std::vector<Rat> expected_multiplicities(int n, int s, long long x_size) {
  std::vector<Rat> m;
  m.reserve(static_cast<std::size_t>(s) + 1);
  const Rat half = make_rat(static_cast<long>(x_size), 2);
  for (int i = 0; i <= s - 2; ++i) m.push_back(Rat(harm_dim(n, i)));
  if (s >= 1) m.push_back(half - Rat(binomial(n + s - 4, s - 3)));
  m.push_back(half - Rat(binomial(n + s - 3, s - 2)));
  return m;
}

b1star_band expected_b1star_band(int n, int s, long long x_size) {
  b1star_band band;
  if (s < 1) return band;
  band.super.assign(static_cast<std::size_t>(s), Rat(0));
  band.sub.assign(static_cast<std::size_t>(s), Rat(0));
  if (s == 1) {
    band.super[0] = Rat(1);
    band.sub[0] = Rat(n);
    band.valid = true;
    return band;
  }

  // Shared denominator of the two end entries.
  const Rat den = Rat(factorial(s - 2) * factorial(n - 1)) * Rat(static_cast<long>(x_size)) -
                  Rat(2 * (s - 2)) * Rat(factorial(n + s - 4));
  if (den == 0) return band;

  for (int e = 0; e < s; ++e) {
    const int i = e + 1;  // super[e] = q_{1,e}^{e+1} = c_i^*
    if (i <= s - 2) {
      band.super[static_cast<std::size_t>(e)] = make_rat(static_cast<long>(n) * i, n + 2 * i - 2);
    } else if (i == s - 1) {
      band.super[static_cast<std::size_t>(e)] =
          Rat(2L * n * (n - 1)) * Rat(factorial(n + s - 4)) / den;
    } else {
      band.super[static_cast<std::size_t>(e)] = Rat(n);
    }
  }
  for (int e = 0; e < s; ++e) {
    const int i = e + 1;  // sub[e] = q_{1,i}^{i-1}
    if (i == 1) {
      band.sub[static_cast<std::size_t>(e)] = Rat(n);
    } else if (i <= s - 1) {
      band.sub[static_cast<std::size_t>(e)] =
          make_rat(static_cast<long>(n) * (n + i - 3), n + 2 * i - 4);
    } else {
      band.sub[static_cast<std::size_t>(e)] =
          (Rat(factorial(s - 2)) * Rat(factorial(n)) * Rat(static_cast<long>(x_size)) -
           Rat(2L * n) * Rat(factorial(n + s - 3))) /
          den;
    }
  }
  band.valid = true;
  return band;
}

}  // namespace qpas
