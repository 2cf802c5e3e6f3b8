#pragma once

#include <map>
#include <vector>

#include "qpas/errors.hpp"
#include "qpas/rational.hpp"
#include "qpas/scalar.hpp"

namespace qpas {

/// dim Harm_l(R^n) = C(n+l-1, l) - C(n+l-3, l-2). Throws for n < 2.
Int harm_dim(int n, int l);

/// Zonal orthogonal polynomials on S^{n-1}, normalized so the value at 1 is
/// dim Harm_l(R^n). Coefficients are generated by the three-term recurrence
///   (l+1)/(n+2l) P_{l+1} = x P_l - (n+l-3)/(n+2l-4) P_{l-1}
/// seeded with P_0 = 1, P_1 = n x, and cached in the monomial basis as exact
/// rationals up to a fixed degree cap.
class gegenbauer_basis {
 public:
  explicit gegenbauer_basis(int dim, int cap = 24);

  int dim() const { return n_; }
  int cap() const { return cap_; }

  /// Monomial coefficients of the degree-l polynomial (size l+1; only
  /// coefficients of the same parity as l are nonzero).
  const std::vector<Rat>& coefficients(int l) const;

  template <class S>
  S eval(int l, const S& x) const {
    const std::vector<Rat>& c = coefficients(l);
    S acc = from_rat<S>(c[static_cast<std::size_t>(l)]);
    for (int p = l - 1; p >= 0; --p) {
      S next = acc * x + from_rat<S>(c[static_cast<std::size_t>(p)]);
      acc = next;
    }
    return acc;
  }

  /// x^lambda = sum_l f[l] * P_l(x); f has size lambda+1.
  std::vector<Rat> monomial_expansion(int lambda) const;

  /// P_i * P_j = sum_k q_k(i,j) P_k with k = |i-j| .. i+j stepping by 2.
  /// Zero coefficients are omitted.
  std::map<int, Rat> linearization(int i, int j) const;

  /// Coefficients of F_{lambda,mu} in the P basis:
  /// l -> f_{lambda,l} * f_{mu,l} for l <= min(lambda, mu), zeros omitted.
  std::map<int, Rat> product_poly(int lambda, int mu) const;

 private:
  void require(int l) const;

  int n_;
  int cap_;
  std::vector<std::vector<Rat>> coef_;
};

}  // namespace qpas
