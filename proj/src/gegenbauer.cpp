#include "qpas/gegenbauer.hpp"

namespace qpas {

Int harm_dim(int n, int l) {
  if (n < 2) throw dimension_too_small(n);
  if (l < 0) return Int(0);
  return binomial(n + l - 1, l) - binomial(n + l - 3, l - 2);
}

gegenbauer_basis::gegenbauer_basis(int dim, int cap) : n_(dim), cap_(cap) {
  if (dim < 2) throw dimension_too_small(dim);
  if (cap < 1) cap_ = 1;
  coef_.resize(static_cast<std::size_t>(cap_) + 1);
  coef_[0] = {Rat(1)};
  coef_[1] = {Rat(0), Rat(n_)};
  for (int l = 1; l < cap_; ++l) {
    // c_l = (n+l-3)/(n+2l-4); the n=2, l=1 case degenerates to 1
    // (the circle's polynomials are the doubled Chebyshev family).
    Rat c = (n_ == 2 && l == 1) ? Rat(1) : make_rat(n_ + l - 3, n_ + 2 * l - 4);
    Rat scale = make_rat(n_ + 2 * l, l + 1);
    std::vector<Rat> next(static_cast<std::size_t>(l) + 2, Rat(0));
    for (int p = 0; p <= l; ++p) {
      Rat t = scale * coef_[static_cast<std::size_t>(l)][static_cast<std::size_t>(p)];
      next[static_cast<std::size_t>(p) + 1] += t;
    }
    for (int p = 0; p < l; ++p) {
      Rat t = scale * c * coef_[static_cast<std::size_t>(l) - 1][static_cast<std::size_t>(p)];
      next[static_cast<std::size_t>(p)] -= t;
    }
    coef_[static_cast<std::size_t>(l) + 1] = std::move(next);
  }
}

void gegenbauer_basis::require(int l) const {
  if (l < 0 || l > cap_) throw cap_exceeded(l, cap_);
}

const std::vector<Rat>& gegenbauer_basis::coefficients(int l) const {
  require(l);
  return coef_[static_cast<std::size_t>(l)];
}

std::vector<Rat> gegenbauer_basis::monomial_expansion(int lambda) const {
  require(lambda);
  std::vector<Rat> f(static_cast<std::size_t>(lambda) + 1, Rat(0));
  std::vector<Rat> residual(static_cast<std::size_t>(lambda) + 1, Rat(0));
  residual[static_cast<std::size_t>(lambda)] = Rat(1);
  for (int l = lambda; l >= 0; --l) {
    const Rat& r = residual[static_cast<std::size_t>(l)];
    if (r == 0) continue;
    const std::vector<Rat>& pl = coef_[static_cast<std::size_t>(l)];
    Rat fl = r / pl[static_cast<std::size_t>(l)];
    f[static_cast<std::size_t>(l)] = fl;
    for (int p = 0; p <= l; ++p)
      residual[static_cast<std::size_t>(p)] -= fl * pl[static_cast<std::size_t>(p)];
  }
  return f;
}

std::map<int, Rat> gegenbauer_basis::linearization(int i, int j) const {
  require(i);
  require(j);
  require(i + j);
  const std::vector<Rat>& a = coef_[static_cast<std::size_t>(i)];
  const std::vector<Rat>& b = coef_[static_cast<std::size_t>(j)];
  std::vector<Rat> prod(static_cast<std::size_t>(i + j) + 1, Rat(0));
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (a[p] == 0) continue;
    for (std::size_t q = 0; q < b.size(); ++q) {
      if (b[q] == 0) continue;
      prod[p + q] += a[p] * b[q];
    }
  }
  std::map<int, Rat> out;
  for (int l = i + j; l >= 0; --l) {
    const Rat& r = prod[static_cast<std::size_t>(l)];
    if (r == 0) continue;
    const std::vector<Rat>& pl = coef_[static_cast<std::size_t>(l)];
    Rat ql = r / pl[static_cast<std::size_t>(l)];
    for (int p = 0; p <= l; ++p)
      prod[static_cast<std::size_t>(p)] -= ql * pl[static_cast<std::size_t>(p)];
    if (ql != 0) out.emplace(l, std::move(ql));
  }
  return out;
}

std::map<int, Rat> gegenbauer_basis::product_poly(int lambda, int mu) const {
  std::vector<Rat> fl = monomial_expansion(lambda);
  std::vector<Rat> fm = monomial_expansion(mu);
  std::map<int, Rat> out;
  const int top = std::min(lambda, mu);
  for (int l = 0; l <= top; ++l) {
    Rat v = fl[static_cast<std::size_t>(l)] * fm[static_cast<std::size_t>(l)];
    if (v != 0) out.emplace(l, std::move(v));
  }
  return out;
}

}  // namespace qpas
